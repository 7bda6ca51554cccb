use std::fs;

use emergent_cli::{run, EXIT_CHECK_FAILED, EXIT_INPUT_FORMAT, EXIT_IO, EXIT_OK, EXIT_USAGE};

fn emergent(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("emergent").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const DIHEDRAL3: &str = "{\"n\": 3, \"table\": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]}";

#[test]
fn finite_dihedral_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dihedral3.json");
    fs::write(&path, DIHEDRAL3).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = emergent(&["finite", "--table", p, "--require", "quandle,involutory,loos,braided"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("check,samples,status,witness\n"));
    for row in ["quandle,27,pass,", "involutory,9,pass,", "loos_l4,9,pass,", "braid_relation,27,pass,"] {
        assert!(out.contains(row), "{row} missing from\n{out}");
    }
}

#[test]
fn failed_finite_requirement_carries_triple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.json");
    fs::write(&path, "{\"n\": 3, \"table\": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}").unwrap();
    let (code, out, err) = emergent(&["finite", "--table", path.to_str().unwrap(), "--require", "braided"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    let row = out.lines().find(|l| l.starts_with("braid_relation,")).unwrap();
    assert!(row.contains(",fail,x=0 y=0 z=1") || row.contains(",fail,x="), "{row}");
    assert!(err.contains("braid_relation"));
    // Without requirements only the consistency check is enforced.
    let (code, out, _) = emergent(&["finite", "--table", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("braid_relation,27,violated,"));
}

#[test]
fn malformed_and_missing_tables() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"n\": 2, \"table\": [[0, 5], [1, 1]]}").unwrap();
    let (code, _, err) = emergent(&["finite", "--table", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT_FORMAT);
    assert!(err.contains("(0, 1)"), "{err}");
    let missing = dir.path().join("missing.json");
    assert_eq!(emergent(&["finite", "--table", missing.to_str().unwrap()]).0, EXIT_IO);
}

#[test]
fn enumerate_writes_canonical_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q2.json");
    let (code, out, _) = emergent(&["enumerate", "--n", "2", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let tables = emergent_algebra::finite::OpTable::list_from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(tables.len(), 1);
    assert_eq!(emergent(&["enumerate", "--n", "7"]).0, EXIT_USAGE);
}

#[test]
fn cone_report_has_zero_residuals() {
    let (code, out, _) = emergent(&["converge", "--model", "heisenberg", "--check", "cone", "--samples", "50"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("epsilon,value,residual"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 21);
    assert!(rows[..20].iter().all(|r| r.ends_with(",0,0")));
    assert_eq!(rows[20], "limit[exact],0,0");
}

#[test]
fn json_report_records_config() {
    let (code, out, _) = emergent(&["audit", "--model", "euclidean:2", "--samples", "20", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["config"]["model"], "euclidean:2");
    assert_eq!(v["config"]["seed"], emergent_cli::DEFAULT_SEED);
    assert_eq!(v["config"]["samples"], 20);
    assert!(v["config"]["defaulted"].as_array().unwrap().iter().any(|d| d == "seed"));
    assert_eq!(v["passed"], true);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, "{\"model\": \"euclidean:1\", \"seed\": 5, \"samples\": 10, \"format\": \"json\"}").unwrap();
    let c = cfg.to_str().unwrap();
    let (code, out, _) = emergent(&["audit", "--config", c, "--seed", "6"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!((v["config"]["seed"].as_u64(), v["config"]["samples"].as_u64()), (Some(6), Some(10)));
    assert_eq!(v["config"]["model"], "euclidean:1");
    fs::write(&cfg, "{\"modle\": \"heisenberg\"}").unwrap();
    assert_eq!(emergent(&["audit", "--config", c]).0, EXIT_INPUT_FORMAT);
}

#[test]
fn usage_errors() {
    assert_eq!(emergent(&["audit", "--model", "sphere"]).0, EXIT_USAGE);
    assert_eq!(emergent(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(emergent(&["converge", "--model", "conjugated", "--check", "cone"]).0, EXIT_USAGE);
    assert_eq!(emergent(&["audit", "--depth", "1"]).0, EXIT_USAGE);
    assert_eq!(emergent(&["audit", "--jobs", "0"]).0, EXIT_USAGE);
    let (code, out, _) = emergent(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("enumerate"));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no/such/dir/out.csv");
    let (code, _, _) = emergent(&["audit", "--samples", "5", "--output", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn pansu_swap_is_exact() {
    let (code, out, _) = emergent(&["pansu", "--map", "swap", "--samples", "10"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("derivative_exact,10,pass,"));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = emergent(&["braid", "--samples", "50", "--jobs", "1"]);
    let four = emergent(&["braid", "--samples", "50", "--jobs", "4"]);
    assert_eq!(one, four);
}
