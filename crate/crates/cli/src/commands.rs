//! Subcommand implementations.

use std::io::Write;

use emergent_algebra::braided::{
    audit_sigma, braid_audit_continuous, check_left_invariance, SigmaExtension, TangentMetric,
};
use emergent_algebra::emergent::{check_distributive, run_check, sample_rng, SampleRng};
use emergent_algebra::finite::{braid_audit, check_loos, classify, enumerate_quandles, OpTable};
use emergent_algebra::limits::{
    audit_conical, audit_group_tangent, check_a2_conjugated, check_a2_group, check_cone,
    check_nondegenerate, cone_report, tangent_difference, ConvergenceReport, Schedule,
    TangentCarrier,
};
use emergent_algebra::models::{
    euclidean, heisenberg, Chart, ConjugatedStructure, DilationGroup, GroupModel, HeisenbergPoint,
    ModelSpec, QuadraticChart,
};
use emergent_algebra::pansu::{
    audit_morphism, check_chain_rule, check_point_symmetry, check_uniform_derivative,
    heisenberg_swap, is_scale_independent, pansu_derivative_point, probe,
};
use emergent_algebra::{audit_identities, audit_irq, AuditReport, CheckResult, IrqFamily};

use crate::config::{CommandDefaults, ConfigFile, ExperimentConfig, Overrides, JOBS_ENV};
use crate::error::{CliError, EXIT_CHECK_FAILED, EXIT_OK};
use crate::report::{emit_report, write_output, Primary, Report};
use clap::ValueEnum;

use crate::{Cli, Command, ConvergeCheck, PansuMap, Property};

/// Base-point samples tried before accepting that `σ^x` moves points.
const SIGMA_PROBE_POINTS: usize = 16;
/// Allowed gap between sup-residual and pointwise convergence orders.
const UNIFORMITY_SLACK: f64 = 0.3;
/// Expected order of the chart-map derivative, and its allowed deviation.
const CHART_ORDER: f64 = 1.0;
const CHART_ORDER_SLACK: f64 = 0.2;

pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let (name, defaults, model_flag) = match &cli.command {
        Command::Audit { model } => ("audit", with_model(1000), model.clone()),
        Command::Finite { .. } => ("finite", no_model(), None),
        Command::Enumerate { .. } => ("enumerate", no_model(), None),
        Command::Converge { model, .. } => ("converge", with_model(100), model.clone()),
        Command::Braid { model } => ("braid", with_model(1000), model.clone()),
        Command::Pansu { .. } => ("pansu", no_model(), None),
    };
    let flags = Overrides {
        model: model_flag,
        seed: cli.seed,
        samples: cli.samples,
        depth: cli.depth,
        output: cli.output.clone(),
        format: cli.format,
        jobs: cli.jobs,
        tolerance: cli.tolerance,
    };
    let mut cfg = ExperimentConfig::resolve(name, defaults, file, flags, std::env::var(JOBS_ENV).ok())?;
    let model = match &cfg.model {
        Some(m) if defaults_use_model(name) => Some(m.parse::<ModelSpec>()?),
        _ => None,
    };
    if !defaults_use_model(name) {
        cfg.model = None;
    }
    let sch = Schedule::depth(cfg.depth)?;

    let work = |cfg: ExperimentConfig| -> Result<Outcome, CliError> {
        let report = match cli.command {
            Command::Audit { .. } => audit(cfg, model.expect("resolved")),
            Command::Finite { table, require } => finite(cfg, &table, &require)?,
            Command::Enumerate { n } => return enumerate(n).map(Outcome::Tables),
            Command::Converge { check, .. } => converge(cfg, model.expect("resolved"), check, &sch)?,
            Command::Braid { .. } => braid(cfg, model.expect("resolved"), &sch)?,
            Command::Pansu { map } => pansu(cfg, map, &sch),
        };
        Ok(Outcome::Report(Box::new(report)))
    };
    let jobs = cfg.jobs;
    let format = cfg.format;
    let output = cfg.output.clone();
    let outcome = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {j} workers: {e}")))?
            .install(|| work(cfg))?,
        None => work(cfg)?,
    };
    let report = match outcome {
        Outcome::Tables(bytes) => {
            write_output(&bytes, output.as_deref(), stdout)?;
            return Ok(EXIT_OK);
        }
        Outcome::Report(r) => r,
    };
    emit_report(&report, format, output.as_deref(), stdout)?;
    match report.failure() {
        None => Ok(EXIT_OK),
        Some(msg) => {
            let _ = writeln!(stderr, "{msg}");
            Ok(EXIT_CHECK_FAILED)
        }
    }
}

enum Outcome {
    Report(Box<Report>),
    /// Canonical table list, written as is.
    Tables(Vec<u8>),
}

fn with_model(samples: usize) -> CommandDefaults {
    CommandDefaults {
        model: Some("heisenberg"),
        samples,
    }
}

fn no_model() -> CommandDefaults {
    CommandDefaults {
        model: None,
        samples: 100,
    }
}

fn defaults_use_model(command: &str) -> bool {
    matches!(command, "audit" | "converge" | "braid")
}

// ---------------------------------------------------------------- audit

fn audit_family<F: IrqFamily>(f: &F, n: usize, seed: u64) -> AuditReport {
    let mut report = audit_irq(f, n, seed);
    report.extend(audit_identities(f, n, seed));
    report.push(check_distributive(f, n, seed));
    report
}

fn audit(cfg: ExperimentConfig, model: ModelSpec) -> Report {
    let (n, seed) = (cfg.samples, cfg.seed);
    let a = match model {
        ModelSpec::Heisenberg => audit_family(&heisenberg(), n, seed),
        ModelSpec::Euclidean(k) => audit_family(&euclidean(k), n, seed),
        ModelSpec::ConjugatedDefault => audit_family(&ConjugatedStructure::default_quadratic(), n, seed),
    };
    Report::audit(cfg, a)
}

// ---------------------------------------------------------------- finite

fn witness_text(labels: &[&str], w: Option<&Vec<usize>>) -> Option<String> {
    w.map(|w| {
        w.iter()
            .zip(labels)
            .map(|(v, l)| format!("{l}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    })
}

fn table_check(name: &str, samples: usize, passed: bool, witness: Option<String>, required: bool) -> CheckResult {
    let c = if passed {
        CheckResult::pass(name, samples)
    } else {
        CheckResult::fail(name, samples, witness.unwrap_or_default())
    };
    if required {
        c
    } else {
        c.informational()
    }
}

fn finite(mut cfg: ExperimentConfig, path: &std::path::Path, require: &[Property]) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
    let t = OpTable::from_json(&text)?;
    cfg.params.insert("table".into(), path.display().to_string());
    let names: Vec<String> = require
        .iter()
        .map(|p| p.to_possible_value().expect("no skipped variants").get_name().to_string())
        .collect();
    cfg.params.insert("require".into(), names.join(","));

    let n = t.n();
    let (n1, n2, n3) = (n, n * n, n * n * n);
    let flags = classify(&t);
    let loos = check_loos(&t);
    let braid = braid_audit(&t);
    let req = |p: Property| require.contains(&p);
    let w = |key: &str, labels: &[&str]| witness_text(labels, flags.witnesses.get(key));
    let xyz = ["x", "y", "z"];
    let triple = |v: Option<[usize; 3]>| v.map(|v| format!("x={} y={} z={}", v[0], v[1], v[2]));
    let pair = |v: Option<[usize; 2]>| v.map(|v| format!("x={} y={}", v[0], v[1]));
    // The first failing component of a conjunction.
    let first_of = |keys: &[(&str, &[&str])]| keys.iter().find_map(|(k, l)| w(k, l));

    let mut a = AuditReport::new(cfg.seed, 0.0);
    let rq_labels: &[&str] = &["x", "y1", "y2"];
    let col_labels: &[&str] = &["x1", "x2", "y"];
    a.push(table_check("right_quasigroup", n2, flags.right_quasigroup, w("right_quasigroup", rq_labels), req(Property::RightQuasigroup)));
    a.push(table_check(
        "quasigroup",
        n2,
        flags.quasigroup,
        first_of(&[("right_quasigroup", rq_labels), ("quasigroup", col_labels)]),
        req(Property::Quasigroup),
    ));
    a.push(table_check("idempotent", n1, flags.idempotent, w("idempotent", &xyz), req(Property::Idempotent)));
    a.push(table_check("self_distributive", n3, flags.self_distributive, w("self_distributive", &xyz), req(Property::SelfDistributive)));
    a.push(table_check(
        "rack",
        n3,
        flags.rack,
        first_of(&[("right_quasigroup", rq_labels), ("self_distributive", &xyz)]),
        req(Property::Rack),
    ));
    a.push(table_check(
        "quandle",
        n3,
        flags.quandle,
        first_of(&[("right_quasigroup", rq_labels), ("self_distributive", &xyz), ("idempotent", &xyz)]),
        req(Property::Quandle),
    ));
    a.push(table_check("involutory", n2, flags.involutory, w("involutory", &xyz), req(Property::Involutory)));
    let lw = |k: &str| witness_text(&xyz, loos.witnesses.get(k));
    a.push(table_check("loos_l1", n1, loos.l1, lw("L1"), req(Property::Loos)));
    a.push(table_check("loos_l2", n3, loos.l2, lw("L2"), req(Property::Loos)));
    a.push(table_check("loos_l3", n2, loos.l3, lw("L3"), req(Property::Loos)));
    a.push(table_check("loos_l4", n2, loos.l4, lw("L4"), req(Property::Loos)));
    a.push(table_check("braid_relation", n3, braid.braid_relation, triple(braid.braid_witness), req(Property::Braided)));
    a.push(table_check("braid_bijective", n2, braid.bijective, None, req(Property::Braided)));
    a.push(table_check("braid_nondegenerate", n2, braid.non_degenerate, pair(braid.degeneracy_witness), req(Property::Nondegenerate)));
    a.push(table_check("braid_involutive", n2, braid.involutive, pair(braid.involution_witness), req(Property::Involutive)));
    // Always required: the braid relation for S(x, y) = (x ∗ y, x) is
    // equivalent to self-distributivity.
    a.push(table_check(
        "braided_iff_self_distributive",
        n3,
        braid.braid_relation == flags.self_distributive,
        Some(format!("braid relation {} but self-distributivity {}", braid.braid_relation, flags.self_distributive)),
        true,
    ));
    Ok(Report::audit(cfg, a))
}

// ---------------------------------------------------------------- enumerate

fn enumerate(n: usize) -> Result<Vec<u8>, CliError> {
    let tables = enumerate_quandles(n)?;
    Ok(OpTable::list_to_json(&tables).into_bytes())
}

// ---------------------------------------------------------------- converge

fn convergence_report(cfg: ExperimentConfig, c: ConvergenceReport, audit: AuditReport, ok: bool) -> Report {
    let passed = ok && audit.all_passed();
    Report {
        config: cfg,
        passed,
        audit: Some(audit),
        convergence: Some(c),
        probes: Vec::new(),
        primary: Primary::Convergence,
    }
}

fn points<F: IrqFamily>(f: &F, seed: u64, salt: &str) -> (F::Point, F::Point, F::Point) {
    let mut rng = sample_rng(seed, salt, 0);
    (f.sample_point(&mut rng), f.sample_point(&mut rng), f.sample_point(&mut rng))
}

fn tangent_experiment<F: TangentCarrier>(f: &F, cfg: &ExperimentConfig, sch: &Schedule) -> (ConvergenceReport, AuditReport) {
    let (x, u, v) = points(f, cfg.seed, "converge_tangent");
    let c = tangent_difference(f, &x, &u, &v, sch);
    (c, audit_conical(f, &x, cfg.samples, cfg.seed, sch))
}

fn group_tangent<G: DilationGroup>(m: &GroupModel<G>, cfg: &ExperimentConfig, sch: &Schedule) -> (ConvergenceReport, AuditReport) {
    let (c, mut a) = tangent_experiment(m, cfg, sch);
    a.extend(audit_group_tangent(m, cfg.samples, cfg.seed, sch));
    (c, a)
}

fn group_a2<G: DilationGroup>(m: &GroupModel<G>, cfg: &ExperimentConfig, sch: &Schedule) -> (ConvergenceReport, AuditReport) {
    let (x, _, _) = points(m, cfg.seed, "converge_a2");
    let c = check_a2_group(m, &x, cfg.samples, cfg.seed, sch);
    let mut a = AuditReport::new(cfg.seed, 0.0);
    a.push(check_nondegenerate(m, cfg.samples, cfg.seed, |u, v| m.exact_path_distance(u, v)));
    (c, a)
}

fn group_cone<G: DilationGroup>(m: &GroupModel<G>, cfg: &ExperimentConfig, sch: &Schedule) -> (ConvergenceReport, AuditReport) {
    let triples: Vec<_> = (0..cfg.samples as u64)
        .map(|i| {
            let mut rng: SampleRng = sample_rng(cfg.seed, "converge_cone", i);
            (m.sample_point(&mut rng), m.sample_point(&mut rng), m.sample_point(&mut rng))
        })
        .collect();
    (cone_report(m, &triples, sch), check_cone(m, cfg.samples, cfg.seed))
}

fn exact_zero(c: &ConvergenceReport) -> bool {
    c.is_exact() && c.values.iter().all(|v| v.iter().all(|&r| r == 0.0))
}

fn converge(mut cfg: ExperimentConfig, model: ModelSpec, check: ConvergeCheck, sch: &Schedule) -> Result<Report, CliError> {
    let check_name = check.to_possible_value().expect("no skipped variants").get_name().to_string();
    cfg.params.insert("check".into(), check_name);
    let conj = ConjugatedStructure::default_quadratic;
    let (c, a, ok) = match (check, model) {
        (ConvergeCheck::Tangent, ModelSpec::Heisenberg) => {
            let (c, a) = group_tangent(&heisenberg(), &cfg, sch);
            let ok = c.converged();
            (c, a, ok)
        }
        (ConvergeCheck::Tangent, ModelSpec::Euclidean(k)) => {
            let (c, a) = group_tangent(&euclidean(k), &cfg, sch);
            let ok = c.converged();
            (c, a, ok)
        }
        (ConvergeCheck::Tangent, ModelSpec::ConjugatedDefault) => {
            let (c, a) = tangent_experiment(&conj(), &cfg, sch);
            let ok = c.converged();
            (c, a, ok)
        }
        (ConvergeCheck::A2, ModelSpec::Heisenberg) => {
            let (c, a) = group_a2(&heisenberg(), &cfg, sch);
            let ok = exact_zero(&c);
            (c, a, ok)
        }
        (ConvergeCheck::A2, ModelSpec::Euclidean(k)) => {
            let (c, a) = group_a2(&euclidean(k), &cfg, sch);
            let ok = exact_zero(&c);
            (c, a, ok)
        }
        (ConvergeCheck::A2, ModelSpec::ConjugatedDefault) => {
            let f = conj();
            let (x, _, _) = points(&f, cfg.seed, "converge_a2");
            let c = check_a2_conjugated(&f, &x, cfg.samples, cfg.seed, sch);
            let ok = c.converged() && c.limit.as_ref().is_some_and(|l| l[0].abs() <= cfg.tolerance);
            let mut a = AuditReport::new(cfg.seed, cfg.tolerance);
            a.push(check_nondegenerate(&f, cfg.samples, cfg.seed, |u, v| f.tangent_distance(&x, u, v)));
            (c, a, ok)
        }
        (ConvergeCheck::Cone, ModelSpec::Heisenberg) => {
            let (c, a) = group_cone(&heisenberg(), &cfg, sch);
            let ok = exact_zero(&c);
            (c, a, ok)
        }
        (ConvergeCheck::Cone, ModelSpec::Euclidean(k)) => {
            let (c, a) = group_cone(&euclidean(k), &cfg, sch);
            let ok = exact_zero(&c);
            (c, a, ok)
        }
        (ConvergeCheck::Cone, ModelSpec::ConjugatedDefault) => {
            return Err(CliError::Usage(
                "the cone check needs a normed group model (heisenberg or euclidean:<k>)".into(),
            ))
        }
    };
    Ok(convergence_report(cfg, c, a, ok))
}

// ---------------------------------------------------------------- braid

fn braid_family<F: TangentMetric>(f: F, cfg: &ExperimentConfig, sch: &Schedule) -> Result<AuditReport, CliError> {
    let ext = SigmaExtension::new(f, SIGMA_PROBE_POINTS, cfg.seed)?;
    let mut a = audit_sigma(&ext, cfg.samples, cfg.seed, sch);
    a.extend(braid_audit_continuous(&ext, cfg.samples, cfg.seed));
    Ok(a)
}

fn braid(cfg: ExperimentConfig, model: ModelSpec, sch: &Schedule) -> Result<Report, CliError> {
    let a = match model {
        ModelSpec::Heisenberg => {
            let mut a = braid_family(heisenberg(), &cfg, sch)?;
            a.push(check_left_invariance(&heisenberg(), cfg.samples, cfg.seed));
            a
        }
        ModelSpec::Euclidean(k) => {
            let mut a = braid_family(euclidean(k), &cfg, sch)?;
            a.push(check_left_invariance(&euclidean(k), cfg.samples, cfg.seed));
            a
        }
        ModelSpec::ConjugatedDefault => braid_family(ConjugatedStructure::default_quadratic(), &cfg, sch)?,
    };
    Ok(Report::audit(cfg, a))
}

// ---------------------------------------------------------------- pansu

/// Difference quotients constant in the scale, with the expected limit.
fn exact_derivative_check<M, E>(f: &M, expected: E, cfg: &ExperimentConfig, sch: &Schedule) -> CheckResult
where
    M: Fn(&HeisenbergPoint) -> HeisenbergPoint + Sync,
    E: Fn(&HeisenbergPoint) -> HeisenbergPoint + Sync,
{
    let h = heisenberg();
    run_check(
        "derivative_exact",
        cfg.samples,
        cfg.seed,
        |rng: &mut SampleRng| (h.sample_point(rng), h.sample_point(rng)),
        |(x, u)| {
            is_scale_independent(&h, &h, f, x, u, sch)
                && pansu_derivative_point(&h, &h, f, x, u, sch) == Some(expected(u))
        },
        |(x, u)| format!("x={} u={}", h.describe(x), h.describe(u)),
    )
}

fn heisenberg_map_report<M, E>(name: &str, f: &M, expected: E, cfg: ExperimentConfig, sch: &Schedule) -> Report
where
    M: Fn(&HeisenbergPoint) -> HeisenbergPoint + Sync,
    E: Fn(&HeisenbergPoint) -> HeisenbergPoint + Sync,
{
    let h = heisenberg();
    let (x, u, _) = points(&h, cfg.seed, "pansu_probe");
    let id = |p: &HeisenbergPoint| p.clone();
    let mut a = AuditReport::new(cfg.seed, 0.0);
    a.push(exact_derivative_check(f, expected, &cfg, sch));
    a.extend(audit_morphism(&h, &h, f, &x, cfg.samples, cfg.seed, sch));
    a.push(check_chain_rule(&h, &h, &h, f, &id, cfg.samples, cfg.seed, sch));
    a.push(check_uniform_derivative(&h, &h, f, cfg.samples, cfg.seed, sch, UNIFORMITY_SLACK));
    let p = probe(name, &h, &h, f, &x, &u, sch);
    pansu_report(cfg, a, p)
}

fn pansu_report(cfg: ExperimentConfig, a: AuditReport, p: emergent_algebra::pansu::DerivativeProbe) -> Report {
    let mut r = Report::audit(cfg, a);
    r.passed = r.passed && p.report.converged();
    r.probes.push(p);
    r
}

fn pansu(mut cfg: ExperimentConfig, map: PansuMap, sch: &Schedule) -> Report {
    let name = map.to_possible_value().expect("no skipped variants").get_name().to_string();
    cfg.params.insert("map".into(), name.clone());
    match map {
        PansuMap::Identity => {
            cfg.model = Some("heisenberg".into());
            heisenberg_map_report(&name, &|p: &HeisenbergPoint| p.clone(), |u| u.clone(), cfg, sch)
        }
        PansuMap::Swap => {
            cfg.model = Some("heisenberg".into());
            heisenberg_map_report(&name, &heisenberg_swap, heisenberg_swap, cfg, sch)
        }
        PansuMap::Sigma => {
            cfg.model = Some("heisenberg".into());
            let ext = SigmaExtension::new(heisenberg(), SIGMA_PROBE_POINTS, cfg.seed)
                .expect("the Heisenberg point symmetries are nontrivial");
            let h = ext.family();
            let (x, u, _) = points(h, cfg.seed, "pansu_probe");
            let psi = |p: &HeisenbergPoint| ext.sigma_apply(&x, p);
            let mut a = AuditReport::new(cfg.seed, 0.0);
            a.push(check_point_symmetry(&ext, cfg.samples, cfg.seed, sch));
            a.extend(audit_morphism(h, h, &psi, &x, cfg.samples, cfg.seed, sch));
            let p = probe(&name, h, h, &psi, &x, &u, sch);
            pansu_report(cfg, a, p)
        }
        PansuMap::Chart => {
            cfg.model = Some("euclidean-float:2".into());
            let flat = ConjugatedStructure::flat(2);
            let phi = |p: &Vec<f64>| QuadraticChart.forward(p);
            let psi = |p: &Vec<f64>| QuadraticChart.inverse(p);
            let (x, u, _) = points(&flat, cfg.seed, "pansu_probe");
            let tol = cfg.tolerance;
            let mut a = AuditReport::new(cfg.seed, tol);
            a.push(run_check(
                "derivative_rate",
                cfg.samples,
                cfg.seed,
                |rng: &mut SampleRng| (flat.sample_point(rng), flat.sample_point(rng)),
                |(x, u)| {
                    let r = emergent_algebra::pansu::pansu_derivative(&flat, &flat, &phi, x, u, sch);
                    let taylor = chart_taylor(x, u);
                    r.converged()
                        && r.rate.order().is_some_and(|p| (p - CHART_ORDER).abs() <= CHART_ORDER_SLACK)
                        && r.limit.as_ref().is_some_and(|l| {
                            l.iter().zip(&taylor).all(|(a, b)| (a - b).abs() <= tol)
                        })
                },
                |(x, u)| format!("x={} u={}", flat.describe(x), flat.describe(u)),
            ));
            a.extend(audit_morphism(&flat, &flat, &phi, &x, cfg.samples, cfg.seed, sch));
            a.push(check_chain_rule(&flat, &flat, &flat, &phi, &psi, cfg.samples, cfg.seed, sch));
            a.push(check_uniform_derivative(&flat, &flat, &phi, cfg.samples, cfg.seed, sch, UNIFORMITY_SLACK));
            let p = probe(&name, &flat, &flat, &phi, &x, &u, sch);
            pansu_report(cfg, a, p)
        }
    }
}

/// First-order Taylor value `φ(x) + Dφ(x)(u − x)` of the quadratic chart
/// `φ(a, b) = (a, b + a²)`.
fn chart_taylor(x: &[f64], u: &[f64]) -> Vec<f64> {
    let (da, db) = (u[0] - x[0], u[1] - x[1]);
    vec![x[0] + da, x[1] + x[0] * x[0] + db + 2.0 * x[0] * da]
}
