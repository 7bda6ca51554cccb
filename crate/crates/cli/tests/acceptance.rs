//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use emergent_algebra::braided::{audit_sigma, braid_audit_continuous, SigmaExtension};
use emergent_algebra::emergent::{check_distributive, sample_rng, Scale, IDENTITY_NAMES};
use emergent_algebra::finite::{
    braid_audit, check_loos, dihedral_quandle, enumerate_quandles, trivial_quandle,
};
use emergent_algebra::limits::{
    audit_group_tangent, check_a2_conjugated, check_a2_group, estimate_family, Schedule,
};
use emergent_algebra::models::{euclidean, heisenberg, Chart, ConjugatedStructure, QuadraticChart};
use emergent_algebra::pansu::{
    audit_morphism, check_point_symmetry, heisenberg_swap, is_scale_independent,
    pansu_derivative, pansu_derivative_point,
};
use emergent_algebra::rational::to_f64;
use emergent_algebra::{audit_identities, IrqFamily};

const SEED: u64 = 20_240_601;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn identities() -> Outcome {
    let start = Instant::now();
    let r = audit_identities(&heisenberg(), 1000, SEED);
    let t = start.elapsed();
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    let ok = r.all_passed() && names == IDENTITY_NAMES && r.checks.iter().all(|c| c.samples == 1000);
    let detail = match r.first_failure() {
        Some(c) => format!("{} failed: {}", c.name, c.witness.clone().unwrap_or_default()),
        None => format!("8 identities, 1000 samples each, {:.2}s (limit 10s)", t.as_secs_f64()),
    };
    outcome(ok && within(t, 10.0), detail)
}

fn distributivity() -> Outcome {
    let h = check_distributive(&heisenberg(), 1000, SEED);
    let e = check_distributive(&euclidean(3), 1000, SEED);
    let tangent = audit_group_tangent(&heisenberg(), 1000, SEED, &Schedule::default());
    let sum = tangent.get("tangent_sum_is_group_law").expect("present");
    let diff = tangent.get("tangent_difference_is_x_uinv_v").expect("present");
    let ok = h.passed && e.passed && sum.passed && diff.passed;
    outcome(
        ok,
        format!(
            "distributive heisenberg={} euclidean={}; limit sum at e = u·v: {}; limit difference = x u⁻¹ v: {}",
            h.status(),
            e.status(),
            sum.status(),
            diff.status()
        ),
    )
}

fn braided_sets() -> Outcome {
    let start = Instant::now();
    let mut tables = Vec::new();
    for n in 1..=5 {
        tables.extend(enumerate_quandles(n).expect("in range"));
    }
    let quandles = tables.len();
    tables.extend((3..=9).map(dihedral_quandle));
    let failures: Vec<_> = tables
        .iter()
        .filter(|t| !braid_audit(t).braid_relation)
        .collect();
    let t = start.elapsed();
    outcome(
        failures.is_empty() && within(t, 30.0),
        format!(
            "{quandles} quandles of orders 1-5 and R3..R9, all n^3 triples, {} failures, {:.2}s (limit 30s)",
            failures.len(),
            t.as_secs_f64()
        ),
    )
}

fn heisenberg_braided() -> Outcome {
    let start = Instant::now();
    let ext = SigmaExtension::new(heisenberg(), 16, SEED).expect("σ is nontrivial");
    let sigma = audit_sigma(&ext, 1000, SEED, &Schedule::default());
    let braid = braid_audit_continuous(&ext, 1000, SEED);
    let t = start.elapsed();
    let required = [
        "sigma_involutive",
        "sigma_commutes_with_dilations",
        "sigma_isometry",
        "sigma_difference_morphism",
    ];
    let ok = required.iter().all(|n| sigma.get(n).is_some_and(|c| c.passed))
        && sigma.all_passed()
        && braid.get("braid_relation").is_some_and(|c| c.passed)
        && braid.all_passed();
    let failed = sigma.first_failure().or(braid.first_failure()).map(|c| c.name.clone());
    outcome(
        ok && within(t, 10.0),
        format!(
            "four σ checks and braid relation on 1000 rational samples, first failure: {}, {:.2}s (limit 10s)",
            failed.as_deref().unwrap_or("none"),
            t.as_secs_f64()
        ),
    )
}

fn metric_cone() -> Outcome {
    let h = heisenberg();
    let x = h.sample_point(&mut sample_rng(SEED, "acceptance_a2", 0));
    let sch = Schedule::default();
    let r = check_a2_group(&h, &x, 100, SEED, &sch);
    let zero = r.values.len() == sch.len() && r.values.iter().all(|v| v == &[0.0]);
    let narrow = Schedule::dyadic(5, 15).expect("valid");
    let c = check_a2_conjugated(&ConjugatedStructure::default_quadratic(), &[0.0, 0.0], 100, SEED, &narrow);
    let order = c.rate.order();
    let ok = zero && order.is_some_and(|p| (p - 1.0).abs() <= 0.2);
    outcome(
        ok,
        format!(
            "Heisenberg residual exactly 0 at {} scales: {zero}; conjugated A2 order {:?} (1.0 ± 0.2)",
            r.values.len(),
            order
        ),
    )
}

fn limit_engine() -> Outcome {
    let sch = Schedule::default();
    let e = |s: &Scale| to_f64(s.modulus());
    let (c, a) = (1.25, -0.75);
    let lin = estimate_family(|s| vec![c + a * e(s)], &sch);
    let quad = estimate_family(|s| vec![c + a * e(s) * e(s)], &sch);
    let err = |r: &emergent_algebra::limits::ConvergenceReport| {
        r.limit.as_ref().map_or(f64::INFINITY, |l| (l[0] - c).abs())
    };
    let (p1, p2) = (lin.rate.order(), quad.rate.order());
    let ok = err(&lin) <= 1e-9
        && err(&quad) <= 1e-9
        && p1.is_some_and(|p| (p - 1.0).abs() <= 0.1)
        && p2.is_some_and(|p| (p - 2.0).abs() <= 0.1);
    outcome(
        ok,
        format!(
            "c+aε: error {:.1e}, order {:?}; c+aε²: error {:.1e}, order {:?}",
            err(&lin),
            p1,
            err(&quad),
            p2
        ),
    )
}

fn pansu_suite() -> Outcome {
    let h = heisenberg();
    let sch = Schedule::default();
    let id = |p: &emergent_algebra::models::HeisenbergPoint| p.clone();
    let mut exact = true;
    for i in 0..100 {
        let mut rng = sample_rng(SEED, "acceptance_pansu", i);
        let (x, u) = (h.sample_point(&mut rng), h.sample_point(&mut rng));
        exact &= is_scale_independent(&h, &h, &id, &x, &u, &sch)
            && pansu_derivative_point(&h, &h, &id, &x, &u, &sch) == Some(u.clone())
            && is_scale_independent(&h, &h, &heisenberg_swap, &x, &u, &sch)
            && pansu_derivative_point(&h, &h, &heisenberg_swap, &x, &u, &sch) == Some(heisenberg_swap(&u));
    }
    let ext = SigmaExtension::new(heisenberg(), 16, SEED).expect("σ is nontrivial");
    let sigma = check_point_symmetry(&ext, 100, SEED, &sch);

    let flat = ConjugatedStructure::flat(2);
    let phi = |p: &Vec<f64>| QuadraticChart.forward(p);
    let probe = pansu_derivative(&flat, &flat, &phi, &vec![0.0, 0.0], &vec![1.0, 0.0], &sch);
    let order = probe.rate.order();
    let morphism = audit_morphism(&flat, &flat, &phi, &vec![0.0, 0.0], 100, SEED, &sch);
    let ok = exact
        && sigma.passed
        && order.is_some_and(|p| (p - 1.0).abs() <= 0.2)
        && morphism.all_passed()
        && morphism.tolerance <= 1e-6;
    outcome(
        ok,
        format!(
            "identity/automorphism exact: {exact}; σ^x derivative: {}; chart order {:?}; chart morphism: {}",
            sigma.status(),
            order,
            if morphism.all_passed() { "pass" } else { "fail" }
        ),
    )
}

fn loos() -> Outcome {
    let mut ok = true;
    for n in 3..=9 {
        let r = check_loos(&dihedral_quandle(n));
        ok &= r.l1 && r.l2 && r.l3 && (r.l4 == (n % 2 == 1));
    }
    let mut witnesses = Vec::new();
    for n in 2..=9 {
        let r = check_loos(&trivial_quandle(n));
        ok &= !r.l4 && r.witnesses.contains_key("L4");
        witnesses.push(format!("{:?}", r.witnesses.get("L4")));
    }
    outcome(
        ok,
        format!("R3..R9 L1-L3 pass, L4 exactly for odd n; trivial quandle L4 witness {}", witnesses[0]),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_emergent");
    let dir = tempfile::tempdir().expect("temp dir");
    let table = dir.path().join("r5.json");
    std::fs::write(&table, dihedral_quandle(5).to_json()).expect("write table");
    let table = table.to_str().expect("utf-8 path");
    let runs: [&[&str]; 6] = [
        &["audit", "--model", "heisenberg", "--samples", "200", "--format", "json"],
        &["converge", "--model", "conjugated", "--check", "a2"],
        &["converge", "--model", "heisenberg", "--check", "tangent", "--samples", "50"],
        &["braid", "--model", "heisenberg", "--samples", "200"],
        &["finite", "--table", table, "--format", "json"],
        &["enumerate", "--n", "4"],
    ];
    let mut identical = 0;
    for args in runs {
        let out = |jobs: &str| {
            Command::new(bin)
                .args(args)
                .args(["--seed", "7", "--jobs", jobs])
                .output()
                .expect("run binary")
        };
        let (a, b, c) = (out("1"), out("1"), out("3"));
        if a.status.success() && a.stdout == b.stdout && a.stdout == c.stdout && !a.stdout.is_empty() {
            identical += 1;
        }
    }
    outcome(identical == runs.len(), format!("{identical}/{} commands byte-identical across 3 runs", runs.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("identities (a)-(g), (k) exact on Heisenberg", identities),
        ("distributivity and tangent group law", distributivity),
        ("braid relation on finite quandles", braided_sets),
        ("σ symmetries and braiding on Heisenberg", heisenberg_braided),
        ("metric cone and A2", metric_cone),
        ("limit engine calibration", limit_engine),
        ("derivative probes", pansu_suite),
        ("Loos axioms", loos),
        ("CLI determinism", determinism),
    ];
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        passed += usize::from(o.passed);
        println!(
            "acceptance criterion {}: {} | {name} | {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
