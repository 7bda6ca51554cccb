//! Sampled audits of the irq axioms and the identities of the derived
//! difference, sum and inverse operations.

use super::audit::{run_check, AuditReport, CheckResult, SampleRng};
use super::family::IrqFamily;
use super::ops::{rel_difference, rel_inverse, rel_sum};
use super::scale::Scale;

/// Labels of the identity checks, in report order.
pub const IDENTITY_NAMES: [&str; 8] = [
    "identity_a", "identity_b", "identity_c", "identity_d", "identity_e", "identity_f",
    "identity_g", "identity_k",
];

struct Tuple<P> {
    x: P,
    u: P,
    v: P,
    w: P,
    eps: Scale,
    mu: Scale,
}

fn draw<F: IrqFamily>(f: &F, rng: &mut SampleRng) -> Tuple<F::Point> {
    Tuple {
        x: f.sample_point(rng),
        u: f.sample_point(rng),
        v: f.sample_point(rng),
        w: f.sample_point(rng),
        eps: f.sample_scale(rng),
        mu: f.sample_scale(rng),
    }
}

fn render<F: IrqFamily>(f: &F, t: &Tuple<F::Point>) -> String {
    format!(
        "x={} u={} v={} w={} eps={} mu={}",
        f.describe(&t.x),
        f.describe(&t.u),
        f.describe(&t.v),
        f.describe(&t.w),
        t.eps,
        t.mu
    )
}

/// P1, P2 and the Γ-composition axiom on `n_samples` random tuples.
pub fn audit_irq<F: IrqFamily>(f: &F, n_samples: usize, seed: u64) -> AuditReport {
    let mut report = AuditReport::new(seed, f.tolerance());
    let gen = |rng: &mut SampleRng| draw(f, rng);
    let show = |t: &Tuple<F::Point>| render(f, t);

    report.push(run_check(
        "P1",
        n_samples,
        seed,
        gen,
        |t| {
            let a = f.circle(&t.eps, &t.x, &f.bullet(&t.eps, &t.x, &t.u));
            let b = f.bullet(&t.eps, &t.x, &f.circle(&t.eps, &t.x, &t.u));
            f.same(&a, &t.u) && f.same(&b, &t.u)
        },
        show,
    ));
    report.push(run_check(
        "P2",
        n_samples,
        seed,
        gen,
        |t| {
            f.same(&f.circle(&t.eps, &t.x, &t.x), &t.x) && f.same(&f.bullet(&t.eps, &t.x, &t.x), &t.x)
        },
        show,
    ));
    report.push(run_check(
        "gamma_axiom",
        n_samples,
        seed,
        gen,
        |t| {
            let nested = f.circle(&t.eps, &t.x, &f.circle(&t.mu, &t.x, &t.u));
            let direct = f.circle(&t.eps.combine(&t.mu), &t.x, &t.u);
            f.same(&nested, &direct)
        },
        show,
    ));
    report
}

/// The identities (a)–(g) and the distributivity identity (k) of a Γ-irq.
///
/// Unsubscripted base points `x ∘ u` are read as `x ∘_ε u` at the same scale
/// as the surrounding operation.
pub fn audit_identities<F: IrqFamily>(f: &F, n_samples: usize, seed: u64) -> AuditReport {
    let mut report = AuditReport::new(seed, f.tolerance());
    for name in IDENTITY_NAMES {
        report.push(run_check(
            name,
            n_samples,
            seed,
            |rng| draw(f, rng),
            |t| identity_holds(f, name, t),
            |t| render(f, t),
        ));
    }
    report
}

/// Distributivity `x ∘_ε (u ∘_μ v) = (x ∘_ε u) ∘_μ (x ∘_ε v)`, which holds
/// exactly when the tangent structure is a conical group.
pub fn check_distributive<F: IrqFamily>(f: &F, n_samples: usize, seed: u64) -> CheckResult {
    run_check(
        "distributive",
        n_samples,
        seed,
        |rng| draw(f, rng),
        |Tuple { x, u, v, eps, mu, .. }| {
            let lhs = f.circle(eps, x, &f.circle(mu, u, v));
            let rhs = f.circle(mu, &f.circle(eps, x, u), &f.circle(eps, x, v));
            f.same(&lhs, &rhs)
        },
        |t| render(f, t),
    )
}

fn identity_holds<F: IrqFamily>(f: &F, name: &str, t: &Tuple<F::Point>) -> bool {
    let Tuple { x, u, v, w, eps, mu } = t;
    let diff = |base: &F::Point, a: &F::Point, b: &F::Point, s: &Scale| rel_difference(f, base, a, b, s);
    let sum = |base: &F::Point, a: &F::Point, b: &F::Point, s: &Scale| rel_sum(f, base, a, b, s);
    let inv = |base: &F::Point, a: &F::Point, s: &Scale| rel_inverse(f, base, a, s);
    let xu = f.circle(eps, x, u);
    match name {
        // (u + v) - u = v
        "identity_a" => f.same(&diff(x, u, &sum(x, u, v, eps), eps), v),
        // u + (v - u) = v
        "identity_b" => f.same(&sum(x, u, &diff(x, u, v, eps), eps), v),
        // v -^x u = (-^x u) +^{x∘u} v
        "identity_c" => f.same(&diff(x, u, v, eps), &sum(&xu, &inv(x, u, eps), v, eps)),
        // -^{x∘u}(-^x u) = u
        "identity_d" => f.same(&inv(&xu, &inv(x, u, eps), eps), u),
        // u +^x (v +^{x∘u} w) = (u +^x v) +^x w
        "identity_e" => f.same(
            &sum(x, u, &sum(&xu, v, w, eps), eps),
            &sum(x, &sum(x, u, v, eps), w, eps),
        ),
        // -^x u = x -^x u
        "identity_f" => f.same(&inv(x, u, eps), &diff(x, u, x, eps)),
        // x +^x u = u
        "identity_g" => f.same(&sum(x, x, u, eps), u),
        // (x ∘_μ v) -^x_ε (x ∘_μ u) = (x ∘_{εμ} u) ∘_μ (v -^x_{εμ} u)
        "identity_k" => {
            let em = eps.combine(mu);
            let lhs = diff(x, &f.circle(mu, x, u), &f.circle(mu, x, v), eps);
            let rhs = f.circle(mu, &f.circle(&em, x, u), &diff(x, u, v, &em));
            f.same(&lhs, &rhs)
        }
        _ => unreachable!("unknown identity {name}"),
    }
}
