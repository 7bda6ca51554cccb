//! Derivatives of maps between Γ-irqs:
//! `Tf(x, u) = lim_ε f(x) •_ε f(x ∘_ε u)`.
//!
//! The integer index `k → ∞` is realized by the schedule `ε_k = 2⁻ᵏ`.

use serde::Serialize;

use crate::braided::SigmaExtension;
use crate::emergent::{run_check, AuditReport, CheckResult, IrqFamily, SampleRng, Scale};
use crate::limits::{
    estimate_family, tangent_sum_point, uniformity_check, ConvergenceReport, Schedule,
    TangentCarrier,
};
use crate::models::HeisenbergPoint;

/// The difference quotient `f(x) •_ε f(x ∘_ε u)` at one scale.
pub fn pansu_value<X, Y, M>(xf: &X, yf: &Y, f: &M, x: &X::Point, u: &X::Point, s: &Scale) -> Y::Point
where
    X: IrqFamily,
    Y: IrqFamily,
    M: Fn(&X::Point) -> Y::Point,
{
    yf.bullet(s, &f(x), &f(&xf.circle(s, x, u)))
}

/// Convergence of the difference quotients along the schedule, in the
/// floating-point coordinates of the target.
pub fn pansu_derivative<X, Y, M>(
    xf: &X,
    yf: &Y,
    f: &M,
    x: &X::Point,
    u: &X::Point,
    sch: &Schedule,
) -> ConvergenceReport
where
    X: IrqFamily,
    Y: IrqFamily,
    M: Fn(&X::Point) -> Y::Point,
{
    estimate_family(|s| yf.coords(&pansu_value(xf, yf, f, x, u, s)), sch)
}

/// `Tf(x, u)` as a point of the target, exact on exact carriers.
pub fn pansu_derivative_point<X, Y, M>(
    xf: &X,
    yf: &Y,
    f: &M,
    x: &X::Point,
    u: &X::Point,
    sch: &Schedule,
) -> Option<Y::Point>
where
    X: IrqFamily,
    Y: TangentCarrier,
    M: Fn(&X::Point) -> Y::Point,
{
    yf.limit_point(&|s| pansu_value(xf, yf, f, x, u, s), sch)
}

/// Whether the difference quotients coincide at every scale of `sch`.
pub fn is_scale_independent<X, Y, M>(
    xf: &X,
    yf: &Y,
    f: &M,
    x: &X::Point,
    u: &X::Point,
    sch: &Schedule,
) -> bool
where
    X: IrqFamily,
    Y: IrqFamily,
    M: Fn(&X::Point) -> Y::Point,
{
    let mut values = sch.scales().iter().map(|s| pansu_value(xf, yf, f, x, u, s));
    match values.next() {
        None => true,
        Some(first) => values.all(|v| yf.same(&v, &first)),
    }
}

/// One derivative evaluation, ready for reporting.
#[derive(Clone, Debug, Serialize)]
pub struct DerivativeProbe {
    pub map: String,
    pub x: String,
    pub u: String,
    pub scale_independent: bool,
    pub report: ConvergenceReport,
}

pub fn probe<X, Y, M>(
    name: &str,
    xf: &X,
    yf: &Y,
    f: &M,
    x: &X::Point,
    u: &X::Point,
    sch: &Schedule,
) -> DerivativeProbe
where
    X: IrqFamily,
    Y: IrqFamily,
    M: Fn(&X::Point) -> Y::Point,
{
    DerivativeProbe {
        map: name.to_string(),
        x: xf.describe(x),
        u: xf.describe(u),
        scale_independent: is_scale_independent(xf, yf, f, x, u, sch),
        report: pansu_derivative(xf, yf, f, x, u, sch),
    }
}

fn limit_eq<Y: TangentCarrier>(yf: &Y, a: Option<Y::Point>, b: Option<Y::Point>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if yf.limit_same(&a, &b))
}

/// `Tf(x, ·)` is a morphism of the tangent conical groups:
/// `Tf(x, u +ˣ v) = Tf(x, u) +^{f(x)} Tf(x, v)` and
/// `Tf(x, x ∘_ε u) = f(x) ∘_ε Tf(x, u)`.
pub fn audit_morphism<X, Y, M>(
    xf: &X,
    yf: &Y,
    f: &M,
    x: &X::Point,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> AuditReport
where
    X: TangentCarrier,
    Y: TangentCarrier,
    M: Fn(&X::Point) -> Y::Point + Sync,
{
    let fx = f(x);
    let tf = |u: &X::Point| pansu_derivative_point(xf, yf, f, x, u, sch);
    let gen = |rng: &mut SampleRng| (xf.sample_point(rng), xf.sample_point(rng), xf.sample_scale(rng));
    let show = |(u, v, s): &(X::Point, X::Point, Scale)| {
        format!("x={} u={} v={} eps={s}", xf.describe(x), xf.describe(u), xf.describe(v))
    };
    let mut report = AuditReport::new(seed, yf.limit_tolerance());
    report.push(run_check(
        "derivative_additive",
        n_samples,
        seed,
        gen,
        |(u, v, _)| {
            let lhs = tangent_sum_point(xf, x, u, v, sch).and_then(|w| tf(&w));
            let rhs = match (tf(u), tf(v)) {
                (Some(a), Some(b)) => tangent_sum_point(yf, &fx, &a, &b, sch),
                _ => None,
            };
            limit_eq(yf, lhs, rhs)
        },
        show,
    ));
    report.push(run_check(
        "derivative_homogeneous",
        n_samples,
        seed,
        gen,
        |(u, _, s)| {
            let lhs = tf(&xf.circle(s, x, u));
            let rhs = tf(u).map(|t| yf.circle(s, &fx, &t));
            limit_eq(yf, lhs, rhs)
        },
        show,
    ));
    report
}

/// `T(g∘f)(x, u) = Tg(f(x), Tf(x, u))` on sampled `x, u`.
#[allow(clippy::too_many_arguments)]
pub fn check_chain_rule<X, Y, Z, M, N>(
    xf: &X,
    yf: &Y,
    zf: &Z,
    f: &M,
    g: &N,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> CheckResult
where
    X: IrqFamily,
    Y: TangentCarrier,
    Z: TangentCarrier,
    M: Fn(&X::Point) -> Y::Point + Sync,
    N: Fn(&Y::Point) -> Z::Point + Sync,
{
    let gf = |p: &X::Point| g(&f(p));
    run_check(
        "chain_rule",
        n_samples,
        seed,
        |rng: &mut SampleRng| (xf.sample_point(rng), xf.sample_point(rng)),
        |(x, u)| {
            let lhs = pansu_derivative_point(xf, zf, &gf, x, u, sch);
            let rhs = pansu_derivative_point(xf, yf, f, x, u, sch)
                .and_then(|t| pansu_derivative_point(yf, zf, g, &f(x), &t, sch));
            limit_eq(zf, lhs, rhs)
        },
        |(x, u)| format!("x={} u={}", xf.describe(x), xf.describe(u)),
    )
}

/// The derivative of the point symmetry `Ψ = σ^x` at its centre is `σ^x`
/// itself, with constant difference quotients.
pub fn check_point_symmetry<F: TangentCarrier>(
    ext: &SigmaExtension<F>,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> CheckResult {
    let f = ext.family();
    run_check(
        "point_symmetry_derivative",
        n_samples,
        seed,
        |rng: &mut SampleRng| (f.sample_point(rng), f.sample_point(rng)),
        |(x, u)| {
            let psi = |p: &F::Point| ext.sigma_apply(x, p);
            let expected = ext.sigma_apply(x, u);
            let limit = pansu_derivative_point(f, f, &psi, x, u, sch);
            is_scale_independent(f, f, &psi, x, u, sch) && limit_eq(f, limit, Some(expected))
        },
        |(x, u)| format!("x={} u={}", f.describe(x), f.describe(u)),
    )
}

/// Uniform differentiability on a sample: the sup-residual of the
/// difference quotients decays at the mean pointwise rate within `slack`.
pub fn check_uniform_derivative<X, Y, M>(
    xf: &X,
    yf: &Y,
    f: &M,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
    slack: f64,
) -> CheckResult
where
    X: IrqFamily,
    Y: IrqFamily,
    M: Fn(&X::Point) -> Y::Point,
{
    let reports: Vec<ConvergenceReport> = (0..n_samples as u64)
        .map(|i| {
            let mut rng = crate::emergent::sample_rng(seed, "uniform_derivative", i);
            let (x, u) = (xf.sample_point(&mut rng), xf.sample_point(&mut rng));
            pansu_derivative(xf, yf, f, &x, &u, sch)
        })
        .collect();
    uniformity_check("uniform_derivative", &reports, sch, slack)
}

/// The graded automorphism `(x, y, z) ↦ (y, x, −z)` of the Heisenberg group.
pub fn heisenberg_swap(p: &HeisenbergPoint) -> HeisenbergPoint {
    HeisenbergPoint::new(p.y.clone(), p.x.clone(), -p.z.clone())
}
