//! Tangent operations `Δ^x`, `Σ^x`, `inv^x` as limits of the approximate
//! ones, and audits that they form a conical group.

use rand::Rng;

use super::estimate::{estimate_family, ConvergenceReport};
use super::exact::extrapolate_lazy;
use super::schedule::Schedule;
use crate::emergent::{
    rel_difference, rel_inverse, rel_sum, run_check, AuditReport, IrqFamily, SampleRng, Scale,
};
use crate::models::{ConjugatedStructure, DilationGroup, GroupModel};
use crate::rational::random_positive_q;

/// Plateau length required before an exact extrapolation is accepted.
const EXACT_CONFIRM: usize = 2;
/// Agreement required between numerically extrapolated limits.
pub const EXTRAPOLATED_TOL: f64 = 1e-6;

/// A carrier that can turn a scale-indexed family of points into its limit
/// as a point of the carrier.
pub trait TangentCarrier: IrqFamily {
    fn limit_point(
        &self,
        family: &dyn Fn(&Scale) -> Self::Point,
        sch: &Schedule,
    ) -> Option<Self::Point>;

    /// Equality for values produced by `limit_point`.
    fn limit_same(&self, a: &Self::Point, b: &Self::Point) -> bool;

    fn limit_tolerance(&self) -> f64;
}

impl<G: DilationGroup> TangentCarrier for GroupModel<G> {
    /// Exact: rational extrapolation in the signed scale factor.
    fn limit_point(
        &self,
        family: &dyn Fn(&Scale) -> G::Element,
        sch: &Schedule,
    ) -> Option<G::Element> {
        let nodes: Vec<_> = sch.scales().iter().map(Scale::signed_factor).collect();
        let g = self.group();
        extrapolate_lazy(&nodes, |i| g.rat_coords(&family(&sch.scales()[i])), EXACT_CONFIRM)
            .map(|l| g.element_from_coords(&l.limit))
    }

    fn limit_same(&self, a: &G::Element, b: &G::Element) -> bool {
        a == b
    }

    fn limit_tolerance(&self) -> f64 {
        0.0
    }
}

impl TangentCarrier for ConjugatedStructure {
    fn limit_point(&self, family: &dyn Fn(&Scale) -> Vec<f64>, sch: &Schedule) -> Option<Vec<f64>> {
        let report = estimate_family(|s| family(s), sch);
        if report.diverged {
            return None;
        }
        report.limit
    }

    fn limit_same(&self, a: &Vec<f64>, b: &Vec<f64>) -> bool {
        self.distance(a, b).is_some_and(|d| d <= EXTRAPOLATED_TOL)
    }

    fn limit_tolerance(&self) -> f64 {
        EXTRAPOLATED_TOL
    }
}

/// Convergence of `ε ↦ Δ^x_ε(u, v)`.
pub fn tangent_difference<F: IrqFamily>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    sch: &Schedule,
) -> ConvergenceReport {
    estimate_family(|s| f.coords(&rel_difference(f, x, u, v, s)), sch)
}

/// Convergence of `ε ↦ Σ^x_ε(u, v)`.
pub fn tangent_sum<F: IrqFamily>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    sch: &Schedule,
) -> ConvergenceReport {
    estimate_family(|s| f.coords(&rel_sum(f, x, u, v, s)), sch)
}

/// Convergence of `ε ↦ inv^x_ε u`.
pub fn tangent_inverse<F: IrqFamily>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    sch: &Schedule,
) -> ConvergenceReport {
    estimate_family(|s| f.coords(&rel_inverse(f, x, u, s)), sch)
}

pub fn tangent_difference_point<F: TangentCarrier>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    sch: &Schedule,
) -> Option<F::Point> {
    f.limit_point(&|s| rel_difference(f, x, u, v, s), sch)
}

pub fn tangent_sum_point<F: TangentCarrier>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    v: &F::Point,
    sch: &Schedule,
) -> Option<F::Point> {
    f.limit_point(&|s| rel_sum(f, x, u, v, s), sch)
}

pub fn tangent_inverse_point<F: TangentCarrier>(
    f: &F,
    x: &F::Point,
    u: &F::Point,
    sch: &Schedule,
) -> Option<F::Point> {
    f.limit_point(&|s| rel_inverse(f, x, u, s), sch)
}

struct Triple<P> {
    u: P,
    v: P,
    w: P,
    eps: Scale,
}

fn limit_eq<F: TangentCarrier>(f: &F, a: Option<F::Point>, b: Option<F::Point>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if f.limit_same(&a, &b))
}

/// Conical-group axioms at base point `x` for the tangent operations:
/// neutrality of `x`, associativity, inverses, the dilations `x ∘_ε ·` as
/// morphisms of `+^x_∞`, and `(u +^x_∞ v) −^x_∞ u = v`.
pub fn audit_conical<F: TangentCarrier>(
    f: &F,
    x: &F::Point,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> AuditReport {
    let mut report = AuditReport::new(seed, f.limit_tolerance());
    let gen = |rng: &mut SampleRng| Triple {
        u: f.sample_point(rng),
        v: f.sample_point(rng),
        w: f.sample_point(rng),
        eps: f.sample_scale(rng),
    };
    let show = |t: &Triple<F::Point>| {
        format!(
            "x={} u={} v={} w={} eps={}",
            f.describe(x),
            f.describe(&t.u),
            f.describe(&t.v),
            f.describe(&t.w),
            t.eps
        )
    };
    let sum = |a: &F::Point, b: &F::Point| tangent_sum_point(f, x, a, b, sch);

    report.push(run_check(
        "tangent_neutral",
        n_samples,
        seed,
        gen,
        |t| {
            limit_eq(f, sum(x, &t.u), Some(t.u.clone()))
                && limit_eq(f, sum(&t.u, x), Some(t.u.clone()))
        },
        show,
    ));
    report.push(run_check(
        "tangent_associative",
        n_samples,
        seed,
        gen,
        |t| {
            let left = sum(&t.u, &t.v).and_then(|uv| sum(&uv, &t.w));
            let right = sum(&t.v, &t.w).and_then(|vw| sum(&t.u, &vw));
            limit_eq(f, left, right)
        },
        show,
    ));
    report.push(run_check(
        "tangent_inverse",
        n_samples,
        seed,
        gen,
        |t| {
            let inv = tangent_inverse_point(f, x, &t.u, sch);
            limit_eq(f, inv.and_then(|i| sum(&t.u, &i)), Some(x.clone()))
        },
        show,
    ));
    report.push(run_check(
        "dilation_morphism",
        n_samples,
        seed,
        gen,
        |t| {
            let left = sum(&t.u, &t.v).map(|uv| f.circle(&t.eps, x, &uv));
            let right = sum(&f.circle(&t.eps, x, &t.u), &f.circle(&t.eps, x, &t.v));
            limit_eq(f, left, right)
        },
        show,
    ));
    report.push(run_check(
        "tangent_difference_of_sum",
        n_samples,
        seed,
        gen,
        |t| {
            let s = sum(&t.u, &t.v);
            let d = s.and_then(|s| tangent_difference_point(f, x, &t.u, &s, sch));
            limit_eq(f, d, Some(t.v.clone()))
        },
        show,
    ));
    report
}

/// For a conical group: the tangent sum at the neutral element is the
/// group law, the tangent difference is `(xuv)_∞ = x u⁻¹ v`, and the
/// rescaled product `δ_ε⁻¹(δ_ε u · δ_ε v)` equals `u·v` at every scale.
pub fn audit_group_tangent<G: DilationGroup>(
    model: &GroupModel<G>,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> AuditReport {
    let g = model.group();
    let e = g.identity();
    let mut report = AuditReport::new(seed, 0.0);
    let gen = |rng: &mut SampleRng| (g.sample(rng), g.sample(rng), g.sample(rng));
    let show = |t: &(G::Element, G::Element, G::Element)| {
        format!("x={} u={} v={}", g.describe(&t.0), g.describe(&t.1), g.describe(&t.2))
    };
    report.push(run_check(
        "tangent_sum_is_group_law",
        n_samples,
        seed,
        gen,
        |(_, u, v)| tangent_sum_point(model, &e, u, v, sch).as_ref() == Some(&g.mul(u, v)),
        show,
    ));
    report.push(run_check(
        "tangent_difference_is_x_uinv_v",
        n_samples,
        seed,
        gen,
        |(x, u, v)| {
            let expected = g.mul(&g.mul(x, &g.inv(u)), v);
            tangent_difference_point(model, x, u, v, sch).as_ref() == Some(&expected)
        },
        show,
    ));
    report.push(run_check(
        "rescaled_product_exact",
        n_samples,
        seed,
        |rng: &mut SampleRng| {
            let t = gen(rng);
            let parity = rng.gen_bool(0.5);
            let mut s = Scale::new(random_positive_q(rng, 9)).expect("positive");
            if parity {
                s = s.combine(&Scale::sigma());
            }
            (t, s)
        },
        |((_, u, v), s)| {
            let uv = g.mul(u, v);
            std::iter::once(s).chain(sch.scales()).all(|s| {
                let prod = g.mul(&g.dilate(s, u), &g.dilate(s, v));
                g.dilate(&s.invert(), &prod) == uv
            })
        },
        |(t, s)| format!("{} eps={s}", show(t)),
    ));
    report
}
