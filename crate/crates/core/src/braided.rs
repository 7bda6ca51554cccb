//! The ℝ×ℤ₂ extension of a dilation structure: the point symmetries
//! `σ^x y = δ^x_σ y` and the braid map `S(x, y) = (σ^x y, x)`.

use rand::Rng;

use crate::emergent::{rel_difference, run_check, AuditReport, CheckResult, IrqFamily, SampleRng, Scale};
use crate::limits::{tangent_difference_point, Schedule, TangentCarrier};
use crate::models::{ConjugatedStructure, DilationGroup, GroupModel};
use crate::{Error, Result};

/// Number of probe points tried when looking for a point moved by `σ^x`.
const MOVE_PROBES: u64 = 64;

/// Comparison of the tangent distance `d^x` on two pairs.
pub trait TangentMetric: TangentCarrier {
    fn same_tangent_distance(
        &self,
        x: &Self::Point,
        a: (&Self::Point, &Self::Point),
        b: (&Self::Point, &Self::Point),
    ) -> bool;
}

/// `d^x = d` on a normed group with dilations; compared through the exact
/// gauge power.
impl<G: DilationGroup> TangentMetric for GroupModel<G> {
    fn same_tangent_distance(
        &self,
        _x: &G::Element,
        a: (&G::Element, &G::Element),
        b: (&G::Element, &G::Element),
    ) -> bool {
        self.distance_pow(a.0, a.1) == self.distance_pow(b.0, b.1)
    }
}

impl TangentMetric for ConjugatedStructure {
    fn same_tangent_distance(
        &self,
        x: &Vec<f64>,
        a: (&Vec<f64>, &Vec<f64>),
        b: (&Vec<f64>, &Vec<f64>),
    ) -> bool {
        (self.tangent_distance(x, a.0, a.1) - self.tangent_distance(x, b.0, b.1)).abs()
            <= self.tolerance()
    }
}

/// A Γ-irq whose `σ^x` is a genuine symmetry at every point.
#[derive(Clone, Debug)]
pub struct SigmaExtension<F> {
    family: F,
}

impl<F: IrqFamily> SigmaExtension<F> {
    /// Rejects families without a σ action, and families where `σ^x` is
    /// the identity at one of `n_points` sampled base points.
    pub fn new(family: F, n_points: usize, seed: u64) -> Result<Self> {
        if !family.supports_sigma() {
            return Err(Error::Model("the family has no σ action".into()));
        }
        let sigma = Scale::sigma();
        for i in 0..n_points as u64 {
            let mut rng = crate::emergent::sample_rng(seed, "sigma_nontrivial", i);
            let x = family.sample_point(&mut rng);
            let moved = (0..MOVE_PROBES).any(|_| {
                let y = family.sample_point(&mut rng);
                !family.same(&family.circle(&sigma, &x, &y), &y)
            });
            if !moved {
                return Err(Error::Model(format!(
                    "σ^x is the identity map at x = {}",
                    family.describe(&x)
                )));
            }
        }
        Ok(SigmaExtension { family })
    }

    pub fn family(&self) -> &F {
        &self.family
    }

    /// `σ^x y`.
    pub fn sigma_apply(&self, x: &F::Point, y: &F::Point) -> F::Point {
        self.family.circle(&Scale::sigma(), x, y)
    }

    /// `S(x, y) = (σ^x y, x)`.
    pub fn braid_map(&self, x: &F::Point, y: &F::Point) -> (F::Point, F::Point) {
        (self.sigma_apply(x, y), x.clone())
    }

    fn s12(&self, t: &[F::Point; 3]) -> [F::Point; 3] {
        let (a, b) = self.braid_map(&t[0], &t[1]);
        [a, b, t[2].clone()]
    }

    fn s23(&self, t: &[F::Point; 3]) -> [F::Point; 3] {
        let (b, c) = self.braid_map(&t[1], &t[2]);
        [t[0].clone(), b, c]
    }

    /// `(S¹²S²³S¹²(t), S²³S¹²S²³(t))`.
    pub fn braid_sides(&self, t: &[F::Point; 3]) -> ([F::Point; 3], [F::Point; 3]) {
        (
            self.s12(&self.s23(&self.s12(t))),
            self.s23(&self.s12(&self.s23(t))),
        )
    }

    fn same3(&self, a: &[F::Point; 3], b: &[F::Point; 3]) -> bool {
        a.iter().zip(b).all(|(p, q)| self.family.same(p, q))
    }
}

struct Sample<P> {
    x: P,
    u: P,
    v: P,
    eps: Scale,
}

fn draw<F: IrqFamily>(f: &F, rng: &mut SampleRng) -> Sample<F::Point> {
    Sample {
        x: f.sample_point(rng),
        u: f.sample_point(rng),
        v: f.sample_point(rng),
        eps: f.sample_scale(rng),
    }
}

fn show<F: IrqFamily>(f: &F, s: &Sample<F::Point>) -> String {
    format!(
        "x={} u={} v={} eps={}",
        f.describe(&s.x),
        f.describe(&s.u),
        f.describe(&s.v),
        s.eps
    )
}

/// Properties of the point symmetries: `σ^x x = x`, involutivity,
/// commutation with every `δ^x_ε`, isometry of `d^x`, and compatibility
/// with the tangent difference, both at finite scale
/// (`σ^w Δ^x_{σε}(u, v) = Δ^x_ε(σ^x u, σ^x v)` with `w = δ^x_{σε} u`) and
/// in the limit (`σ^x Δ^x(u, v) = Δ^x(σ^x u, σ^x v)`).
pub fn audit_sigma<F: TangentMetric>(
    ext: &SigmaExtension<F>,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> AuditReport {
    let f = ext.family();
    let sigma = Scale::sigma();
    let same = |a: &F::Point, b: &F::Point| f.same(a, b);
    let gen = |rng: &mut SampleRng| draw(f, rng);
    let show = |s: &Sample<F::Point>| show(f, s);
    let mut report = AuditReport::new(seed, f.limit_tolerance());

    report.push(run_check(
        "sigma_fixes_base",
        n_samples,
        seed,
        gen,
        |s| same(&ext.sigma_apply(&s.x, &s.x), &s.x),
        show,
    ));
    report.push(run_check(
        "sigma_involutive",
        n_samples,
        seed,
        gen,
        |s| same(&ext.sigma_apply(&s.x, &ext.sigma_apply(&s.x, &s.u)), &s.u),
        show,
    ));
    report.push(run_check(
        "sigma_commutes_with_dilations",
        n_samples,
        seed,
        gen,
        |s| {
            let a = ext.sigma_apply(&s.x, &f.circle(&s.eps, &s.x, &s.u));
            let b = f.circle(&s.eps, &s.x, &ext.sigma_apply(&s.x, &s.u));
            same(&a, &b)
        },
        show,
    ));
    report.push(run_check(
        "sigma_isometry",
        n_samples,
        seed,
        gen,
        |s| {
            let (su, sv) = (ext.sigma_apply(&s.x, &s.u), ext.sigma_apply(&s.x, &s.v));
            f.same_tangent_distance(&s.x, (&su, &sv), (&s.u, &s.v))
        },
        show,
    ));
    report.push(run_check(
        "sigma_difference_finite",
        n_samples,
        seed,
        gen,
        |s| {
            let se = s.eps.combine(&sigma);
            let w = f.circle(&se, &s.x, &s.u);
            let lhs = ext.sigma_apply(&w, &rel_difference(f, &s.x, &s.u, &s.v, &se));
            let (su, sv) = (ext.sigma_apply(&s.x, &s.u), ext.sigma_apply(&s.x, &s.v));
            same(&lhs, &rel_difference(f, &s.x, &su, &sv, &s.eps))
        },
        show,
    ));
    report.push(run_check(
        "sigma_difference_morphism",
        n_samples,
        seed,
        gen,
        |s| {
            let (su, sv) = (ext.sigma_apply(&s.x, &s.u), ext.sigma_apply(&s.x, &s.v));
            let lhs = tangent_difference_point(f, &s.x, &s.u, &s.v, sch)
                .map(|d| ext.sigma_apply(&s.x, &d));
            let rhs = tangent_difference_point(f, &s.x, &su, &sv, sch);
            matches!((lhs, rhs), (Some(a), Some(b)) if f.limit_same(&a, &b))
        },
        show,
    ));
    report
}

/// The braid relation for `S(x, y) = (σ^x y, x)` on sampled triples, its
/// non-degeneracy, the quandle axioms for `x ∗ y = σ^x y`, and (reported,
/// not required) whether `S` is an involution.
pub fn braid_audit_continuous<F: IrqFamily>(
    ext: &SigmaExtension<F>,
    n_triples: usize,
    seed: u64,
) -> AuditReport {
    let f = ext.family();
    let gen = |rng: &mut SampleRng| [f.sample_point(rng), f.sample_point(rng), f.sample_point(rng)];
    let show = |t: &[F::Point; 3]| {
        format!("x={} y={} z={}", f.describe(&t[0]), f.describe(&t[1]), f.describe(&t[2]))
    };
    let star = |a: &F::Point, b: &F::Point| ext.sigma_apply(a, b);
    let mut report = AuditReport::new(seed, f.tolerance());

    report.push(run_check(
        "braid_relation",
        n_triples,
        seed,
        gen,
        |t| {
            let (l, r) = ext.braid_sides(t);
            ext.same3(&l, &r)
        },
        show,
    ));
    report.push(run_check(
        "braid_relation_diagonal",
        n_triples,
        seed,
        gen,
        |t| {
            let d = [t[0].clone(), t[0].clone(), t[0].clone()];
            let (l, r) = ext.braid_sides(&d);
            ext.same3(&l, &d) && ext.same3(&r, &d)
        },
        show,
    ));
    report.push(run_check(
        "nondegenerate",
        n_triples,
        seed,
        gen,
        |t| f.same(&star(&t[0], &star(&t[0], &t[1])), &t[1]),
        show,
    ));
    report.push(run_check(
        "quandle_idempotent",
        n_triples,
        seed,
        gen,
        |t| f.same(&star(&t[0], &t[0]), &t[0]),
        show,
    ));
    report.push(run_check(
        "quandle_self_distributive",
        n_triples,
        seed,
        gen,
        |t| {
            let lhs = star(&t[0], &star(&t[1], &t[2]));
            let rhs = star(&star(&t[0], &t[1]), &star(&t[0], &t[2]));
            f.same(&lhs, &rhs)
        },
        show,
    ));
    report.push(
        run_check(
            "braid_map_involutive",
            n_triples,
            seed,
            gen,
            |t| {
                let (a, b) = ext.braid_map(&t[0], &t[1]);
                let (c, d) = ext.braid_map(&a, &b);
                f.same(&c, &t[0]) && f.same(&d, &t[1])
            },
            show,
        )
        .informational(),
    );
    report
}

/// Left translations act by isomorphisms of the dilation structure:
/// `g·δ^x_ε y = δ^{gx}_ε (g·y)` for every `ε ∈ Γ`.
pub fn check_left_invariance<G: DilationGroup>(
    model: &GroupModel<G>,
    n_samples: usize,
    seed: u64,
) -> CheckResult {
    let g = model.group();
    run_check(
        "left_translation_invariance",
        n_samples,
        seed,
        |rng: &mut SampleRng| {
            let parity = rng.gen_bool(0.5);
            let s = model.sample_scale(rng);
            let s = if parity { s.combine(&Scale::sigma()) } else { s };
            (g.sample(rng), g.sample(rng), g.sample(rng), s)
        },
        |(h, x, y, s)| {
            let lhs = model.left_translate(h, &model.circle(s, x, y));
            let rhs = model.circle(s, &model.left_translate(h, x), &model.left_translate(h, y));
            lhs == rhs
        },
        |(h, x, y, s)| {
            format!("g={} x={} y={} eps={s}", g.describe(h), g.describe(x), g.describe(y))
        },
    )
}
