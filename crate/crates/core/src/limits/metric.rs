//! The metric cone identity and the rescaled-distance condition A2.

use rand::Rng;
use rayon::prelude::*;

use super::estimate::{estimate_limit, ConvergenceReport};
use super::schedule::Schedule;
use crate::emergent::{run_check, sample_rng, AuditReport, CheckResult, IrqFamily, SampleRng, Scale};
use crate::models::{ConjugatedStructure, DilationGroup, GroupModel};
use crate::rational::{pow, random_positive_q, to_f64, Q};

fn sample_lambda(rng: &mut SampleRng) -> Scale {
    let s = Scale::new(random_positive_q(rng, 9)).expect("positive");
    if rng.gen_bool(0.5) {
        s.combine(&Scale::sigma())
    } else {
        s
    }
}

/// `d(δ^x_λ u, δ^x_λ v)^p = |λ|^p d(u, v)^p` in exact arithmetic, where `p`
/// is the gauge power of the group.
pub fn check_cone<G: DilationGroup>(model: &GroupModel<G>, n_samples: usize, seed: u64) -> AuditReport {
    let g = model.group();
    let p = g.gauge_power();
    let mut report = AuditReport::new(seed, 0.0);
    report.push(run_check(
        "metric_cone",
        n_samples,
        seed,
        |rng: &mut SampleRng| (g.sample(rng), g.sample(rng), g.sample(rng), sample_lambda(rng)),
        |(x, u, v, l)| {
            let lhs = model.distance_pow(&model.group_dilation(l, x, u), &model.group_dilation(l, x, v));
            lhs == pow(l.modulus(), p) * model.distance_pow(u, v)
        },
        |(x, u, v, l)| {
            format!("x={} u={} v={} lambda={l}", g.describe(x), g.describe(u), g.describe(v))
        },
    ));
    report
}

/// A point `x·w` with `‖w‖ ≤ 1`, drawn by rescaling a sample into the unit
/// gauge ball.
fn ball_point<G: DilationGroup>(g: &G, x: &G::Element, rng: &mut SampleRng) -> G::Element {
    let w = g.sample(rng);
    let size = g.gauge_pow(&w);
    let w = if size > Q::from_integer(1.into()) {
        let shrink = Q::new(1.into(), size.ceil().to_integer() + 1);
        g.dilate(&Scale::new(shrink).expect("positive"), &w)
    } else {
        w
    };
    g.mul(x, &w)
}

/// Exact sup over the sampled pairs of
/// `|(1/|ε|) d(δ^x_ε u, δ^x_ε v) − d(u, v)|` at one scale.
fn group_residual<G: DilationGroup>(
    model: &GroupModel<G>,
    s: &Scale,
    x: &G::Element,
    pairs: &[(G::Element, G::Element)],
) -> f64 {
    let p = model.group().gauge_power();
    let scale = pow(s.modulus(), p);
    pairs
        .iter()
        .map(|(u, v)| {
            let rescaled = model.distance_pow(&model.group_dilation(s, x, u), &model.group_dilation(s, x, v)) / &scale;
            let plain = model.distance_pow(u, v);
            if rescaled == plain {
                0.0
            } else {
                (to_f64(&rescaled).powf(1.0 / p as f64) - to_f64(&plain).powf(1.0 / p as f64)).abs()
            }
        })
        .fold(0.0, f64::max)
}

/// Rescaled-distance residuals for a normed group with dilations, where
/// `d^x = d`. Equal distances are detected at the exact `p`-th power level,
/// so a vanishing residual is reported as exactly `0`.
pub fn check_a2_group<G: DilationGroup>(
    model: &GroupModel<G>,
    x: &G::Element,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> ConvergenceReport {
    let g = model.group();
    let pairs: Vec<_> = (0..n_samples as u64)
        .map(|i| {
            let mut rng = sample_rng(seed, "a2_ball", i);
            (ball_point(g, x, &mut rng), ball_point(g, x, &mut rng))
        })
        .collect();
    let values: Vec<Vec<f64>> = sch
        .scales()
        .par_iter()
        .map(|s| vec![group_residual(model, s, x, &pairs)])
        .collect();
    estimate_limit(values, sch)
}

/// Sup-residuals of `(1/|ε|) d(δ^x_ε u, δ^x_ε v)` against a supplied `d^x`
/// over sampled pairs drawn by `sample`.
pub fn check_a2<F, S, D>(
    f: &F,
    x: &F::Point,
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
    sample: S,
    dx: D,
) -> ConvergenceReport
where
    F: IrqFamily,
    S: Fn(&mut SampleRng) -> (F::Point, F::Point),
    D: Fn(&F::Point, &F::Point) -> f64 + Sync,
{
    let pairs: Vec<_> = (0..n_samples as u64)
        .map(|i| sample(&mut sample_rng(seed, "a2_ball", i)))
        .collect();
    let values: Vec<Vec<f64>> = sch
        .scales()
        .par_iter()
        .map(|s| {
            let eps = s.modulus_f64();
            let sup = pairs
                .iter()
                .map(|(u, v)| {
                    let d = f
                        .distance(&f.circle(s, x, u), &f.circle(s, x, v))
                        .expect("A2 needs a distance");
                    (d / eps - dx(u, v)).abs()
                })
                .fold(0.0, f64::max);
            vec![sup]
        })
        .collect();
    estimate_limit(values, sch)
}

/// A2 for a conjugated structure with `d^x` the pullback of the Euclidean
/// norm through the chart derivative, over `u, v` in the unit ball at `x`.
pub fn check_a2_conjugated(
    c: &ConjugatedStructure,
    x: &[f64],
    n_samples: usize,
    seed: u64,
    sch: &Schedule,
) -> ConvergenceReport {
    let x = x.to_vec();
    let ball = |rng: &mut SampleRng| -> Vec<f64> {
        loop {
            let w: Vec<f64> = (0..c.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            if w.iter().map(|a| a * a).sum::<f64>() <= 1.0 {
                return x.iter().zip(&w).map(|(a, b)| a + b).collect();
            }
        }
    };
    check_a2(
        c,
        &x,
        n_samples,
        seed,
        sch,
        |rng| (ball(rng), ball(rng)),
        |u, v| c.tangent_distance(&x, u, v),
    )
}

/// `d^x(u, v) = 0 ⇒ u = v` on sampled pairs, half of which coincide.
pub fn check_nondegenerate<F, D>(f: &F, n_samples: usize, seed: u64, dx: D) -> CheckResult
where
    F: IrqFamily,
    D: Fn(&F::Point, &F::Point) -> f64 + Sync,
{
    run_check(
        "a2_nondegenerate",
        n_samples,
        seed,
        |rng: &mut SampleRng| {
            let u = f.sample_point(rng);
            let v = if rng.gen_bool(0.5) { u.clone() } else { f.sample_point(rng) };
            (u, v)
        },
        |(u, v)| (dx(u, v) <= f.tolerance()) == f.same(u, v),
        |(u, v)| format!("u={} v={}", f.describe(u), f.describe(v)),
    )
}

/// The cone residual `(1/|λ|) d(δ^x_λ u, δ^x_λ v) − d(u, v)` along a
/// schedule, as a sup over the given `(x, u, v)` triples; exact when it
/// vanishes.
pub fn cone_report<G: DilationGroup>(
    model: &GroupModel<G>,
    triples: &[(G::Element, G::Element, G::Element)],
    sch: &Schedule,
) -> ConvergenceReport {
    let values = sch
        .scales()
        .par_iter()
        .map(|s| {
            let sup = triples
                .iter()
                .map(|(x, u, v)| group_residual(model, s, x, &[(u.clone(), v.clone())]))
                .fold(0.0, f64::max);
            vec![sup]
        })
        .collect();
    estimate_limit(values, sch)
}
