//! Numerical limit extraction with a convergence-order estimate.
//!
//! Model: `value_j = L + C·ε_jᵖ + …`. The order `p` is the log-log least
//! squares slope of successive differences `‖v_j − v_{j+1}‖` against `ε_j`
//! over the last half of the usable schedule; the limit is the one-step
//! Richardson extrapolation of the last two values with that order. The
//! usable schedule ends where round-off takes over and must keep at least
//! half of the points before the round-off threshold.

use serde::{Serialize, Serializer};

use super::schedule::Schedule;
use crate::emergent::{CheckResult, Scale};

/// Successive differences at or below this many ulps of the value are
/// treated as round-off and end the usable part of the schedule.
const NOISE_ULPS: f64 = 10.0;
/// Fewest usable differences from which an order is fitted.
const MIN_FIT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rate {
    /// The sampled family is constant.
    Exact,
    Order(f64),
    /// Too few usable points to fit an order.
    Undetermined,
}

impl Rate {
    pub fn order(&self) -> Option<f64> {
        match self {
            Rate::Order(p) => Some(*p),
            _ => None,
        }
    }
}

impl Serialize for Rate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Rate::Exact => serializer.serialize_str("exact"),
            Rate::Order(p) => serializer.serialize_f64(*p),
            Rate::Undetermined => serializer.serialize_str("undetermined"),
        }
    }
}

impl std::fmt::Display for Rate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rate::Exact => f.write_str("exact"),
            Rate::Order(p) => write!(f, "{p}"),
            Rate::Undetermined => f.write_str("undetermined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub epsilons: Vec<f64>,
    pub values: Vec<Vec<f64>>,
    pub limit: Option<Vec<f64>>,
    pub rate: Rate,
    /// `‖value_j − limit‖`; empty when no limit was found.
    pub residuals: Vec<f64>,
    pub diverged: bool,
    /// Number of leading schedule points used before round-off took over.
    pub used: usize,
}

impl ConvergenceReport {
    pub fn is_exact(&self) -> bool {
        self.rate == Rate::Exact
    }

    pub fn converged(&self) -> bool {
        !self.diverged && self.limit.is_some()
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

fn sup_norm(a: &[f64]) -> f64 {
    a.iter().fold(0.0f64, |m, c| m.max(c.abs()))
}

/// Least-squares slope of `ys` against `xs`.
fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Estimates the limit of `values[j]` sampled at `sch.scales()[j]`.
pub fn estimate_limit(values: Vec<Vec<f64>>, sch: &Schedule) -> ConvergenceReport {
    let epsilons = sch.epsilons();
    assert_eq!(values.len(), epsilons.len(), "one value per scale");
    let diffs: Vec<f64> = values.windows(2).map(|w| dist(&w[0], &w[1])).collect();

    if diffs.iter().all(|&d| d == 0.0) {
        let limit = values.last().cloned();
        return ConvergenceReport {
            residuals: vec![0.0; values.len()],
            used: values.len(),
            epsilons,
            values,
            limit,
            rate: Rate::Exact,
            diverged: false,
        };
    }

    // Differences at the round-off threshold end the usable schedule.
    let noise_cut = diffs
        .iter()
        .enumerate()
        .position(|(j, &d)| d <= NOISE_ULPS * f64::EPSILON * sup_norm(&values[j]).max(1.0))
        .unwrap_or(diffs.len());
    let decreasing = |d: &[f64]| d.windows(2).all(|w| w[1] < w[0]);

    let mut rate = Rate::Undetermined;
    let mut limit = None;
    let mut diverged = true;
    let mut used = noise_cut + 1;
    if noise_cut < MIN_FIT {
        // Converged to round-off before an order could be fitted.
        if noise_cut < diffs.len() && decreasing(&diffs[..noise_cut]) {
            limit = Some(values[noise_cut].clone());
            diverged = false;
        }
    } else if let Some(usable) = (MIN_FIT.max(noise_cut / 2)..=noise_cut)
        .rev()
        .find(|&u| decreasing(&diffs[u / 2..u]))
    {
        // Round-off amplified by the family (difference quotients lose
        // digits like 1/ε) breaks monotonicity before the threshold; the
        // longest prefix whose last half still decreases is kept.
        used = usable + 1;
        let tail_start = usable / 2;
        let xs: Vec<f64> = epsilons[tail_start..usable].iter().map(|e| e.ln()).collect();
        let ys: Vec<f64> = diffs[tail_start..usable].iter().map(|d| d.ln()).collect();
        let p = slope(&xs, &ys);
        if p.is_finite() && p > 0.0 {
            rate = Rate::Order(p);
            diverged = false;
            let last = &values[used - 1];
            let prev = &values[used - 2];
            let rho = (epsilons[used - 1] / epsilons[used - 2]).powf(p);
            limit = Some(
                last.iter()
                    .zip(prev)
                    .map(|(l, q)| (l - rho * q) / (1.0 - rho))
                    .collect(),
            );
        }
    }

    let residuals = match &limit {
        Some(l) => values.iter().map(|v| dist(v, l)).collect(),
        None => Vec::new(),
    };
    ConvergenceReport {
        epsilons,
        values,
        limit,
        rate,
        residuals,
        diverged,
        used,
    }
}

/// Evaluates `family` along `sch` and estimates its limit.
pub fn estimate_family<F>(family: F, sch: &Schedule) -> ConvergenceReport
where
    F: Fn(&Scale) -> Vec<f64>,
{
    let values = sch.scales().iter().map(family).collect();
    estimate_limit(values, sch)
}

/// Uniformity over a sample: the sup over samples of the residuals must
/// decay at the mean pointwise order, within `slack`.
pub fn uniformity_check(
    name: &str,
    pointwise: &[ConvergenceReport],
    sch: &Schedule,
    slack: f64,
) -> CheckResult {
    if pointwise.iter().all(ConvergenceReport::is_exact) {
        return CheckResult::pass(name, pointwise.len());
    }
    if let Some((i, _)) = pointwise
        .iter()
        .enumerate()
        .find(|(_, r)| !r.converged())
    {
        return CheckResult::fail(name, pointwise.len(), format!("sample {i} did not converge"));
    }
    let orders: Vec<f64> = pointwise.iter().filter_map(|r| r.rate.order()).collect();
    if orders.is_empty() {
        return CheckResult::fail(name, pointwise.len(), "no pointwise order estimated");
    }
    let mean = orders.iter().sum::<f64>() / orders.len() as f64;
    let sup: Vec<Vec<f64>> = (0..sch.len())
        .map(|j| vec![pointwise.iter().fold(0.0f64, |m, r| m.max(r.residuals[j]))])
        .collect();
    let sup_report = estimate_limit(sup, sch);
    match sup_report.rate.order() {
        Some(p) if (p - mean).abs() <= slack => CheckResult::pass(name, pointwise.len()),
        other => CheckResult::fail(
            name,
            pointwise.len(),
            format!("sup-residual order {other:?} vs mean pointwise order {mean}"),
        ),
    }
}
