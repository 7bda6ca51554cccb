//! Euclidean dilations pushed forward through a nonlinear chart:
//! `δ^x_ε u = φ(ψ(x) + ε(ψ(u) − ψ(x)))` with `ψ = φ⁻¹`.
//!
//! The irq axioms survive conjugation exactly, but the approximate
//! operations now depend on ε, so limits are genuinely nontrivial.

use rand::Rng;

use crate::emergent::{sample_rng, IrqFamily, SampleRng, Scale};
use crate::error::{Error, Result};
use crate::rational::to_f64;

const ROUND_TRIP_TOL: f64 = 1e-12;
const POINT_TOL: f64 = 1e-9;

/// A smooth bijection `φ: ℝᵏ → ℝᵏ` with inverse `ψ` and Jacobian of `φ`.
pub trait Chart: Send + Sync {
    fn dim(&self) -> usize;
    fn forward(&self, p: &[f64]) -> Vec<f64>;
    fn inverse(&self, p: &[f64]) -> Vec<f64>;
    /// Row-major Jacobian of `forward` at `p`.
    fn jacobian(&self, p: &[f64]) -> Vec<Vec<f64>>;
}

/// `φ(a, b) = (a, b + a²)`, `ψ(a, b) = (a, b − a²)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuadraticChart;

impl Chart for QuadraticChart {
    fn dim(&self) -> usize {
        2
    }

    fn forward(&self, p: &[f64]) -> Vec<f64> {
        vec![p[0], p[1] + p[0] * p[0]]
    }

    fn inverse(&self, p: &[f64]) -> Vec<f64> {
        vec![p[0], p[1] - p[0] * p[0]]
    }

    fn jacobian(&self, p: &[f64]) -> Vec<Vec<f64>> {
        vec![vec![1.0, 0.0], vec![2.0 * p[0], 1.0]]
    }
}

/// The flat chart; conjugating by it gives floating-point Euclidean space.
#[derive(Clone, Copy, Debug)]
pub struct IdentityChart(pub usize);

impl Chart for IdentityChart {
    fn dim(&self) -> usize {
        self.0
    }

    fn forward(&self, p: &[f64]) -> Vec<f64> {
        p.to_vec()
    }

    fn inverse(&self, p: &[f64]) -> Vec<f64> {
        p.to_vec()
    }

    fn jacobian(&self, p: &[f64]) -> Vec<Vec<f64>> {
        (0..p.len())
            .map(|i| (0..p.len()).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect()
    }
}

pub struct ConjugatedStructure {
    chart: Box<dyn Chart>,
}

impl std::fmt::Debug for ConjugatedStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConjugatedStructure")
            .field("dim", &self.chart.dim())
            .finish()
    }
}

impl ConjugatedStructure {
    /// Validates the chart pair on sampled points before accepting it.
    pub fn new(chart: Box<dyn Chart>) -> Result<Self> {
        let dim = chart.dim();
        for i in 0..256 {
            let mut rng = sample_rng(0, "chart-round-trip", i);
            let p: Vec<f64> = (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let there = chart.forward(&chart.inverse(&p));
            let back = chart.inverse(&chart.forward(&p));
            if norm(&sub(&there, &p)) > ROUND_TRIP_TOL || norm(&sub(&back, &p)) > ROUND_TRIP_TOL {
                return Err(Error::Model(format!(
                    "chart round trip fails at {p:?}: {there:?}, {back:?}"
                )));
            }
        }
        Ok(ConjugatedStructure { chart })
    }

    pub fn default_quadratic() -> Self {
        Self::new(Box::new(QuadraticChart)).expect("quadratic chart is a bijection")
    }

    pub fn flat(dim: usize) -> Self {
        Self::new(Box::new(IdentityChart(dim))).expect("identity chart is a bijection")
    }

    pub fn chart(&self) -> &dyn Chart {
        self.chart.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    /// `d^x(u, v) = |Dφ(ψx)·(ψu − ψv)|`, the first-order limit of the
    /// rescaled distance, computed from the chart derivative.
    pub fn tangent_distance(&self, x: &[f64], u: &[f64], v: &[f64]) -> f64 {
        let jac = self.chart.jacobian(&self.chart.inverse(x));
        let w = sub(&self.chart.inverse(u), &self.chart.inverse(v));
        norm(&mat_vec(&jac, &w))
    }
}

impl IrqFamily for ConjugatedStructure {
    type Point = Vec<f64>;

    fn circle(&self, s: &Scale, x: &Vec<f64>, u: &Vec<f64>) -> Vec<f64> {
        let e = to_f64(&s.signed_factor());
        let px = self.chart.inverse(x);
        let pu = self.chart.inverse(u);
        let moved: Vec<f64> = px.iter().zip(&pu).map(|(a, b)| a + e * (b - a)).collect();
        self.chart.forward(&moved)
    }

    fn same(&self, a: &Vec<f64>, b: &Vec<f64>) -> bool {
        norm(&sub(a, b)) <= POINT_TOL
    }

    fn sample_point(&self, rng: &mut SampleRng) -> Vec<f64> {
        (0..self.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect()
    }

    fn distance(&self, a: &Vec<f64>, b: &Vec<f64>) -> Option<f64> {
        Some(norm(&sub(a, b)))
    }

    fn tolerance(&self) -> f64 {
        POINT_TOL
    }

    fn coords(&self, p: &Vec<f64>) -> Vec<f64> {
        p.clone()
    }

    fn describe(&self, p: &Vec<f64>) -> String {
        let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    a.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
