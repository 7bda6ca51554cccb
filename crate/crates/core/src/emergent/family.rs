use std::fmt::Debug;

use rand::Rng;

use super::audit::SampleRng;
use super::scale::{Parity, Scale};
use crate::rational::random_positive_q;

/// A carrier with a Γ-indexed family of idempotent right quasigroup
/// operations: `circle(ε, x, u) = x ∘_ε u` and its left inverse
/// `bullet(ε, x, u) = x •_ε u`.
///
/// For dilation structures `x ∘_ε u = δ^x_ε u` and the bullet is the circle
/// at `ε⁻¹`, which is what the default `bullet` does.
pub trait IrqFamily: Sync {
    type Point: Clone + Debug + Send + Sync;

    fn circle(&self, s: &Scale, x: &Self::Point, u: &Self::Point) -> Self::Point;

    fn bullet(&self, s: &Scale, x: &Self::Point, u: &Self::Point) -> Self::Point {
        self.circle(&s.invert(), x, u)
    }

    /// Equality test: structural on exact carriers, `distance <= tolerance`
    /// on floating-point ones.
    fn same(&self, a: &Self::Point, b: &Self::Point) -> bool;

    fn sample_point(&self, rng: &mut SampleRng) -> Self::Point;

    /// Random element of Γ. Both parities are drawn unless the carrier only
    /// implements the (0,∞) part.
    fn sample_scale(&self, rng: &mut SampleRng) -> Scale {
        let parity = if self.supports_sigma() && rng.gen_bool(0.5) {
            Parity::Sigma
        } else {
            Parity::Plus
        };
        Scale::with_parity(random_positive_q(rng, 9), parity).expect("positive by construction")
    }

    fn supports_sigma(&self) -> bool {
        true
    }

    fn distance(&self, _a: &Self::Point, _b: &Self::Point) -> Option<f64> {
        None
    }

    /// 0 for exact carriers.
    fn tolerance(&self) -> f64 {
        0.0
    }

    fn is_exact(&self) -> bool {
        self.tolerance() == 0.0
    }

    /// Floating-point coordinates, used by the numerical limit engine.
    fn coords(&self, p: &Self::Point) -> Vec<f64>;

    /// Human-readable and replayable rendering of a point for witnesses.
    fn describe(&self, p: &Self::Point) -> String {
        format!("{p:?}")
    }

    /// Generator of the integer iterates `∘_k`, `k ∈ ℤ`.
    fn base_ratio(&self) -> Scale {
        Scale::ratio(1, 2)
    }
}
