//! `(ℚᵏ, +)` with `δ_ε = ε·`, σ acting as `−id`, and the Euclidean norm.

use num::{BigRational, Zero};

use super::group::DilationGroup;
use crate::emergent::{SampleRng, Scale};
use crate::rational::{random_q, sum_of_squares};

#[derive(Clone, Copy, Debug)]
pub struct Euclidean {
    dim: usize,
}

impl Euclidean {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        Euclidean { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl DilationGroup for Euclidean {
    type Element = Vec<BigRational>;

    fn identity(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.dim]
    }

    fn mul(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().zip(b).map(|(p, q)| p + q).collect()
    }

    fn inv(&self, a: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().map(|p| -p.clone()).collect()
    }

    fn dilate(&self, s: &Scale, a: &Vec<BigRational>) -> Vec<BigRational> {
        let e = s.signed_factor();
        a.iter().map(|p| &e * p).collect()
    }

    fn gauge_power(&self) -> i32 {
        2
    }

    fn gauge_pow(&self, a: &Vec<BigRational>) -> BigRational {
        sum_of_squares(a)
    }

    fn sample(&self, rng: &mut SampleRng) -> Vec<BigRational> {
        (0..self.dim).map(|_| random_q(rng, 9, 4)).collect()
    }

    fn rat_coords(&self, a: &Vec<BigRational>) -> Vec<BigRational> {
        a.clone()
    }

    fn element_from_coords(&self, c: &[BigRational]) -> Vec<BigRational> {
        c.to_vec()
    }
}
