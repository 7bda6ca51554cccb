//! The three-dimensional Heisenberg group over ℚ with the polarized law
//! `(x₁,y₁,z₁)(x₂,y₂,z₂) = (x₁+x₂, y₁+y₂, z₁+z₂+(x₁y₂−y₁x₂)/2)`.

use std::fmt;

use num::{BigRational, Zero};
use serde::Serialize;

use super::group::DilationGroup;
use crate::emergent::{SampleRng, Scale};
use crate::rational::{q, qi, random_q, to_f64};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisenbergPoint {
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl HeisenbergPoint {
    pub fn new(x: BigRational, y: BigRational, z: BigRational) -> Self {
        HeisenbergPoint { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        HeisenbergPoint::new(qi(x), qi(y), qi(z))
    }

    pub fn identity() -> Self {
        HeisenbergPoint::new(BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn coords(&self) -> [BigRational; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

impl fmt::Display for HeisenbergPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl Serialize for HeisenbergPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn heis_mul(a: &HeisenbergPoint, b: &HeisenbergPoint) -> HeisenbergPoint {
    let twist = (&a.x * &b.y - &a.y * &b.x) * q(1, 2);
    HeisenbergPoint {
        x: &a.x + &b.x,
        y: &a.y + &b.y,
        z: &a.z + &b.z + twist,
    }
}

pub fn heis_inv(a: &HeisenbergPoint) -> HeisenbergPoint {
    HeisenbergPoint {
        x: -a.x.clone(),
        y: -a.y.clone(),
        z: -a.z.clone(),
    }
}

/// `δ_ε(x,y,z) = (εx, εy, ε²z)`; the σ part acts as `(x,y,z) ↦ (−x,−y,z)`.
pub fn heis_dilate(s: &Scale, a: &HeisenbergPoint) -> HeisenbergPoint {
    let e = s.signed_factor();
    let e2 = s.modulus() * s.modulus();
    HeisenbergPoint {
        x: &e * &a.x,
        y: &e * &a.y,
        z: e2 * &a.z,
    }
}

/// `(x² + y²)² + 16 z²`, the fourth power of the Cygan–Korányi gauge.
pub fn gauge4(a: &HeisenbergPoint) -> BigRational {
    let r2 = &a.x * &a.x + &a.y * &a.y;
    &r2 * &r2 + qi(16) * &a.z * &a.z
}

pub fn cygan_gauge(a: &HeisenbergPoint) -> f64 {
    to_f64(&gauge4(a)).powf(0.25)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Heisenberg;

impl DilationGroup for Heisenberg {
    type Element = HeisenbergPoint;

    fn identity(&self) -> HeisenbergPoint {
        HeisenbergPoint::identity()
    }

    fn mul(&self, a: &HeisenbergPoint, b: &HeisenbergPoint) -> HeisenbergPoint {
        heis_mul(a, b)
    }

    fn inv(&self, a: &HeisenbergPoint) -> HeisenbergPoint {
        heis_inv(a)
    }

    fn dilate(&self, s: &Scale, a: &HeisenbergPoint) -> HeisenbergPoint {
        heis_dilate(s, a)
    }

    fn gauge_power(&self) -> i32 {
        4
    }

    fn gauge_pow(&self, a: &HeisenbergPoint) -> BigRational {
        gauge4(a)
    }

    fn gauge(&self, a: &HeisenbergPoint) -> f64 {
        cygan_gauge(a)
    }

    fn sample(&self, rng: &mut SampleRng) -> HeisenbergPoint {
        HeisenbergPoint::new(random_q(rng, 9, 4), random_q(rng, 9, 4), random_q(rng, 9, 4))
    }

    fn rat_coords(&self, a: &HeisenbergPoint) -> Vec<BigRational> {
        a.coords().to_vec()
    }

    fn element_from_coords(&self, c: &[BigRational]) -> HeisenbergPoint {
        HeisenbergPoint::new(c[0].clone(), c[1].clone(), c[2].clone())
    }

    fn describe(&self, a: &HeisenbergPoint) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emergent::{sample_rng, Parity};
    use crate::models::{heisenberg, GroupModel};
    use rand::Rng;

    fn p(x: i64, y: i64, z: i64) -> HeisenbergPoint {
        HeisenbergPoint::from_ints(x, y, z)
    }

    #[test]
    fn group_law_examples() {
        assert_eq!(
            heis_mul(&p(1, 0, 0), &p(0, 1, 0)),
            HeisenbergPoint::new(qi(1), qi(1), q(1, 2))
        );
        let a = HeisenbergPoint::new(q(2, 3), q(-1, 5), q(7, 2));
        assert_eq!(heis_mul(&a, &HeisenbergPoint::identity()), a);
        assert_eq!(heis_mul(&a, &heis_inv(&a)), HeisenbergPoint::identity());
    }

    #[test]
    fn dilation_examples() {
        assert_eq!(heis_dilate(&Scale::ratio(2, 1), &p(1, 1, 1)), p(2, 2, 4));
        let a = HeisenbergPoint::new(q(2, 3), q(-1, 5), q(7, 2));
        assert_eq!(heis_dilate(&Scale::identity(), &a), a);
        let sigma = Scale::sigma();
        assert_eq!(heis_dilate(&sigma, &p(1, 2, 3)), p(-1, -2, 3));
        assert_eq!(heis_dilate(&sigma, &heis_dilate(&sigma, &a)), a);
    }

    #[test]
    fn gauge_examples() {
        assert_eq!(cygan_gauge(&p(1, 0, 0)), 1.0);
        assert_eq!(cygan_gauge(&p(0, 0, 1)), 2.0);
        let model = heisenberg();
        assert_eq!(model.distance_from_norm(&HeisenbergPoint::identity(), &p(0, 0, 1)), 2.0);
        let a = HeisenbergPoint::new(q(2, 3), q(-1, 5), q(7, 2));
        assert_eq!(model.distance_from_norm(&a, &a), 0.0);
    }

    #[test]
    fn dilation_identities_at_base_points() {
        let model = heisenberg();
        let x = HeisenbergPoint::new(q(1, 3), q(2, 1), q(-5, 4));
        let u = HeisenbergPoint::new(q(-3, 2), q(1, 7), q(2, 3));
        let s = Scale::ratio(3, 5);
        assert_eq!(model.group_dilation(&s, &x, &x), x);
        assert_eq!(
            model.group_dilation(&s, &HeisenbergPoint::identity(), &u),
            heis_dilate(&s, &u)
        );
    }

    fn sample_triple(rng: &mut SampleRng) -> (Scale, HeisenbergPoint, HeisenbergPoint) {
        let parity = if rng.gen_bool(0.5) { Parity::Sigma } else { Parity::Plus };
        let s = Scale::with_parity(crate::rational::random_positive_q(rng, 9), parity).unwrap();
        (s, Heisenberg.sample(rng), Heisenberg.sample(rng))
    }

    #[test]
    fn dilations_are_automorphisms() {
        for i in 0..1000 {
            let mut rng = sample_rng(11, "morphism", i);
            let (s, a, b) = sample_triple(&mut rng);
            assert_eq!(
                heis_dilate(&s, &heis_mul(&a, &b)),
                heis_mul(&heis_dilate(&s, &a), &heis_dilate(&s, &b))
            );
            assert_eq!(gauge4(&heis_dilate(&s, &a)), num::pow(s.modulus().clone(), 4) * gauge4(&a));
        }
    }

    #[test]
    fn gauge_axioms() {
        let model: GroupModel<Heisenberg> = heisenberg();
        for i in 0..500 {
            let mut rng = sample_rng(12, "gauge", i);
            let (_, a, g) = sample_triple(&mut rng);
            let b = Heisenberg.sample(&mut rng);
            assert_eq!(gauge4(&heis_inv(&a)), gauge4(&a));
            assert_eq!(gauge4(&a).is_zero(), a == HeisenbergPoint::identity());
            assert_eq!(
                model.distance_pow(&heis_mul(&g, &a), &heis_mul(&g, &b)),
                model.distance_pow(&a, &b)
            );
            assert_eq!(model.distance_pow(&a, &b), model.distance_pow(&b, &a));
        }
    }

    #[test]
    fn cygan_triangle_inequality() {
        // Floating-point evaluation over wide-ranging samples.
        let mut rng = sample_rng(13, "triangle", 0);
        let mut worst = f64::NEG_INFINITY;
        for _ in 0..100_000 {
            let mut coord = || rng.gen_range(-4.0..4.0f64);
            let (ax, ay, az, bx, by, bz) = (coord(), coord(), coord(), coord(), coord(), coord());
            let g = |x: f64, y: f64, z: f64| ((x * x + y * y).powi(2) + 16.0 * z * z).powf(0.25);
            let ab = g(ax + bx, ay + by, az + bz + 0.5 * (ax * by - ay * bx));
            worst = worst.max(ab - g(ax, ay, az) - g(bx, by, bz));
        }
        assert!(worst <= 1e-12, "triangle inequality violated by {worst}");
    }
}
