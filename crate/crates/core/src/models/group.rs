use std::fmt::Debug;

use num::BigRational;

use crate::emergent::{IrqFamily, SampleRng, Scale};
use crate::rational::{pow, to_f64};

/// A group with dilations `δ_ε` that are group automorphisms (a conical
/// group), together with a homogeneous gauge `‖δ_ε a‖ = |ε|·‖a‖`.
///
/// The gauge is exposed exactly through a power `‖a‖^p` that is rational on
/// rational points; `σ` acts through an involutive automorphism commuting
/// with every `δ_ε`.
pub trait DilationGroup: Sync {
    type Element: Clone + Debug + PartialEq + Send + Sync;

    fn identity(&self) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inv(&self, a: &Self::Element) -> Self::Element;
    fn dilate(&self, s: &Scale, a: &Self::Element) -> Self::Element;

    /// The exponent `p` for which `gauge_pow` is exact.
    fn gauge_power(&self) -> i32;
    /// `‖a‖^p`, exactly.
    fn gauge_pow(&self, a: &Self::Element) -> BigRational;

    fn gauge(&self, a: &Self::Element) -> f64 {
        to_f64(&self.gauge_pow(a)).powf(1.0 / self.gauge_power() as f64)
    }

    fn sample(&self, rng: &mut SampleRng) -> Self::Element;

    fn rat_coords(&self, a: &Self::Element) -> Vec<BigRational>;
    fn element_from_coords(&self, c: &[BigRational]) -> Self::Element;

    fn describe(&self, a: &Self::Element) -> String {
        let parts: Vec<String> = self.rat_coords(a).iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

/// The dilation structure of a normed group with dilations:
/// `d(a, b) = ‖a⁻¹b‖` and `δ^x_ε u = x δ_ε(x⁻¹u)`.
#[derive(Clone, Debug, Default)]
pub struct GroupModel<G> {
    group: G,
}

impl<G: DilationGroup> GroupModel<G> {
    pub fn new(group: G) -> Self {
        GroupModel { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    /// `δ^x_ε u = x · δ_ε(x⁻¹ · u)`.
    pub fn group_dilation(&self, s: &Scale, x: &G::Element, u: &G::Element) -> G::Element {
        let g = &self.group;
        g.mul(x, &g.dilate(s, &g.mul(&g.inv(x), u)))
    }

    /// `a⁻¹ b`, the group-level displacement whose gauge is the distance.
    pub fn displacement(&self, a: &G::Element, b: &G::Element) -> G::Element {
        self.group.mul(&self.group.inv(a), b)
    }

    /// `d(a, b) = ‖a⁻¹ b‖`.
    pub fn distance_from_norm(&self, a: &G::Element, b: &G::Element) -> f64 {
        self.group.gauge(&self.displacement(a, b))
    }

    /// `d(a, b)^p`, exactly.
    pub fn distance_pow(&self, a: &G::Element, b: &G::Element) -> BigRational {
        self.group.gauge_pow(&self.displacement(a, b))
    }

    /// `(1/|ε|) d(δ^x_ε u, δ^x_ε v)`, evaluated at the exact `p`-th power
    /// level before the single floating-point root.
    pub fn rescaled_distance(
        &self,
        s: &Scale,
        x: &G::Element,
        u: &G::Element,
        v: &G::Element,
    ) -> f64 {
        let du = self.group_dilation(s, x, u);
        let dv = self.group_dilation(s, x, v);
        let p = self.group.gauge_power();
        let scaled = self.distance_pow(&du, &dv) / pow(s.modulus(), p);
        to_f64(&scaled).powf(1.0 / p as f64)
    }

    /// `d(u, v)` by the same exact-then-root path as `rescaled_distance`.
    pub fn exact_path_distance(&self, u: &G::Element, v: &G::Element) -> f64 {
        to_f64(&self.distance_pow(u, v)).powf(1.0 / self.group.gauge_power() as f64)
    }

    pub fn left_translate(&self, g: &G::Element, a: &G::Element) -> G::Element {
        self.group.mul(g, a)
    }
}

impl<G: DilationGroup> IrqFamily for GroupModel<G> {
    type Point = G::Element;

    fn circle(&self, s: &Scale, x: &Self::Point, u: &Self::Point) -> Self::Point {
        self.group_dilation(s, x, u)
    }

    fn same(&self, a: &Self::Point, b: &Self::Point) -> bool {
        a == b
    }

    fn sample_point(&self, rng: &mut SampleRng) -> Self::Point {
        self.group.sample(rng)
    }

    fn distance(&self, a: &Self::Point, b: &Self::Point) -> Option<f64> {
        Some(self.distance_from_norm(a, b))
    }

    fn coords(&self, p: &Self::Point) -> Vec<f64> {
        self.group.rat_coords(p).iter().map(to_f64).collect()
    }

    fn describe(&self, p: &Self::Point) -> String {
        self.group.describe(p)
    }
}
