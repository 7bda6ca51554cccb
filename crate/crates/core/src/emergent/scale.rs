//! The scale group Γ = (0,∞) × ℤ₂ and its modulus morphism.

use std::fmt;
use std::ops::Mul;

use num::{BigRational, One, Signed};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{pow, q, to_f64};

/// The ℤ₂ part of a scale. `Sigma` is the order-two element σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Parity {
    #[default]
    Plus,
    Sigma,
}

impl Parity {
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Plus
        } else {
            Parity::Sigma
        }
    }

    pub fn is_sigma(self) -> bool {
        self == Parity::Sigma
    }
}

/// An element of Γ: a positive rational factor together with a parity bit.
///
/// The group is commutative, `σ·σ = 1`, and `modulus` forgets the parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scale {
    factor: BigRational,
    parity: Parity,
}

impl Scale {
    pub fn new(factor: BigRational) -> Result<Self> {
        Self::with_parity(factor, Parity::Plus)
    }

    pub fn with_parity(factor: BigRational, parity: Parity) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::NonPositiveScale(factor.to_string()));
        }
        Ok(Scale { factor, parity })
    }

    /// `num/den`, panicking on a non-positive ratio. Meant for literals.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(q(num, den)).expect("literal scale must be positive")
    }

    pub fn identity() -> Self {
        Scale {
            factor: BigRational::one(),
            parity: Parity::Plus,
        }
    }

    /// The pure order-two element σ (factor 1).
    pub fn sigma() -> Self {
        Scale {
            factor: BigRational::one(),
            parity: Parity::Sigma,
        }
    }

    /// `2^-k` with parity `+`.
    pub fn dyadic(k: i32) -> Self {
        Scale {
            factor: pow(&q(1, 2), k),
            parity: Parity::Plus,
        }
    }

    /// `base^k`; integer iterates of a ℤ-irq are embedded this way.
    pub fn power(base: &Scale, k: i32) -> Self {
        let parity = if k.rem_euclid(2) == 1 {
            base.parity
        } else {
            Parity::Plus
        };
        Scale {
            factor: pow(&base.factor, k),
            parity,
        }
    }

    pub fn factor(&self) -> &BigRational {
        &self.factor
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn combine(&self, other: &Scale) -> Scale {
        Scale {
            factor: &self.factor * &other.factor,
            parity: self.parity.compose(other.parity),
        }
    }

    pub fn invert(&self) -> Scale {
        Scale {
            factor: self.factor.recip(),
            parity: self.parity,
        }
    }

    /// |ε| = |σε| = ε.
    pub fn modulus(&self) -> &BigRational {
        &self.factor
    }

    pub fn modulus_f64(&self) -> f64 {
        to_f64(&self.factor)
    }

    /// The signed real factor `±ε` a linear carrier multiplies by: σ acts as −1.
    pub fn signed_factor(&self) -> BigRational {
        match self.parity {
            Parity::Plus => self.factor.clone(),
            Parity::Sigma => -self.factor.clone(),
        }
    }

    pub fn with_parity_of(&self, parity: Parity) -> Scale {
        Scale {
            factor: self.factor.clone(),
            parity,
        }
    }

    /// The integer `k` with `self = base^k`, if any. Only the factor is compared.
    pub fn exponent_of(&self, base: &Scale) -> Option<i32> {
        if base.factor.is_one() {
            return self.factor.is_one().then_some(0);
        }
        for k in 0..=64 {
            if pow(&base.factor, k) == self.factor {
                return Some(k);
            }
            if pow(&base.factor, -k) == self.factor {
                return Some(-k);
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.factor.is_one() && self.parity == Parity::Plus
    }
}

impl Mul for &Scale {
    type Output = Scale;

    fn mul(self, rhs: &Scale) -> Scale {
        self.combine(rhs)
    }
}

impl Mul for Scale {
    type Output = Scale;

    fn mul(self, rhs: Scale) -> Scale {
        self.combine(&rhs)
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity {
            Parity::Plus => write!(f, "{}", self.factor),
            Parity::Sigma => write!(f, "{}σ", self.factor),
        }
    }
}

impl Serialize for Scale {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn combine_rationals() {
        assert_eq!(Scale::ratio(2, 1) * Scale::ratio(3, 1), Scale::ratio(6, 1));
    }

    #[test]
    fn sigma_squares_to_one() {
        let eps = q(3, 7);
        let a = Scale::with_parity(eps.clone(), Parity::Sigma).unwrap();
        let b = Scale::with_parity(eps.recip(), Parity::Sigma).unwrap();
        let prod = a.combine(&b);
        assert!(prod.is_identity());
        assert_eq!(prod, Scale::identity());
    }

    #[test]
    fn modulus_ignores_parity() {
        let s = Scale::with_parity(q(5, 7), Parity::Sigma).unwrap();
        assert_eq!(s.modulus(), &q(5, 7));
        assert_eq!(s.modulus(), Scale::ratio(5, 7).modulus());
    }

    #[test]
    fn non_positive_rejected() {
        assert!(Scale::new(q(0, 1)).is_err());
        assert!(Scale::new(q(-1, 3)).is_err());
    }

    #[test]
    fn exponent_recovery() {
        let base = Scale::ratio(1, 2);
        assert_eq!(Scale::dyadic(5).exponent_of(&base), Some(5));
        assert_eq!(Scale::dyadic(-3).exponent_of(&base), Some(-3));
        assert_eq!(Scale::ratio(1, 3).exponent_of(&base), None);
    }

    fn scale() -> impl Strategy<Value = Scale> {
        (1i64..50, 1i64..50, any::<bool>()).prop_map(|(n, d, s)| {
            let parity = if s { Parity::Sigma } else { Parity::Plus };
            Scale::with_parity(q(n, d), parity).unwrap()
        })
    }

    proptest! {
        #[test]
        fn modulus_is_multiplicative(a in scale(), b in scale()) {
            prop_assert_eq!(a.combine(&b).modulus().clone(), a.modulus() * b.modulus());
        }

        #[test]
        fn group_laws(a in scale(), b in scale(), c in scale()) {
            prop_assert_eq!(a.combine(&b), b.combine(&a));
            prop_assert_eq!(a.combine(&b).combine(&c), a.combine(&b.combine(&c)));
            prop_assert!(a.combine(&a.invert()).is_identity());
            prop_assert_eq!(a.combine(&Scale::identity()), a.clone());
        }
    }
}
