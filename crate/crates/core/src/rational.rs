//! Small helpers around `BigRational`.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Q) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Integer power with negative exponents allowed (base must be nonzero then).
pub fn pow(base: &Q, exp: i32) -> Q {
    if exp >= 0 {
        num::pow(base.clone(), exp as usize)
    } else {
        num::pow(base.recip(), (-exp) as usize)
    }
}

/// Random rational with numerator in `-num_bound..=num_bound` and denominator
/// in `1..=den_bound`.
pub fn random_q<R: Rng + ?Sized>(rng: &mut R, num_bound: i64, den_bound: i64) -> Q {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=den_bound);
    q(n, d)
}

/// Random positive rational p/q with p, q in `1..=bound`.
pub fn random_positive_q<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Q {
    q(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
}

pub fn is_positive(r: &Q) -> bool {
    r.is_positive()
}

pub fn sum_of_squares(xs: &[Q]) -> Q {
    xs.iter().fold(Q::zero(), |acc, x| acc + x * x)
}

pub fn one() -> Q {
    Q::one()
}
