use num::BigRational;
use serde::Serialize;

use crate::emergent::{Parity, Scale};
use crate::error::{Error, Result};
use crate::rational::q;

/// A finite strictly decreasing sequence of scales, standing in for the
/// limit `ε → 0` (or `ε → 0σ` when every scale carries σ).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Schedule {
    scales: Vec<Scale>,
}

impl Schedule {
    pub fn new(scales: Vec<Scale>) -> Result<Self> {
        if scales.is_empty() {
            return Err(Error::InvalidSchedule("no scales".into()));
        }
        let half: BigRational = q(1, 2);
        if let Some(s) = scales.iter().find(|s| s.modulus() > &half) {
            return Err(Error::InvalidSchedule(format!("modulus of {s} exceeds 1/2")));
        }
        if let Some(w) = scales.windows(2).find(|w| w[1].modulus() >= w[0].modulus()) {
            return Err(Error::InvalidSchedule(format!(
                "moduli not strictly decreasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Schedule { scales })
    }

    /// `2^-first, …, 2^-last`.
    pub fn dyadic(first: i32, last: i32) -> Result<Self> {
        Self::new((first..=last).map(Scale::dyadic).collect())
    }

    /// `2^-1, …, 2^-depth`.
    pub fn depth(depth: usize) -> Result<Self> {
        Self::dyadic(1, depth as i32)
    }

    /// The same moduli approached along the σ-translated direction.
    pub fn with_parity(&self, parity: Parity) -> Self {
        Schedule {
            scales: self.scales.iter().map(|s| s.with_parity_of(parity)).collect(),
        }
    }

    pub fn scales(&self) -> &[Scale] {
        &self.scales
    }

    pub fn epsilons(&self) -> Vec<f64> {
        self.scales.iter().map(Scale::modulus_f64).collect()
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }
}

impl Default for Schedule {
    fn default() -> Self {
        Self::dyadic(1, 20).expect("valid default schedule")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_schedule() {
        let s = Schedule::default();
        assert_eq!(s.len(), 20);
        assert_eq!(s.epsilons()[0], 0.5);
        assert_eq!(s.epsilons()[19], 2f64.powi(-20));
    }

    #[test]
    fn rejects_bad_schedules() {
        assert!(Schedule::new(vec![]).is_err());
        assert!(Schedule::new(vec![Scale::ratio(3, 4)]).is_err());
        assert!(Schedule::new(vec![Scale::dyadic(2), Scale::dyadic(2)]).is_err());
        assert!(Schedule::new(vec![Scale::dyadic(3), Scale::dyadic(2)]).is_err());
    }

    #[test]
    fn sigma_direction_keeps_moduli() {
        let s = Schedule::dyadic(1, 4).unwrap().with_parity(Parity::Sigma);
        assert!(s.scales().iter().all(|e| e.parity() == Parity::Sigma));
        assert_eq!(s.epsilons(), Schedule::dyadic(1, 4).unwrap().epsilons());
    }
}
