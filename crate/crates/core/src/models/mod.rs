//! Concrete carriers: groups with dilations (Euclidean ℚᵏ, Heisenberg) turned
//! into dilation structures by `δ^x_ε u = x δ_ε(x⁻¹u)`, and a Euclidean
//! structure conjugated by a nonlinear chart.

mod conjugated;
mod euclidean;
mod group;
mod heisenberg;

use std::fmt;
use std::str::FromStr;

pub use conjugated::{Chart, ConjugatedStructure, IdentityChart, QuadraticChart};
pub use euclidean::Euclidean;
pub use group::{DilationGroup, GroupModel};
pub use heisenberg::{
    cygan_gauge, gauge4, heis_dilate, heis_inv, heis_mul, Heisenberg, HeisenbergPoint,
};

use crate::error::Error;

/// A model name as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Euclidean(usize),
    Heisenberg,
    ConjugatedDefault,
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "heisenberg" => Ok(ModelSpec::Heisenberg),
            "conjugated:default" | "conjugated" => Ok(ModelSpec::ConjugatedDefault),
            _ => {
                let dim = s
                    .strip_prefix("euclidean:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| Error::UnknownModel(s.to_string()))?;
                Ok(ModelSpec::Euclidean(dim))
            }
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Euclidean(k) => write!(f, "euclidean:{k}"),
            ModelSpec::Heisenberg => f.write_str("heisenberg"),
            ModelSpec::ConjugatedDefault => f.write_str("conjugated:default"),
        }
    }
}

pub fn heisenberg() -> GroupModel<Heisenberg> {
    GroupModel::new(Heisenberg)
}

pub fn euclidean(dim: usize) -> GroupModel<Euclidean> {
    GroupModel::new(Euclidean::new(dim))
}
