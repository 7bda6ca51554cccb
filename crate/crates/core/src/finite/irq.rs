use rand::Rng;

use super::classify::classify;
use super::table::OpTable;
use crate::emergent::{IrqFamily, SampleRng, Scale};
use crate::error::{Error, Result};

/// A finite irq viewed as a ℤ-irq: the scale `r^k` (r the base ratio) acts as
/// the k-th iterate of `x ∘ ·`, negative `k` through the left division `•`.
#[derive(Clone, Debug)]
pub struct FiniteIrq {
    circle: OpTable,
    bullet: OpTable,
}

impl FiniteIrq {
    /// Requires every row to be a permutation; `x • y` is the unique `z`
    /// with `x ∘ z = y`.
    pub fn from_table(t: &OpTable) -> Result<Self> {
        let flags = classify(t);
        if !flags.right_quasigroup {
            return Err(Error::TableFormat(format!(
                "not a right quasigroup, witness {:?}",
                flags.witnesses["right_quasigroup"]
            )));
        }
        let n = t.n();
        let mut bullet = vec![vec![0; n]; n];
        for x in 0..n {
            for z in 0..n {
                bullet[x][t.get(x, z)] = z;
            }
        }
        Ok(FiniteIrq {
            circle: t.clone(),
            bullet: OpTable::from_rows_unchecked(bullet),
        })
    }

    /// Replaces `∘` while keeping the current `•`, e.g. to plant a defect.
    pub fn with_circle(mut self, circle: OpTable) -> Self {
        assert_eq!(circle.n(), self.circle.n());
        self.circle = circle;
        self
    }

    fn exponent(&self, s: &Scale) -> i32 {
        s.exponent_of(&self.base_ratio())
            .unwrap_or_else(|| panic!("scale {s} is not a power of the base ratio"))
    }
}

impl IrqFamily for FiniteIrq {
    type Point = usize;

    fn circle(&self, s: &Scale, x: &usize, u: &usize) -> usize {
        let k = self.exponent(s);
        let table = if k >= 0 { &self.circle } else { &self.bullet };
        (0..k.unsigned_abs()).fold(*u, |acc, _| table.get(*x, acc))
    }

    fn bullet(&self, s: &Scale, x: &usize, u: &usize) -> usize {
        self.circle(&s.invert(), x, u)
    }

    fn same(&self, a: &usize, b: &usize) -> bool {
        a == b
    }

    fn sample_point(&self, rng: &mut SampleRng) -> usize {
        rng.gen_range(0..self.circle.n())
    }

    fn sample_scale(&self, rng: &mut SampleRng) -> Scale {
        Scale::power(&self.base_ratio(), rng.gen_range(-3..=3))
    }

    fn supports_sigma(&self) -> bool {
        false
    }

    fn coords(&self, p: &usize) -> Vec<f64> {
        vec![*p as f64]
    }

    fn describe(&self, p: &usize) -> String {
        p.to_string()
    }
}
