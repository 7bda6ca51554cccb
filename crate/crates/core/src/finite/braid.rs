//! Braided maps `S: X² → X²` on finite sets.

use serde::Serialize;

use super::table::OpTable;

/// `S(x, y) = (s1[x][y], s2[x][y])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBraidMap {
    n: usize,
    s1: Vec<Vec<usize>>,
    s2: Vec<Vec<usize>>,
}

impl FiniteBraidMap {
    pub fn new(s1: Vec<Vec<usize>>, s2: Vec<Vec<usize>>) -> Self {
        let n = s1.len();
        assert!(s2.len() == n && s1.iter().chain(&s2).all(|r| r.len() == n));
        FiniteBraidMap { n, s1, s2 }
    }

    /// The rack map `S(x, y) = (x ∗ y, x)`.
    pub fn from_table(t: &OpTable) -> Self {
        let n = t.n();
        let s1 = t.rows().to_vec();
        let s2 = (0..n).map(|x| vec![x; n]).collect();
        FiniteBraidMap { n, s1, s2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.s1[x][y], self.s2[x][y])
    }

    fn s12(&self, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
        let (p, q) = self.apply(a, b);
        (p, q, c)
    }

    fn s23(&self, (a, b, c): (usize, usize, usize)) -> (usize, usize, usize) {
        let (p, q) = self.apply(b, c);
        (a, p, q)
    }

    /// First triple violating `S¹²S²³S¹² = S²³S¹²S²³`, if any.
    pub fn braid_violation(&self) -> Option<[usize; 3]> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = (a, b, c);
                    if self.s12(self.s23(self.s12(t))) != self.s23(self.s12(self.s23(t))) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                let (p, q) = self.apply(x, y);
                hit[p * self.n + q] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// `(which, fixed)` for the first non-bijective partial map:
    /// `which = 2` for `x ↦ S₂(x, fixed)`, `which = 1` for `x ↦ S₁(fixed, x)`.
    pub fn degeneracy(&self) -> Option<[usize; 2]> {
        let n = self.n;
        for fixed in 0..n {
            let mut seen2 = vec![false; n];
            let mut seen1 = vec![false; n];
            for x in 0..n {
                seen2[self.s2[x][fixed]] = true;
                seen1[self.s1[fixed][x]] = true;
            }
            if !seen2.iter().all(|&s| s) {
                return Some([2, fixed]);
            }
            if !seen1.iter().all(|&s| s) {
                return Some([1, fixed]);
            }
        }
        None
    }

    /// First pair with `S(S(x, y)) ≠ (x, y)`.
    pub fn involution_violation(&self) -> Option<[usize; 2]> {
        let n = self.n;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let (p, q) = self.apply(x, y);
                self.apply(p, q) != (x, y)
            })
            .map(|(x, y)| [x, y])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidReport {
    pub n: usize,
    pub bijective: bool,
    pub braid_relation: bool,
    pub braid_witness: Option<[usize; 3]>,
    pub non_degenerate: bool,
    pub degeneracy_witness: Option<[usize; 2]>,
    pub involutive: bool,
    pub involution_witness: Option<[usize; 2]>,
}

impl BraidReport {
    /// A braided set that is also involutive.
    pub fn symmetric(&self) -> bool {
        self.braid_relation && self.involutive
    }
}

/// Builds `S(x, y) = (x ∗ y, x)` and decides the braid relation,
/// non-degeneracy and involutivity exhaustively.
pub fn braid_audit(t: &OpTable) -> BraidReport {
    let s = FiniteBraidMap::from_table(t);
    let braid_witness = s.braid_violation();
    let degeneracy_witness = s.degeneracy();
    let involution_witness = s.involution_violation();
    BraidReport {
        n: t.n(),
        bijective: s.is_bijective(),
        braid_relation: braid_witness.is_none(),
        braid_witness,
        non_degenerate: degeneracy_witness.is_none(),
        degeneracy_witness,
        involutive: involution_witness.is_none(),
        involution_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{classify, dihedral_quandle, trivial_quandle};

    #[test]
    fn trivial_quandle_gives_symmetric_set() {
        let r = braid_audit(&trivial_quandle(4));
        assert!(r.braid_relation && r.involutive && r.symmetric() && r.bijective);
        // S is the swap.
        let s = FiniteBraidMap::from_table(&trivial_quandle(4));
        assert_eq!(s.apply(1, 3), (3, 1));
    }

    #[test]
    fn dihedral_is_braided_not_involutive() {
        let r = braid_audit(&dihedral_quandle(5));
        assert!(r.braid_relation && r.non_degenerate && r.bijective);
        assert!(!r.involutive);
    }

    #[test]
    fn non_distributive_right_quasigroup_fails_braid() {
        // ℤ₃ under addition: rows are permutations but x + (y + z) ≠ (x + y) + (x + z).
        let t = OpTable::from_fn(3, |x, y| (x + y) % 3);
        assert!(classify(&t).right_quasigroup);
        assert!(!classify(&t).self_distributive);
        let r = braid_audit(&t);
        assert!(!r.braid_relation);
        let [a, b, c] = r.braid_witness.unwrap();
        assert_ne!(t.get(a, t.get(b, c)), t.get(t.get(a, b), t.get(a, c)));
    }

    #[test]
    fn degenerate_when_rows_not_permutations() {
        let t = OpTable::from_fn(3, |x, _| x);
        let r = braid_audit(&t);
        assert!(!r.non_degenerate);
        assert_eq!(r.degeneracy_witness, Some([1, 0]));
    }
}
