//! Quandles of small order up to isomorphism.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::table::OpTable;
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;
pub const MAX_ORDER: usize = 6;

/// Advances `perm` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn all_relabelings(t: &OpTable) -> Vec<OpTable> {
    let mut perm: Vec<usize> = (0..t.n()).collect();
    let mut out = vec![t.relabel(&perm)];
    while next_permutation(&mut perm) {
        out.push(t.relabel(&perm));
    }
    out
}

/// The lexicographically smallest table among all relabelings of `t`.
pub fn canonical_form(t: &OpTable) -> OpTable {
    all_relabelings(t)
        .into_iter()
        .min()
        .expect("at least the identity relabeling")
}

struct Search {
    n: usize,
    cells: Vec<usize>,
    used: Vec<Vec<bool>>,
}

impl Search {
    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    /// Every fully determined instance of `x ∗ (y ∗ z) = (x ∗ y) ∗ (x ∗ z)`
    /// holds.
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let lhs = self.get(x, yz);
                    let xz = self.get(x, z);
                    if lhs == UNSET || xy == UNSET || xz == UNSET {
                        continue;
                    }
                    let rhs = self.get(xy, xz);
                    if rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize, out: &mut Vec<OpTable>) {
        let n = self.n;
        if pos == n * n {
            let rows = self.cells.chunks(n).map(|c| c.to_vec()).collect();
            out.push(OpTable::from_rows_unchecked(rows));
            return;
        }
        let (x, y) = (pos / n, pos % n);
        if x == y {
            return self.run(pos + 1, out);
        }
        for v in 0..n {
            if self.used[x][v] {
                continue;
            }
            self.cells[pos] = v;
            self.used[x][v] = true;
            if self.consistent() {
                self.run(pos + 1, out);
            }
            self.used[x][v] = false;
            self.cells[pos] = UNSET;
        }
    }
}

fn first_rows(n: usize) -> Vec<Vec<usize>> {
    // Row 0 fixes 0 and permutes the rest.
    let mut rest: Vec<usize> = (1..n).collect();
    let mut rows = Vec::new();
    loop {
        let mut row = vec![0];
        row.extend_from_slice(&rest);
        rows.push(row);
        if !next_permutation(&mut rest) {
            break;
        }
    }
    rows
}

/// Every quandle structure on `{0, …, n−1}` (not up to isomorphism), in
/// lexicographic order.
pub fn enumerate_quandles_labeled(n: usize) -> Result<Vec<OpTable>> {
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let mut found: Vec<OpTable> = first_rows(n)
        .into_par_iter()
        .map(|row| {
            let mut cells = vec![UNSET; n * n];
            let mut used = vec![vec![false; n]; n];
            for (y, &v) in row.iter().enumerate() {
                cells[y] = v;
                used[0][v] = true;
            }
            for x in 1..n {
                cells[x * n + x] = x;
                used[x][x] = true;
            }
            let mut search = Search { n, cells, used };
            let mut out = Vec::new();
            if search.consistent() {
                search.run(n, &mut out);
            }
            out
        })
        .flatten()
        .collect();
    found.sort();
    Ok(found)
}

/// One canonical representative per isomorphism class, sorted.
pub fn enumerate_quandles(n: usize) -> Result<Vec<OpTable>> {
    let labeled = enumerate_quandles_labeled(n)?;
    let mut seen: HashSet<OpTable> = HashSet::new();
    let mut canon = BTreeSet::new();
    for t in labeled {
        if seen.contains(&t) {
            continue;
        }
        let orbit = all_relabelings(&t);
        canon.insert(orbit.iter().min().cloned().expect("nonempty orbit"));
        seen.extend(orbit);
    }
    Ok(canon.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{classify, dihedral_quandle};

    #[test]
    fn permutations_in_order() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_quandles(1).unwrap().len(), 1);
        assert_eq!(enumerate_quandles(2).unwrap().len(), 1);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(enumerate_quandles(0), Err(Error::EnumerationRange(0))));
        assert!(matches!(enumerate_quandles(7), Err(Error::EnumerationRange(7))));
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let t = dihedral_quandle(5);
        let c = canonical_form(&t);
        assert_eq!(canonical_form(&t.relabel(&[3, 1, 4, 0, 2])), c);
        assert!(classify(&c).quandle);
    }
}
