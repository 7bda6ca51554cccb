//! Quandle constructors from finite groups.

use super::table::OpTable;
use crate::error::{Error, Result};

/// A validated finite group: multiplication table, neutral element, inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: OpTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }
}

/// Checks associativity (all n³ triples), a two-sided identity and inverses.
pub fn validate_group(t: &OpTable) -> Result<GroupTable> {
    let n = t.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.get(t.get(a, b), c) != t.get(a, t.get(b, c)) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| t.get(e, a) == a && t.get(a, e) == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let inverse = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| t.get(a, b) == identity && t.get(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupTable {
        table: t.clone(),
        identity,
        inverse,
    })
}

pub fn cyclic_group(n: usize) -> GroupTable {
    validate_group(&OpTable::from_fn(n, |a, b| (a + b) % n)).expect("ℤ/n is a group")
}

/// `x ∗ y = y`.
pub fn trivial_quandle(n: usize) -> OpTable {
    OpTable::from_fn(n, |_, y| y)
}

/// `R_n`: `x ∗ y = 2x − y mod n`.
pub fn dihedral_quandle(n: usize) -> OpTable {
    OpTable::from_fn(n, |x, y| (2 * x + n - y) % n)
}

/// The core quandle `x ∗ y = x · y⁻¹ · x`.
pub fn make_core_quandle(g: &OpTable) -> Result<OpTable> {
    let g = validate_group(g)?;
    Ok(OpTable::from_fn(g.n(), |x, y| g.mul(g.mul(x, g.inv(y)), x)))
}

/// `x ∗ y = x · α(x⁻¹ · y)` for a group automorphism `α`.
pub fn make_automorphism_quandle(g: &OpTable, alpha: &[usize]) -> Result<OpTable> {
    let g = validate_group(g)?;
    let n = g.n();
    if alpha.len() != n {
        return Err(Error::NotAnAutomorphism(format!(
            "map has {} entries for a group of order {n}",
            alpha.len()
        )));
    }
    let mut seen = vec![false; n];
    for (a, &img) in alpha.iter().enumerate() {
        if img >= n || seen[img] {
            return Err(Error::NotAnAutomorphism(format!(
                "not a permutation at element {a}"
            )));
        }
        seen[img] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if alpha[g.mul(a, b)] != g.mul(alpha[a], alpha[b]) {
                return Err(Error::NotAnAutomorphism(format!(
                    "α({a}·{b}) ≠ α({a})·α({b}), witness pair ({a}, {b})"
                )));
            }
        }
    }
    Ok(OpTable::from_fn(n, |x, y| g.mul(x, alpha[g.mul(g.inv(x), y)])))
}
