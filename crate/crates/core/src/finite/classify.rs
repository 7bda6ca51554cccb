//! Exhaustive classification of a finite operation table.

use std::collections::BTreeMap;

use serde::Serialize;

use super::table::OpTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub right_quasigroup: bool,
    pub quasigroup: bool,
    pub idempotent: bool,
    pub self_distributive: bool,
    pub rack: bool,
    pub quandle: bool,
    pub involutory: bool,
    pub loos: bool,
    /// Failed property → first counterexample tuple in lexicographic order.
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoosReport {
    /// `x ∗ x = x`
    pub l1: bool,
    /// `x ∗ (y ∗ z) = (x ∗ y) ∗ (x ∗ z)`
    pub l2: bool,
    /// `x ∗ (x ∗ y) = y`
    pub l3: bool,
    /// Discrete rigidity: `x ∗ y = y ⇒ x = y`.
    pub l4: bool,
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

impl LoosReport {
    pub fn passed(&self) -> bool {
        self.l1 && self.l2 && self.l3 && self.l4
    }
}

/// A row `x` with `x ∗ y₁ = x ∗ y₂`, `y₁ < y₂`.
fn non_injective_row(t: &OpTable) -> Option<Vec<usize>> {
    let n = t.n();
    for x in 0..n {
        let mut seen = vec![None; n];
        for y in 0..n {
            let v = t.get(x, y);
            if let Some(prev) = seen[v] {
                return Some(vec![x, prev, y]);
            }
            seen[v] = Some(y);
        }
    }
    None
}

/// A column `y` with `x₁ ∗ y = x₂ ∗ y`, `x₁ < x₂`.
fn non_injective_column(t: &OpTable) -> Option<Vec<usize>> {
    let n = t.n();
    for y in 0..n {
        let mut seen = vec![None; n];
        for x in 0..n {
            let v = t.get(x, y);
            if let Some(prev) = seen[v] {
                return Some(vec![prev, x, y]);
            }
            seen[v] = Some(x);
        }
    }
    None
}

fn non_idempotent(t: &OpTable) -> Option<Vec<usize>> {
    (0..t.n()).find(|&x| t.get(x, x) != x).map(|x| vec![x])
}

fn non_distributive(t: &OpTable) -> Option<Vec<usize>> {
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t.get(x, t.get(y, z)) != t.get(t.get(x, y), t.get(x, z)) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

fn non_involutory(t: &OpTable) -> Option<Vec<usize>> {
    let n = t.n();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| t.get(x, t.get(x, y)) != y)
        .map(|(x, y)| vec![x, y])
}

fn non_rigid(t: &OpTable) -> Option<Vec<usize>> {
    let n = t.n();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| x != y && t.get(x, y) == y)
        .map(|(x, y)| vec![x, y])
}

/// Loos axioms L1–L3 exhaustively, L4 in its discrete global form.
pub fn check_loos(t: &OpTable) -> LoosReport {
    let mut witnesses = BTreeMap::new();
    let mut record = |name: &str, w: Option<Vec<usize>>| match w {
        Some(w) => {
            witnesses.insert(name.to_string(), w);
            false
        }
        None => true,
    };
    let l1 = record("L1", non_idempotent(t));
    let l2 = record("L2", non_distributive(t));
    let l3 = record("L3", non_involutory(t));
    let l4 = record("L4", non_rigid(t));
    LoosReport {
        l1,
        l2,
        l3,
        l4,
        witnesses,
    }
}

pub fn classify(t: &OpTable) -> ClassificationFlags {
    let mut witnesses = BTreeMap::new();
    let mut record = |name: &str, w: Option<Vec<usize>>| match w {
        Some(w) => {
            witnesses.insert(name.to_string(), w);
            false
        }
        None => true,
    };
    let right_quasigroup = record("right_quasigroup", non_injective_row(t));
    let columns = record("quasigroup", non_injective_column(t));
    let idempotent = record("idempotent", non_idempotent(t));
    let self_distributive = record("self_distributive", non_distributive(t));
    let involutory = record("involutory", non_involutory(t));
    let rigid = record("rigid", non_rigid(t));
    let rack = right_quasigroup && self_distributive;
    ClassificationFlags {
        right_quasigroup,
        quasigroup: right_quasigroup && columns,
        idempotent,
        self_distributive,
        rack,
        quandle: rack && idempotent,
        involutory,
        loos: idempotent && self_distributive && involutory && rigid,
        witnesses,
    }
}
