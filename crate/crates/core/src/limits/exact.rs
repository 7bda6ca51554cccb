//! Exact extrapolation to `ε = 0` for families that are polynomial in the
//! signed scale factor, as every operation on a rational conical group is.

use num::BigRational;

/// Value at 0 of the interpolating polynomial through `(nodes[i], values[i])`
/// (Neville's scheme, componentwise).
fn neville_at_zero(nodes: &[BigRational], values: &[Vec<BigRational>]) -> Vec<BigRational> {
    let mut column: Vec<Vec<BigRational>> = values.to_vec();
    let m = nodes.len();
    for k in 1..m {
        for i in 0..m - k {
            let (xi, xj) = (&nodes[i], &nodes[i + k]);
            let denom = xi - xj;
            column[i] = column[i + 1]
                .iter()
                .zip(&column[i])
                .map(|(hi, lo)| (xi * hi - xj * lo) / &denom)
                .collect();
        }
    }
    column.swap_remove(0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactLimit {
    pub limit: Vec<BigRational>,
    /// Nodes needed before the extrapolated value stopped changing.
    pub nodes: usize,
}

/// Extrapolates with 1, 2, … leading nodes and accepts the first value that
/// is reproduced exactly by the next `confirm` node counts. Returns `None`
/// when no such plateau exists within the given nodes.
pub fn extrapolate_exact(
    nodes: &[BigRational],
    values: &[Vec<BigRational>],
    confirm: usize,
) -> Option<ExactLimit> {
    assert_eq!(nodes.len(), values.len());
    extrapolate_lazy(nodes, |i| values[i].clone(), confirm)
}

/// As `extrapolate_exact`, evaluating `value(i)` only as far as needed.
pub(crate) fn extrapolate_lazy<V>(
    nodes: &[BigRational],
    mut value: V,
    confirm: usize,
) -> Option<ExactLimit>
where
    V: FnMut(usize) -> Vec<BigRational>,
{
    let mut values = Vec::with_capacity(nodes.len());
    let mut estimates: Vec<Vec<BigRational>> = Vec::with_capacity(nodes.len());
    for m in 1..=nodes.len() {
        values.push(value(m - 1));
        estimates.push(neville_at_zero(&nodes[..m], &values));
        if m > confirm {
            let start = m - 1 - confirm;
            if estimates[start + 1..].iter().all(|e| e == &estimates[start]) {
                return Some(ExactLimit {
                    limit: estimates[start].clone(),
                    nodes: start + 1,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn nodes(k: usize) -> Vec<BigRational> {
        (1..=k as i32).map(|j| crate::rational::pow(&q(1, 2), j)).collect()
    }

    #[test]
    fn recovers_polynomial_constant_term() {
        let xs = nodes(10);
        let vals: Vec<Vec<BigRational>> = xs
            .iter()
            .map(|e| vec![q(3, 7) + qi(5) * e - q(2, 3) * e * e * e, -e.clone() * e])
            .collect();
        let got = extrapolate_exact(&xs, &vals, 2).unwrap();
        assert_eq!(got.limit, vec![q(3, 7), qi(0)]);
        assert_eq!(got.nodes, 4);
    }

    #[test]
    fn constant_needs_one_node() {
        let xs = nodes(5);
        let vals = vec![vec![q(1, 9)]; 5];
        assert_eq!(extrapolate_exact(&xs, &vals, 2).unwrap().nodes, 1);
    }

    #[test]
    fn non_polynomial_family_has_no_plateau() {
        // 1/(1+ε) has no finite-degree plateau.
        let xs = nodes(12);
        let vals: Vec<Vec<BigRational>> = xs.iter().map(|e| vec![(qi(1) + e).recip()]).collect();
        assert!(extrapolate_exact(&xs, &vals, 2).is_none());
    }
}
