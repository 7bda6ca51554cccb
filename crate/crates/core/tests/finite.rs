use std::collections::BTreeSet;

use emergent_algebra::finite::{
    braid_audit, canonical_form, check_loos, classify, cyclic_group, dihedral_quandle,
    enumerate_quandles, enumerate_quandles_labeled, make_automorphism_quandle, make_core_quandle,
    trivial_quandle, validate_table, OpTable,
};

type Rows = Vec<Vec<usize>>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_quandle(t: &Rows) -> bool {
    let n = t.len();
    let rows_bijective = t.iter().all(|r| {
        let mut seen = vec![false; n];
        r.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    });
    let idem = (0..n).all(|x| t[x][x] == x);
    let dist = (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| t[x][t[y][z]] == t[t[x][y]][t[x][z]]))
    });
    rows_bijective && idem && dist
}

/// Minimal relabeled table over all permutations.
fn oracle_canonical(t: &Rows) -> Rows {
    let n = t.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut r = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    r[p[x]][p[y]] = p[t[x][y]];
                }
            }
            r
        })
        .min()
        .unwrap()
}

/// Every idempotent table whose rows are permutations.
fn brute_force_quandles(n: usize) -> Vec<Rows> {
    let row_choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| permutations(n).into_iter().filter(|p| p[x] == x).collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let t: Rows = (0..n).map(|x| row_choices[x][idx[x]].clone()).collect();
        if is_quandle(&t) {
            out.push(t);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < row_choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn braid_holds(t: &Rows) -> bool {
    let n = t.len();
    let s = |x: usize, y: usize| (t[x][y], x);
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let s12 = |(a, b, c): (usize, usize, usize)| {
                    let (p, q) = s(a, b);
                    (p, q, c)
                };
                let s23 = |(a, b, c): (usize, usize, usize)| {
                    let (p, q) = s(b, c);
                    (a, p, q)
                };
                s12(s23(s12((a, b, c)))) == s23(s12(s23((a, b, c))))
            })
        })
    })
}

#[test]
fn all_idempotent_tables_of_order_three() {
    // Independent of the row-permutation shortcut: all 3^6 tables.
    let mut quandles = Vec::new();
    for code in 0..3usize.pow(6) {
        let mut c = code;
        let mut t = vec![vec![0; 3]; 3];
        for (x, row) in t.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                *cell = if x == y {
                    x
                } else {
                    let v = c % 3;
                    c /= 3;
                    v
                };
            }
        }
        if is_quandle(&t) {
            quandles.push(t);
        }
    }
    let labeled = enumerate_quandles_labeled(3).unwrap();
    let mut ours: Vec<Rows> = labeled.iter().map(|t| t.rows().to_vec()).collect();
    ours.sort();
    quandles.sort();
    assert_eq!(ours, quandles);
}

#[test]
fn enumeration_matches_brute_force_up_to_isomorphism() {
    for n in 1..=4 {
        let expected: BTreeSet<Rows> = brute_force_quandles(n).iter().map(oracle_canonical).collect();
        let ours: BTreeSet<Rows> = enumerate_quandles(n)
            .unwrap()
            .iter()
            .map(|t| t.rows().to_vec())
            .collect();
        assert_eq!(ours, expected, "order {n}");
    }
}

#[test]
fn known_counts_up_to_order_six() {
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_quandles(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 3, 7, 22, 73]);
}

#[test]
fn enumeration_rejects_out_of_range_orders() {
    assert!(enumerate_quandles(0).is_err());
    assert!(enumerate_quandles(7).is_err());
}

#[test]
fn canonical_form_is_a_class_invariant() {
    for t in enumerate_quandles(4).unwrap() {
        assert_eq!(canonical_form(&t), t);
        for p in permutations(4) {
            assert_eq!(canonical_form(&t.relabel(&p)), t);
        }
    }
}

#[test]
fn braid_relation_on_quandles_and_dihedral_families() {
    let mut tables: Vec<OpTable> = (1..=5).flat_map(|n| enumerate_quandles(n).unwrap()).collect();
    tables.extend((3..=9).map(dihedral_quandle));
    for t in &tables {
        assert!(braid_holds(&t.rows().to_vec()));
        let r = braid_audit(t);
        assert!(r.braid_relation && r.bijective && r.non_degenerate, "{t:?}");
    }
}

#[test]
fn braid_failure_reports_a_genuine_triple() {
    // Addition mod 4: a quasigroup that is not self-distributive.
    let t = OpTable::from_fn(4, |x, y| (x + y) % 4);
    let rows = t.rows().to_vec();
    assert!(!braid_holds(&rows));
    let r = braid_audit(&t);
    let [a, b, c] = r.braid_witness.expect("a witness");
    let s = |x: usize, y: usize| (rows[x][y], x);
    let (p, q) = s(a, b);
    let (q2, r2) = s(q, c);
    let (p3, q3) = s(p, q2);
    let left = (p3, q3, r2);
    let (q, r1) = s(b, c);
    let (p, q) = s(a, q);
    let (q4, r4) = s(q, r1);
    assert_ne!(left, (p, q4, r4));
}

#[test]
fn loos_axioms_on_dihedral_and_trivial_quandles() {
    for n in 3..=9 {
        let r = check_loos(&dihedral_quandle(n));
        assert!(r.l1 && r.l2 && r.l3, "R{n}");
        assert_eq!(r.l4, n % 2 == 1, "R{n}");
        if n % 2 == 0 {
            assert_eq!(r.witnesses["L4"], vec![0, n / 2]);
        }
    }
    for n in 2..=6 {
        let r = check_loos(&trivial_quandle(n));
        assert!(!r.l4);
        assert_eq!(r.witnesses["L4"], vec![0, 1]);
    }
}

#[test]
fn dihedral_as_core_and_automorphism_quandle() {
    for n in 3..=9 {
        let g = cyclic_group(n);
        assert_eq!(make_core_quandle(g.table()).unwrap(), dihedral_quandle(n));
        let neg: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
        assert_eq!(make_automorphism_quandle(g.table(), &neg).unwrap(), dihedral_quandle(n));
    }
    let g = cyclic_group(5);
    let not_hom = [0, 2, 1, 3, 4];
    let err = make_automorphism_quandle(g.table(), &not_hom).unwrap_err();
    assert!(err.to_string().contains("witness pair"));
}

#[test]
fn classification_of_dihedral_three() {
    let f = classify(&dihedral_quandle(3));
    assert!(f.quandle && f.involutory && f.loos && f.quasigroup);
}

#[test]
fn table_validation_and_serialization() {
    let err = validate_table(&[vec![0, 1], vec![2, 0]]).unwrap_err();
    assert!(err.to_string().contains("(1, 0)"));
    let t = dihedral_quandle(3);
    let text = t.to_json();
    assert_eq!(text, "{\n  \"n\": 3,\n  \"table\": [\n    [0, 2, 1],\n    [2, 1, 0],\n    [1, 0, 2]\n  ]\n}\n");
    assert_eq!(OpTable::from_json(&text).unwrap().to_json(), text);
    assert!(OpTable::from_json("{\"n\": 2, \"table\": [[0]]}").is_err());
}
