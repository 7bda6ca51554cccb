use std::fmt::Write;

use serde::Deserialize;

use crate::error::{Error, Result};

/// An operation table on `{0, …, n−1}`; `get(x, y)` is `x ∗ y`, with `x` the
/// acting (left) operand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    n: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawTable {
    n: i64,
    table: Vec<Vec<i64>>,
}

/// Range-checks a square integer array.
pub fn validate_table(raw: &[Vec<i64>]) -> Result<OpTable> {
    let n = raw.len();
    if n == 0 {
        return Err(Error::TableFormat("table is empty".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::TableFormat(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut checked = Vec::with_capacity(n);
        for (j, &v) in row.iter().enumerate() {
            if v < 0 || v as usize >= n {
                return Err(Error::TableFormat(format!(
                    "entry {v} at ({i}, {j}) is outside 0..{n}"
                )));
            }
            checked.push(v as usize);
        }
        rows.push(checked);
    }
    Ok(OpTable { n, rows })
}

impl OpTable {
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        assert!(n >= 1, "table size must be positive");
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let v = op(x, y);
                        assert!(v < n, "op({x}, {y}) = {v} out of range");
                        v
                    })
                    .collect()
            })
            .collect();
        OpTable { n, rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        OpTable { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.rows[x][y]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    /// The relabeled table `π(x) ∗' π(y) = π(x ∗ y)`.
    pub fn relabel(&self, perm: &[usize]) -> OpTable {
        let mut rows = vec![vec![0; self.n]; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                rows[perm[x]][perm[y]] = perm[self.get(x, y)];
            }
        }
        OpTable { n: self.n, rows }
    }

    pub fn from_json(text: &str) -> Result<OpTable> {
        let raw: RawTable = serde_json::from_str(text)?;
        let table = validate_table(&raw.table)?;
        if raw.n != table.n as i64 {
            return Err(Error::TableFormat(format!(
                "declared n = {} but table is {}x{}",
                raw.n, table.n, table.n
            )));
        }
        Ok(table)
    }

    /// Canonical text form: identical tables always serialize to identical
    /// bytes.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        self.write_json(&mut out, "");
        out.push('\n');
        out
    }

    pub(crate) fn write_json(&self, out: &mut String, indent: &str) {
        let _ = write!(out, "{{\n{indent}  \"n\": {},\n{indent}  \"table\": [\n", self.n);
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let sep = if i + 1 < self.n { "," } else { "" };
            let _ = writeln!(out, "{indent}    [{}]{sep}", cells.join(", "));
        }
        let _ = write!(out, "{indent}  ]\n{indent}}}");
    }

    /// A JSON array of tables in the canonical text form.
    pub fn list_to_json(tables: &[OpTable]) -> String {
        if tables.is_empty() {
            return "[]\n".to_string();
        }
        let mut out = String::from("[\n  ");
        for (i, t) in tables.iter().enumerate() {
            t.write_json(&mut out, "  ");
            if i + 1 < tables.len() {
                out.push_str(",\n  ");
            }
        }
        out.push_str("\n]\n");
        out
    }

    pub fn list_from_json(text: &str) -> Result<Vec<OpTable>> {
        let raws: Vec<RawTable> = serde_json::from_str(text)?;
        raws.iter()
            .map(|r| {
                let t = validate_table(&r.table)?;
                if r.n != t.n as i64 {
                    return Err(Error::TableFormat("declared n does not match".into()));
                }
                Ok(t)
            })
            .collect()
    }
}
