//! Exact sparse Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Q;

/// Sparse row: column index to non-zero entry.
pub type SparseRow = BTreeMap<usize, Q>;

/// Row echelon form built incrementally; every stored row has a unit pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseRow)>,
    pivot_of: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots (leading columns only).
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0usize;
        loop {
            let next = row.range(cursor..).map(|(c, _)| *c).find(|c| self.pivot_of.contains_key(c));
            let Some(col) = next else { break };
            let factor = row[&col].clone();
            let (_, pivot_row) = &self.rows[self.pivot_of[&col]];
            for (c, v) in pivot_row {
                let entry = row.entry(*c).or_insert_with(Q::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
            cursor = col + 1;
        }
        row
    }

    /// Adds a row; returns `false` when it was already in the row span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lead_val)) = row.iter().next() else { return false };
        let inv = Q::one() / lead_val;
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push((lead, row));
        true
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Basis of `{v : A v = 0}` for the matrix whose rows were inserted,
    /// one vector per free column in increasing column order.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseRow> {
        // back substitution to reduced row echelon form
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i].0));
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for i in order {
            let (lead, row) = &self.rows[i];
            let mut row = row.clone();
            let later: Vec<usize> = row.keys().copied().filter(|c| *c != *lead && reduced.contains_key(c)).collect();
            for col in later {
                let factor = match row.get(&col) {
                    Some(f) => f.clone(),
                    None => continue,
                };
                for (c, v) in &reduced[&col] {
                    let entry = row.entry(*c).or_insert_with(Q::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        row.remove(c);
                    }
                }
            }
            reduced.insert(*lead, row);
        }
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !reduced.contains_key(c)) {
            let mut v = SparseRow::new();
            v.insert(free, Q::one());
            for (lead, row) in &reduced {
                if let Some(x) = row.get(&free) {
                    v.insert(*lead, -x.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|(c, v)| (*c, qi(*v))).collect()
    }

    fn apply(rows: &[SparseRow], v: &SparseRow) -> Vec<Q> {
        rows.iter().map(|r| r.iter().map(|(c, a)| a * v.get(c).cloned().unwrap_or_else(Q::zero)).sum()).collect()
    }

    #[test]
    fn nullspace_of_small_system() {
        let rows = vec![row(&[(0, 1), (1, 2), (3, 1)]), row(&[(1, 1), (2, -1)]), row(&[(0, 1), (1, 3), (2, -1), (3, 1)])];
        let mut e = Echelon::new();
        let inserted: Vec<bool> = rows.iter().map(|r| e.insert(r.clone())).collect();
        assert_eq!(inserted, vec![true, true, false]);
        let ns = e.nullspace(4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(apply(&rows, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 2), (2, 4)]));
        assert!(e.contains(&row(&[(0, -1), (2, -2)])));
        assert!(!e.contains(&row(&[(0, 1)])));
        assert_eq!(e.rank(), 1);
    }
}
