use std::collections::BTreeMap;

use crate::exactnum::CycloNumber;

/// Column-major sparse matrix over the cyclotomic field Q(zeta_N).
///
/// Columns keep their entries sorted by row index. The differentials built
/// from sigma powers are very sparse (a column has at most M entries), and
/// rank computation works on a row-echelon copy, so column storage is the
/// convenient primary form.
#[derive(Clone, Debug)]
pub struct SparseMat {
    order: u32,
    rows: usize,
    cols: usize,
    col_data: Vec<Vec<(usize, CycloNumber)>>,
}

impl SparseMat {
    pub fn zero(order: u32, rows: usize, cols: usize) -> Self {
        SparseMat {
            order,
            rows,
            cols,
            col_data: vec![Vec::new(); cols],
        }
    }

    /// Root-of-unity order N of the entry field.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.col_data.iter().map(Vec::len).sum()
    }

    /// Inserts into a column; callers must not insert a row twice.
    pub fn push_entry(&mut self, row: usize, col: usize, value: CycloNumber) {
        debug_assert!(row < self.rows && col < self.cols);
        if value.is_zero() {
            return;
        }
        let column = &mut self.col_data[col];
        let pos = column.partition_point(|(r, _)| *r < row);
        debug_assert!(pos >= column.len() || column[pos].0 != row, "duplicate entry");
        column.insert(pos, (row, value));
    }

    pub fn entry(&self, row: usize, col: usize) -> CycloNumber {
        self.col_data[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| CycloNumber::zero(self.order))
    }

    pub fn is_zero(&self) -> bool {
        self.col_data.iter().all(Vec::is_empty)
    }

    /// Entries as (row, col, value), column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &CycloNumber)> {
        self.col_data
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// Matrix product self * rhs.
    pub fn multiply(&self, rhs: &SparseMat) -> SparseMat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        assert_eq!(self.order, rhs.order, "entry fields must agree");
        let mut out = SparseMat::zero(self.order, self.rows, rhs.cols);
        for (j, rhs_col) in rhs.col_data.iter().enumerate() {
            let mut acc: BTreeMap<usize, CycloNumber> = BTreeMap::new();
            for (k, w) in rhs_col {
                for (r, v) in &self.col_data[*k] {
                    let prod = v * w;
                    match acc.get_mut(r) {
                        Some(cur) => *cur = &*cur + &prod,
                        None => {
                            acc.insert(*r, prod);
                        }
                    }
                }
            }
            out.col_data[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    /// Rank over Q(zeta_N) by exact Gaussian elimination.
    ///
    /// Pivots favor short rows and rare columns (a light Markowitz rule) to
    /// limit fill-in; correctness does not depend on the choice, and the
    /// procedure is deterministic.
    pub fn rank(&self) -> u64 {
        let mut rows: Vec<BTreeMap<usize, CycloNumber>> = vec![BTreeMap::new(); self.rows];
        let mut col_count = vec![0usize; self.cols];
        for (r, c, v) in self.triplets() {
            rows[r].insert(c, v.clone());
            col_count[c] += 1;
        }
        let mut alive: Vec<usize> = (0..self.rows).filter(|&r| !rows[r].is_empty()).collect();
        let mut rank = 0u64;

        while !alive.is_empty() {
            // pivot row: fewest entries, lowest index breaking ties
            let (pos, &prow) = alive
                .iter()
                .enumerate()
                .min_by_key(|(_, &r)| (rows[r].len(), r))
                .unwrap();
            alive.swap_remove(pos);
            let pivot = std::mem::take(&mut rows[prow]);
            for c in pivot.keys() {
                col_count[*c] -= 1;
            }
            // pivot column: rarest among the pivot row's entries
            let (&pcol, pval) = pivot
                .iter()
                .min_by_key(|(c, _)| (col_count[**c], **c))
                .unwrap();
            rank += 1;
            let pinv = pval.inverse().expect("pivot entry is nonzero");

            let mut still_alive = Vec::with_capacity(alive.len());
            for &r in &alive {
                if let Some(lead) = rows[r].get(&pcol) {
                    let factor = lead * &pinv;
                    for (c, v) in &pivot {
                        let delta = &factor * v;
                        match rows[r].get_mut(c) {
                            Some(cur) => {
                                let next = &*cur - &delta;
                                if next.is_zero() {
                                    rows[r].remove(c);
                                    col_count[*c] -= 1;
                                } else {
                                    *cur = next;
                                }
                            }
                            None => {
                                rows[r].insert(*c, -&delta);
                                col_count[*c] += 1;
                            }
                        }
                    }
                    debug_assert!(!rows[r].contains_key(&pcol));
                }
                if !rows[r].is_empty() {
                    still_alive.push(r);
                }
            }
            alive = still_alive;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: u32, e: i64) -> CycloNumber {
        CycloNumber::monomial(n, e)
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let mut id = SparseMat::zero(3, 4, 4);
        for i in 0..4 {
            id.push_entry(i, i, mono(3, 0));
        }
        assert_eq!(id.rank(), 4);
        assert_eq!(SparseMat::zero(3, 5, 7).rank(), 0);
    }

    #[test]
    fn rank_of_dependent_columns() {
        // second column is q * first column
        let mut m = SparseMat::zero(5, 3, 2);
        for r in 0..3 {
            m.push_entry(r, 0, mono(5, r as i64));
            m.push_entry(r, 1, mono(5, r as i64 + 1));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn product_against_hand_computation() {
        // [1 q] [1]   [1 + q^3]
        // [0 1] [q^2] = [q^2]
        let mut a = SparseMat::zero(4, 2, 2);
        a.push_entry(0, 0, mono(4, 0));
        a.push_entry(0, 1, mono(4, 1));
        a.push_entry(1, 1, mono(4, 0));
        let mut b = SparseMat::zero(4, 2, 1);
        b.push_entry(0, 0, mono(4, 0));
        b.push_entry(1, 0, mono(4, 2));
        let p = a.multiply(&b);
        let expect = &mono(4, 0) + &mono(4, 3);
        assert_eq!(p.entry(0, 0), expect);
        assert_eq!(p.entry(1, 0), mono(4, 2));
    }

    #[test]
    fn cancellation_in_product_drops_entries() {
        // (q + 1)(q - 1) at N = 2 means q = -1, so q + 1 = 0 exactly
        let one = CycloNumber::one(2);
        let q = mono(2, 1);
        let mut a = SparseMat::zero(2, 1, 1);
        a.push_entry(0, 0, &q + &one);
        assert!(a.is_zero(), "q + 1 vanishes at q = -1");
    }
}
