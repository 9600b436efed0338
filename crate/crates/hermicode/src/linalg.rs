//! Dense linear algebra over GF(q²) with fully deterministic elimination.
//!
//! Matrices store raw packed field values (`u32`) row-major and take the
//! [`FieldContext`] as an explicit argument, which keeps the inner loops on
//! the table-driven raw operations.  Sizes here are tiny — a few thousand
//! entries at the largest — so everything is dense and allocation-happy.
//!
//! [`IncrementalRank`] maintains a forward-reduced echelon basis of a growing
//! sequence of vectors; pushing a vector reports whether it enlarged the
//! span, and truncating undoes pushes in LIFO order.  The brute-force
//! searches in [`crate::oracle`] use it to walk column subsets depth-first
//! with O(rows) work per step.

use crate::field::{FieldContext, FieldElement};

/// A dense rows×cols matrix of packed field values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Build entry-by-entry from a function of (row, column).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "all rows must have equal length"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn elem(&self, ctx: &FieldContext, i: usize, j: usize) -> FieldElement {
        ctx.element(self.get(i, j))
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// The submatrix keeping the listed columns, in the listed order.
    pub fn submatrix_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// Matrix–vector product over the field.
    pub fn mul_vector(&self, ctx: &FieldContext, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u32;
                for j in 0..self.cols {
                    acc = ctx.add_raw(acc, ctx.mul_raw(self.get(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns, via deterministic
    /// Gauss–Jordan elimination (first nonzero entry in scan order pivots).
    pub fn reduced_row_echelon(&self, ctx: &FieldContext) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0);
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            // Swap into position and normalise the pivot to 1.
            for j in 0..m.cols {
                let tmp = m.get(pivot_row, j);
                m.set(pivot_row, j, m.get(r, j));
                m.set(r, j, tmp);
            }
            let inv = ctx.inv_raw(m.get(pivot_row, col));
            for j in 0..m.cols {
                m.set(pivot_row, j, ctx.mul_raw(m.get(pivot_row, j), inv));
            }
            // Clear the column everywhere else.
            for i in 0..m.rows {
                if i != pivot_row {
                    let factor = m.get(i, col);
                    if factor != 0 {
                        for j in 0..m.cols {
                            let v = ctx.sub_raw(m.get(i, j), ctx.mul_raw(factor, m.get(pivot_row, j)));
                            m.set(i, j, v);
                        }
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, ctx: &FieldContext) -> usize {
        self.reduced_row_echelon(ctx).1.len()
    }

    /// A basis of the right kernel {v : M·v = 0}, one vector per free
    /// column, ascending by free column; each basis vector has a 1 in its
    /// free column and zeros in the other free columns.
    pub fn kernel_basis(&self, ctx: &FieldContext) -> Vec<Vec<u32>> {
        let (rref, pivots) = self.reduced_row_echelon(ctx);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = ctx.neg_raw(rref.get(row, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// A forward-reduced echelon basis of a growing vector family, supporting
/// LIFO backtracking.  Each stored row is normalised to 1 at its pivot and
/// reduced against all earlier rows, so reducing a fresh vector is a single
/// forward sweep.
pub struct IncrementalRank {
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl IncrementalRank {
    pub fn new() -> Self {
        IncrementalRank {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows, in place.
    fn reduce(&self, ctx: &FieldContext, v: &mut [u32]) {
        for (row, &pivot) in self.rows.iter().zip(self.pivots.iter()) {
            let c = v[pivot];
            if c != 0 {
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = ctx.sub_raw(*vi, ctx.mul_raw(c, *ri));
                }
            }
        }
    }

    /// Does `v` lie in the current span?
    pub fn is_dependent(&self, ctx: &FieldContext, v: &[u32]) -> bool {
        let mut work = v.to_vec();
        self.reduce(ctx, &mut work);
        work.iter().all(|&c| c == 0)
    }

    /// Push `v` if it enlarges the span.  Returns true when it did (the
    /// vector was independent), false when `v` was already in the span
    /// (nothing is stored in that case).
    pub fn try_push(&mut self, ctx: &FieldContext, v: &[u32]) -> bool {
        let mut work = v.to_vec();
        self.reduce(ctx, &mut work);
        match work.iter().position(|&c| c != 0) {
            None => false,
            Some(pivot) => {
                let inv = ctx.inv_raw(work[pivot]);
                for c in work.iter_mut() {
                    *c = ctx.mul_raw(*c, inv);
                }
                self.rows.push(work);
                self.pivots.push(pivot);
                true
            }
        }
    }

    /// Undo pushes down to the given rank (LIFO backtracking).
    pub fn truncate(&mut self, rank: usize) {
        self.rows.truncate(rank);
        self.pivots.truncate(rank);
    }
}

impl Default for IncrementalRank {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn ctx(p: u64, k: u32) -> FieldContext {
        FieldContext::new(p, k).unwrap()
    }

    #[test]
    fn rref_of_a_hand_matrix_over_gf4() {
        // FieldContext::new(2, 1): subfield GF(2), working field GF(4).
        let c = ctx(2, 1);
        // Rows: (1, w, 0), (w, w^2, 0) with w = 2; the second row is w times
        // the first, so rank 1.
        let m = Matrix::from_rows(vec![vec![1, 2, 0], vec![2, 3, 0]]);
        let (rref, pivots) = m.reduced_row_echelon(&c);
        assert_eq!(pivots, vec![0]);
        assert_eq!(rref.row(0), &[1, 2, 0]);
        assert_eq!(rref.row(1), &[0, 0, 0]);
        assert_eq!(m.rank(&c), 1);
    }

    #[test]
    fn kernel_vectors_annihilate_the_matrix() {
        let c = ctx(3, 1);
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..8);
            let m = Matrix::from_fn(rows, cols, |_, _| rng.gen_range(0..3));
            let kernel = m.kernel_basis(&c);
            assert_eq!(kernel.len(), cols - m.rank(&c), "rank–nullity");
            for v in &kernel {
                let prod = m.mul_vector(&c, v);
                assert!(prod.iter().all(|&x| x == 0), "kernel vector not annihilated");
            }
        }
    }

    #[test]
    fn kernel_basis_is_in_free_column_form() {
        let c = ctx(2, 2);
        // x0 + x1 = 0, so kernel is spanned by (1, 1, 0) and (0, 0, 1).
        let m = Matrix::from_rows(vec![vec![1, 1, 0]]);
        let kernel = m.kernel_basis(&c);
        assert_eq!(kernel, vec![vec![1, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn submatrix_and_column_extraction() {
        let m = Matrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let s = m.submatrix_columns(&[2, 0]);
        assert_eq!(s.row(0), &[3, 1]);
        assert_eq!(s.row(1), &[6, 4]);
        assert_eq!(m.column(1), vec![2, 5]);
    }

    #[test]
    fn incremental_rank_matches_batch_rank_with_backtracking() {
        let c = ctx(2, 2);
        let mut rng = ChaCha12Rng::seed_from_u64(42);
        for _ in 0..30 {
            let dim = rng.gen_range(2..7);
            let count = rng.gen_range(1..10);
            let vecs: Vec<Vec<u32>> = (0..count)
                .map(|_| (0..dim).map(|_| rng.gen_range(0..4)).collect())
                .collect();
            let mut inc = IncrementalRank::new();
            for (i, v) in vecs.iter().enumerate() {
                let before = inc.rank();
                let dependent_pre = inc.is_dependent(&c, v);
                let pushed = inc.try_push(&c, v);
                assert_eq!(pushed, !dependent_pre);
                // Batch rank of the prefix as columns.
                let cols: Vec<Vec<u32>> = vecs[..=i].to_vec();
                let m = Matrix::from_fn(dim, cols.len(), |r, j| cols[j][r]);
                assert_eq!(inc.rank(), m.rank(&c), "prefix rank mismatch");
                if !pushed {
                    assert_eq!(inc.rank(), before);
                }
            }
            // Backtrack to rank 1 and re-verify against the first vector.
            if inc.rank() >= 1 {
                inc.truncate(1);
                assert_eq!(inc.rank(), 1);
                let first_nonzero = vecs.iter().find(|v| v.iter().any(|&x| x != 0));
                if let Some(v) = first_nonzero {
                    assert!(inc.is_dependent(&c, &v.clone()) || inc.rank() == 1);
                }
            }
        }
    }

    #[test]
    fn incremental_rank_detects_dependence_over_gf9() {
        let c = ctx(3, 1);
        let mut inc = IncrementalRank::new();
        assert!(inc.try_push(&c, &[1, 2, 0]));
        assert!(inc.try_push(&c, &[0, 1, 1]));
        // 2·(1,2,0) over GF(9): packed arithmetic, but dependence of a raw
        // scalar multiple must be seen regardless of packing.
        let scaled: Vec<u32> = [1u32, 2, 0]
            .iter()
            .map(|&v| c.mul_raw(v, 5))
            .collect();
        assert!(inc.is_dependent(&c, &scaled));
        assert!(!inc.try_push(&c, &scaled));
        assert_eq!(inc.rank(), 2);
        inc.truncate(0);
        assert_eq!(inc.rank(), 0);
    }
}
