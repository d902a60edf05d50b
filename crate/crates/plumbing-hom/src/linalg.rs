//! Exact linear algebra helpers: small integer matrices and sparse
//! Gaussian elimination over the rationals with lexicographic pivoting.

use crate::Coef;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Dense integer matrix, used for Cartan/Coxeter data (rank ≤ 8).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        IntMatrix {
            n_rows,
            n_cols,
            data: vec![0; n_rows * n_cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n_cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut out = IntMatrix::zero(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = -*v;
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = IntMatrix::zero(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.n_cols {
                    out.set(i, j, out.get(i, j) + a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n_cols, v.len());
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n_rows).map(|i| self.get(i, j)).collect()
    }

    /// Exact inverse of a matrix with determinant ±1 (Gauss–Jordan over ℚ,
    /// result checked to be integral).
    pub fn inverse_unimodular(&self) -> Self {
        assert_eq!(self.n_rows, self.n_cols);
        let n = self.n_rows;
        let mut a: Vec<Vec<Coef>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            Coef::from_integer(self.get(i, j).into())
                        } else if j - n == i {
                            Coef::one()
                        } else {
                            Coef::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("singular matrix in inverse_unimodular");
            a.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..2 * n {
                a[col][j] = &a[col][j] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..2 * n {
                        let sub = &f * &a[col][j];
                        a[r][j] = &a[r][j] - &sub;
                    }
                }
            }
        }
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &a[i][n + j];
                assert!(v.is_integer(), "non-integral inverse entry");
                let num: i64 = v.to_integer().try_into().expect("inverse entry overflow");
                out.set(i, j, num);
            }
        }
        out
    }
}

/// Solve `Σ_k c_k · columns[k] = rhs` exactly over ℚ by Gauss–Jordan
/// elimination.  Returns `None` when the system is inconsistent; free
/// variables are set to zero.
pub fn solve_columns(columns: &[Vec<Coef>], rhs: &[Coef]) -> Option<Vec<Coef>> {
    let rows = rhs.len();
    let k = columns.len();
    for col in columns {
        assert_eq!(col.len(), rows, "column length mismatch");
    }
    let mut aug: Vec<Vec<Coef>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Coef> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut next_row = 0;
    for col in 0..k {
        let Some(pr) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, pr);
        let inv = Coef::one() / aug[next_row][col].clone();
        for j in col..=k {
            aug[next_row][j] = &aug[next_row][j] * &inv;
        }
        for r in 0..rows {
            if r != next_row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in col..=k {
                    let sub = &f * &aug[next_row][j];
                    aug[r][j] = &aug[r][j] - &sub;
                }
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }
    // rows below the last pivot must have zero right-hand side
    for r in next_row..rows {
        if !aug[r][k].is_zero() {
            return None;
        }
    }
    Some(
        (0..k)
            .map(|col| match pivot_of_col[col] {
                Some(r) => aug[r][k].clone(),
                None => Coef::zero(),
            })
            .collect(),
    )
}

/// Sparse rational row keyed by column index.
pub type SparseRow = BTreeMap<usize, Coef>;

pub fn row_scale(row: &mut SparseRow, c: &Coef) {
    for v in row.values_mut() {
        *v = &*v * c;
    }
}

/// `dst += c * src`, dropping entries that cancel to zero.
pub fn row_axpy(dst: &mut SparseRow, c: &Coef, src: &SparseRow) {
    for (&col, v) in src {
        let entry = dst.entry(col).or_insert_with(Coef::zero);
        *entry = &*entry + &(c * v);
        if entry.is_zero() {
            dst.remove(&col);
        }
    }
}

/// Incremental echelon form with lexicographic pivoting: each inserted row is
/// reduced against the stored pivots and, if nonzero, stored with its
/// smallest remaining column as pivot (normalized to 1).
#[derive(Debug, Default, Clone)]
pub struct RowReducer {
    /// pivot column → normalized row
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Reduce `row` against the stored pivots (in place).
    pub fn reduce(&self, row: &mut SparseRow) {
        loop {
            let hit = row
                .iter()
                .find(|(col, _)| self.pivots.contains_key(col))
                .map(|(&col, v)| (col, v.clone()));
            match hit {
                Some((col, coef)) => {
                    let c = -coef;
                    let pivot_row = self.pivots[&col].clone();
                    row_axpy(row, &c, &pivot_row);
                }
                None => break,
            }
        }
    }

    /// Insert a row; returns the pivot column if the row was independent.
    pub fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        self.reduce(&mut row);
        let (&pivot, coef) = row.iter().next()?;
        let inv = Coef::one() / coef.clone();
        row_scale(&mut row, &inv);
        self.pivots.insert(pivot, row);
        Some(pivot)
    }

    /// Back-substitute so every stored row is supported on its pivot and
    /// non-pivot columns only (reduced row echelon form).
    pub fn normalize(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        // process from the largest pivot downwards so each reduction is final
        for &col in cols.iter().rev() {
            let mut row = self.pivots.remove(&col).unwrap();
            let mut updates: Vec<(usize, Coef)> = Vec::new();
            for (&c, v) in &row {
                if c != col && self.pivots.contains_key(&c) {
                    updates.push((c, v.clone()));
                }
            }
            for (c, v) in updates {
                let minus = -v;
                let other = self.pivots[&c].clone();
                row_axpy(&mut row, &minus, &other);
            }
            self.pivots.insert(col, row);
        }
    }

    /// The stored (normalized) row for a pivot column.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseRow> {
        self.pivots.get(&col)
    }
}

/// Sorted sparse integer row: `(column, value)` pairs in ascending column
/// order with nonzero values.
pub type IntRow = Vec<(u32, i64)>;

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Divide a row by the gcd of its entries to keep coefficients small.
fn divide_content(row: &mut IntRow) {
    let mut g = 0i64;
    for &(_, v) in row.iter() {
        g = gcd_i64(g, v);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for (_, v) in row.iter_mut() {
            *v /= g;
        }
    }
}

/// `a·left + b·right` as a merge of sorted rows.  Intermediates are i128 so
/// the only overflow hazard is an entry that no longer fits in i64 after the
/// content division, which is reported loudly.
fn row_combine(a: i64, left: &IntRow, b: i64, right: &IntRow) -> IntRow {
    let mut out: Vec<(u32, i128)> = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() || j < right.len() {
        let lc = left.get(i).map(|&(c, _)| c);
        let rc = right.get(j).map(|&(c, _)| c);
        let (col, v) = match (lc, rc) {
            (Some(l), Some(r)) if l == r => {
                let v = a as i128 * left[i].1 as i128 + b as i128 * right[j].1 as i128;
                i += 1;
                j += 1;
                (l, v)
            }
            (Some(l), r) if r.map_or(true, |r| l < r) => {
                let v = a as i128 * left[i].1 as i128;
                i += 1;
                (l, v)
            }
            _ => {
                let v = b as i128 * right[j].1 as i128;
                j += 1;
                (rc.unwrap(), v)
            }
        };
        if v != 0 {
            out.push((col, v));
        }
    }
    let mut g: i128 = 0;
    for &(_, v) in &out {
        g = {
            let (mut a, mut b) = (g.unsigned_abs(), v.unsigned_abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a as i128
        };
        if g == 1 {
            break;
        }
    }
    out.into_iter()
        .map(|(c, v)| {
            let v = if g > 1 { v / g } else { v };
            (
                c,
                i64::try_from(v).expect("entry overflow in integer elimination"),
            )
        })
        .collect()
}

/// Incremental echelon form over ℤ with fraction-free row combination.
/// Much faster than [`RowReducer`] for large integer matrices (the Ginzburg
/// differential) where exact rational pivoting allocates heavily.
#[derive(Debug, Default)]
pub struct IntRowReducer {
    /// pivot column → stored row with that leading column
    pivots: std::collections::HashMap<u32, IntRow>,
}

impl IntRowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row; returns true if it was independent of the rows so far.
    pub fn insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some(&(col, val)) = row.first() else {
                return false;
            };
            let Some(pivot) = self.pivots.get(&col) else {
                divide_content(&mut row);
                self.pivots.insert(col, row);
                return true;
            };
            let pval = pivot[0].1;
            let g = gcd_i64(pval, val);
            row = row_combine(pval / g, &row, -(val / g), pivot);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Coef {
        Coef::from_integer(n.into())
    }

    #[test]
    fn inverse_of_unitriangular() {
        let mut m = IntMatrix::zero(2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 1);
        m.set(1, 1, 1);
        let inv = m.inverse_unimodular();
        assert_eq!(m.mul(&inv), {
            let mut id = IntMatrix::zero(2, 2);
            id.set(0, 0, 1);
            id.set(1, 1, 1);
            id
        });
    }

    #[test]
    fn int_reducer_matches_rational_rank() {
        // 3×4 integer matrix of rank 2 (row3 = row1 + 2·row2)
        let rows: Vec<IntRow> = vec![
            vec![(0, 2), (1, 4), (3, -2)],
            vec![(1, 3), (2, 1)],
            vec![(0, 2), (1, 10), (2, 2), (3, -2)],
        ];
        let mut int_red = IntRowReducer::new();
        let mut rat_red = RowReducer::new();
        for row in rows {
            int_red.insert(row.clone());
            rat_red.insert(
                row.into_iter()
                    .map(|(c, v)| (c as usize, q(v)))
                    .collect::<SparseRow>(),
            );
        }
        assert_eq!(int_red.rank(), 2);
        assert_eq!(int_red.rank(), rat_red.rank());
    }

    #[test]
    fn reducer_rank_and_membership() {
        let mut red = RowReducer::new();
        let r1: SparseRow = [(0, q(1)), (1, q(2))].into_iter().collect();
        let r2: SparseRow = [(1, q(1)), (2, q(1))].into_iter().collect();
        let r3: SparseRow = [(0, q(1)), (2, q(-2))].into_iter().collect(); // r1 - 2 r2
        assert!(red.insert(r1).is_some());
        assert!(red.insert(r2).is_some());
        assert!(red.insert(r3).is_none());
        assert_eq!(red.rank(), 2);
    }
}
