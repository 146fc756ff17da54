//! Dense exact-rational linear algebra.
//!
//! Everything here is elimination-based and exact: reduced row echelon form
//! with a recorded transform, kernels, canonical subspace bases, linear
//! solves, and the Moore-Penrose inverse via full-rank factorization
//! `A = FG`, `A^+ = G^T (G G^T)^{-1} (F^T F)^{-1} F^T`. The factorization
//! route keeps every step inside the rationals, unlike SVD.
//!
//! Subspace bases are returned pivot-normalized (nonzero rows of a reduced
//! echelon form, or the standard free-variable kernel basis), so equal
//! subspaces always produce identical bases.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{dot, is_zero_vec, Rat, RatVector};

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of Gauss-Jordan elimination: `transform * a = reduced`, with
/// `transform` invertible and `pivots` strictly increasing.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: RatMatrix,
    pub pivots: Vec<usize>,
    pub transform: RatMatrix,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("from_rows", format!("{c} columns per row"), "ragged rows"));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Test/fixture helper: matrix from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::rat::rat_int(n)).collect())
                .collect(),
        )
        .expect("integer literal rows must be rectangular")
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn col(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::dims(
                "matrix product",
                format!("{}x? . ?x{}", self.cols, self.cols),
                format!("{}x{} . {}x{}", self.rows, self.cols, rhs.rows, rhs.cols),
            ));
        }
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Result<RatVector> {
        if self.cols != x.len() {
            return Err(Error::dims("matrix-vector product", self.cols.to_string(), x.len().to_string()));
        }
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn add(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dims(
                "matrix sum",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| c * a).collect(),
        }
    }

    /// Gauss-Jordan elimination to reduced row echelon form, recording the
    /// row transform so that `transform * self = reduced`.
    pub fn rref(&self) -> Rref {
        let mut r = self.clone();
        let mut e = RatMatrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut lead = 0usize;

        for col in 0..self.cols {
            let Some(pivot_row) = (lead..self.rows).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            r.swap_rows(lead, pivot_row);
            e.swap_rows(lead, pivot_row);

            let inv = Rat::one() / r.get(lead, col).clone();
            r.scale_row(lead, &inv);
            e.scale_row(lead, &inv);

            for i in 0..self.rows {
                if i != lead && !r.get(i, col).is_zero() {
                    let factor = -r.get(i, col).clone();
                    r.add_scaled_row(i, lead, &factor);
                    e.add_scaled_row(i, lead, &factor);
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }

        Rref { reduced: r, pivots, transform: e }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Pivot-normalized basis of the kernel `{x : Ax = 0}`: one vector per
    /// free column, with a 1 in its own free coordinate.
    pub fn kernel_basis(&self) -> Vec<RatVector> {
        let Rref { reduced, pivots, .. } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (col, &rowopt) in pivot_set.iter().enumerate() {
                if let Some(row) = rowopt {
                    v[col] = -reduced.get(row, free).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical (pivot-normalized) basis of the row space.
    pub fn row_space_basis(&self) -> Vec<RatVector> {
        let rr = self.rref();
        (0..rr.pivots.len()).map(|i| rr.reduced.row(i).to_vec()).collect()
    }

    /// Canonical basis of the column space (row space of the transpose).
    pub fn column_space_basis(&self) -> Vec<RatVector> {
        self.transpose().row_space_basis()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let rr = self.rref();
        (rr.pivots.len() == self.rows).then_some(rr.transform)
    }

    /// Exact Moore-Penrose inverse via full-rank factorization. `F` holds the
    /// pivot columns of `A` and `G` the nonzero rows of the reduced echelon
    /// form, so `A = FG` with both factors of full rank.
    pub fn mp_inverse(&self) -> RatMatrix {
        let rr = self.rref();
        let rank = rr.pivots.len();
        if rank == 0 {
            return RatMatrix::zero(self.cols, self.rows);
        }

        let mut f = RatMatrix::zero(self.rows, rank);
        for (k, &col) in rr.pivots.iter().enumerate() {
            for i in 0..self.rows {
                f.set(i, k, self.get(i, col).clone());
            }
        }
        let mut g = RatMatrix::zero(rank, self.cols);
        for k in 0..rank {
            for j in 0..self.cols {
                g.set(k, j, rr.reduced.get(k, j).clone());
            }
        }
        debug_assert_eq!(f.mul(&g).unwrap(), *self);

        let ggt_inv = g
            .mul(&g.transpose())
            .and_then(|m| m.inverse().ok_or_else(|| Error::Defect("GG^T singular".into())))
            .expect("G has full row rank");
        let ftf_inv = f
            .transpose()
            .mul(&f)
            .and_then(|m| m.inverse().ok_or_else(|| Error::Defect("F^T F singular".into())))
            .expect("F has full column rank");

        g.transpose()
            .mul(&ggt_inv)
            .and_then(|m| m.mul(&ftf_inv))
            .and_then(|m| m.mul(&f.transpose()))
            .expect("factorization shapes conform")
    }

    /// Solves `Ax = b` exactly. Returns `None` when `b` is outside the column
    /// space; otherwise a particular solution (free variables set to zero)
    /// together with the pivot-normalized kernel basis.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<(RatVector, Vec<RatVector>)>> {
        if b.len() != self.rows {
            return Err(Error::dims("solve", self.rows.to_string(), b.len().to_string()));
        }
        let rr = self.rref();
        let c = rr.transform.mul_vec(b)?;
        let rank = rr.pivots.len();
        if c[rank..].iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in rr.pivots.iter().enumerate() {
            x[col] = c[row].clone();
        }
        Ok(Some((x, self.kernel_basis())))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: &Rat) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// row[i] += c * row[src]
    fn add_scaled_row(&mut self, i: usize, src: usize, c: &Rat) {
        for j in 0..self.cols {
            let v = self.get(i, j) + c * self.get(src, j);
            self.set(i, j, v);
        }
    }
}

/// Canonical basis of the span of a set of vectors.
pub fn span_basis(dim: usize, vectors: &[RatVector]) -> Vec<RatVector> {
    let rows: Vec<RatVector> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
    if rows.is_empty() {
        return Vec::new();
    }
    debug_assert!(rows.iter().all(|v| v.len() == dim));
    RatMatrix::from_rows(rows).expect("span vectors conform").row_space_basis()
}

/// Subspace equality through canonical bases.
pub fn same_span(dim: usize, a: &[RatVector], b: &[RatVector]) -> bool {
    span_basis(dim, a) == span_basis(dim, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn penrose_holds(a: &RatMatrix, x: &RatMatrix) -> bool {
        let axa = a.mul(x).unwrap().mul(a).unwrap();
        let xax = x.mul(a).unwrap().mul(x).unwrap();
        let ax = a.mul(x).unwrap();
        let xa = x.mul(a).unwrap();
        axa == *a && xax == *x && ax.transpose() == ax && xa.transpose() == xa
    }

    #[test]
    fn rref_identity() {
        let i3 = RatMatrix::identity(3);
        let rr = i3.rref();
        assert_eq!(rr.reduced, i3);
        assert_eq!(rr.pivots, vec![0, 1, 2]);
        assert_eq!(rr.transform, i3);
    }

    #[test]
    fn rref_two_by_three() {
        let a = RatMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 1]]);
        let rr = a.rref();
        assert_eq!(rr.pivots, vec![0, 1]);
        assert_eq!(rr.reduced, RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, -1]]));
        assert_eq!(rr.transform.mul(&a).unwrap(), rr.reduced);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = RatMatrix::zero(2, 3);
        let rr = z.rref();
        assert_eq!(rr.reduced, z);
        assert!(rr.pivots.is_empty());
        assert_eq!(rr.transform, RatMatrix::identity(2));
    }

    #[test]
    fn kernel_of_row_echelon() {
        let a = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, -1]]);
        let k = a.kernel_basis();
        assert_eq!(k, vec![vec![rat_int(0), rat_int(1), rat_int(1)]]);
    }

    #[test]
    fn kernel_of_invertible_is_empty() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_single_equation() {
        let a = RatMatrix::from_i64(&[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        // (-1, 1) spans the same line as (1, -1).
        assert!(same_span(2, &k, &[vec![rat_int(1), rat_int(-1)]]));
    }

    #[test]
    fn mp_inverse_full_row_rank() {
        let a = RatMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 1]]);
        let expected = RatMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat(-1, 2)],
            vec![rat_int(0), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(a.mp_inverse(), expected);
    }

    #[test]
    fn mp_inverse_rank_one() {
        let a = RatMatrix::from_i64(&[&[1, 0, 1], &[1, 0, 1]]);
        let expected = RatMatrix::from_rows(vec![
            vec![rat(1, 4), rat(1, 4)],
            vec![rat_int(0), rat_int(0)],
            vec![rat(1, 4), rat(1, 4)],
        ])
        .unwrap();
        assert_eq!(a.mp_inverse(), expected);
    }

    #[test]
    fn mp_inverse_identity_and_zero() {
        assert_eq!(RatMatrix::identity(4).mp_inverse(), RatMatrix::identity(4));
        assert_eq!(RatMatrix::zero(2, 3).mp_inverse(), RatMatrix::zero(3, 2));
    }

    #[test]
    fn solve_identity() {
        let (x, k) = RatMatrix::identity(2)
            .solve(&[rat_int(3), rat_int(4)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![rat_int(3), rat_int(4)]);
        assert!(k.is_empty());
    }

    #[test]
    fn solve_underdetermined() {
        let a = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, -1]]);
        let b = vec![rat_int(2), rat_int(3)];
        let (x, k) = a.solve(&b).unwrap().unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(3), rat_int(0)]);
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        assert_eq!(k, vec![vec![rat_int(0), rat_int(1), rat_int(1)]]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = RatMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(a.solve(&[rat_int(1), rat_int(2)]).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = RatMatrix::identity(2);
        assert!(a.solve(&[rat_int(1)]).is_err());
    }

    #[test]
    fn subspace_bases_are_canonical() {
        let a = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(2), rat_int(2)]];
        let b = vec![vec![rat_int(-3), rat_int(-3)]];
        assert!(same_span(2, &a, &b));
        assert!(!same_span(2, &a, &[vec![rat_int(1), rat_int(0)]]));
    }

    prop_compose! {
        /// Matrices with dims <= 8, numerators in [-9, 9], denominators in {1,2,3,4}.
        fn small_matrix()(rows in 1usize..=8, cols in 1usize..=8)
            (entries in prop::collection::vec((-9i64..=9, 1i64..=4), rows * cols),
             rows in Just(rows), cols in Just(cols))
            -> RatMatrix
        {
            let mut m = RatMatrix::zero(rows, cols);
            for (k, (n, d)) in entries.into_iter().enumerate() {
                m.set(k / cols, k % cols, rat(n, d));
            }
            m
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn penrose_equations(a in small_matrix()) {
            let x = a.mp_inverse();
            prop_assert!(penrose_holds(&a, &x));
        }

        #[test]
        fn mp_inverse_is_involutive(a in small_matrix()) {
            prop_assert_eq!(a.mp_inverse().mp_inverse(), a);
        }

        #[test]
        fn rank_equals_transpose_rank(a in small_matrix()) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
            prop_assert_eq!(a.rank(), a.rref().pivots.len());
        }

        #[test]
        fn kernel_is_orthogonal_to_row_space(a in small_matrix()) {
            let kernel = a.kernel_basis();
            prop_assert_eq!(kernel.len(), a.col_count() - a.rank());
            for v in &kernel {
                prop_assert!(is_zero_vec(&a.mul_vec(v).unwrap()));
                for r in a.row_space_basis() {
                    prop_assert!(dot(&r, v).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn transform_is_invertible(a in small_matrix()) {
            let rr = a.rref();
            prop_assert!(rr.transform.inverse().is_some());
            prop_assert_eq!(rr.transform.mul(&a).unwrap(), rr.reduced);
        }
    }
}
