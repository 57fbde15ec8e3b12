//! Dense exact linear algebra and Kronecker calculus.
//!
//! Index convention, used by every module downstream: the basis of V⊗W is
//! `e_i ⊗ f_j ↦ i * dim(W) + j` (row-major). `twist` is tested against it.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A dense rows×cols matrix over one field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Mat {
        let mut m = Mat::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Mat {
            rows: r,
            cols: c,
            field,
            entries,
        })
    }

    /// Column vector from coordinates.
    pub fn col_vec(field: FieldSpec, v: &[Scalar]) -> Mat {
        Mat {
            rows: v.len(),
            cols: 1,
            field,
            entries: v.to_vec(),
        }
    }

    /// Row vector from coordinates.
    pub fn row_vec(field: FieldSpec, v: &[Scalar]) -> Mat {
        Mat {
            rows: 1,
            cols: v.len(),
            field,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn matmul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).fma(a, b)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("add".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<Mat> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| e.mul(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.at(c, r).clone()
        })
    }

    /// Kronecker product with the row-major convention
    /// `(a⊗b)[(i,k),(j,l)] = a[i,j] * b[k,l]`.
    pub fn kron(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a.mul(b)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "apply: {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, c);
                if a.is_zero() {
                    continue;
                }
                out[r] = out[r].fma(a, x)?;
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hstack".into()));
        }
        Ok(Mat::from_fn(
            self.rows,
            self.cols + other.cols,
            self.field,
            |r, c| {
                if c < self.cols {
                    self.at(r, c).clone()
                } else {
                    other.at(r, c - self.cols).clone()
                }
            },
        ))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack".into()));
        }
        Ok(Mat::from_fn(
            self.rows + other.rows,
            self.cols,
            self.field,
            |r, c| {
                if r < self.rows {
                    self.at(r, c).clone()
                } else {
                    other.at(r - self.rows, c).clone()
                }
            },
        ))
    }

    /// Row-reduced echelon form together with the pivot column indices.
    pub fn rref(&self) -> Result<(Mat, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.at(pr, c).clone();
                    m.set(pr, c, m.at(row, c).clone());
                    m.set(row, c, tmp);
                }
            }
            let inv = m.at(row, col).inv()?;
            for c in 0..m.cols {
                m.set(row, c, m.at(row, c).mul(&inv)?);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in 0..m.cols {
                    let v = m.at(r, c).sub(&m.at(row, c).mul(&factor)?)?;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Columns form a basis of the kernel (empty matrix when injective).
    pub fn kernel_basis(&self) -> Result<Mat> {
        let (r, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.cols, free.len(), self.field);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, r.at(prow, fc).neg());
            }
        }
        Ok(out)
    }

    /// Basis of the column space: the leftmost-pivot columns of the
    /// original matrix, in order. Deterministic by construction.
    pub fn image_basis(&self) -> Result<Mat> {
        let (_, pivots) = self.rref()?;
        let mut out = Mat::zeros(self.rows, pivots.len(), self.field);
        for (k, &c) in pivots.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, k, self.at(r, c).clone());
            }
        }
        Ok(out)
    }

    /// One particular solution of `self * X = rhs` for every rhs column,
    /// or None when the system is inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Result<Option<Mat>> {
        self.check_field(rhs)?;
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch("solve".into()));
        }
        let (r, pivots) = self.hstack(rhs)?.rref()?;
        // A pivot landing in the rhs block certifies inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.cols, rhs.cols, self.field);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.at(prow, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Membership of a vector in the column span.
    pub fn spans(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.solve(&Mat::col_vec(self.field, v))?.is_some())
    }
}

/// The flip V⊗W → W⊗V as a permutation matrix: basis index
/// `i*dim_w + j ↦ j*dim_v + i`.
pub fn twist(dim_v: usize, dim_w: usize, field: FieldSpec) -> Mat {
    let n = dim_v * dim_w;
    let mut m = Mat::zeros(n, n, field);
    for i in 0..dim_v {
        for j in 0..dim_w {
            m.set(j * dim_v + i, i * dim_w + j, field.one());
        }
    }
    m
}

/// Coordinates of u⊗v under the row-major convention.
pub fn tensor_vec(u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a.mul(b)?);
        }
    }
    Ok(out)
}

/// Splits a flat tensor index into (i, j) with j running over dim_w.
pub fn split_index(flat: usize, dim_w: usize) -> (usize, usize) {
    (flat / dim_w, flat % dim_w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n, Q)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = Mat::identity(2, Q);
        let i3 = Mat::identity(3, Q);
        assert_eq!(i2.kron(&i3).unwrap(), Mat::identity(6, Q));
    }

    #[test]
    fn matmul_identity_is_noop() {
        let a = Mat::from_rows(Q, vec![vec![s(1), s(2), s(3)], vec![s(4), s(5), s(6)]]).unwrap();
        assert_eq!(a.matmul(&Mat::identity(3, Q)).unwrap(), a);
    }

    // Oracle: direct four-index expansion of the Kronecker definition.
    #[test]
    fn kron_matches_four_index_expansion() {
        let a = Mat::from_rows(Q, vec![vec![s(1), s(2)], vec![s(3), s(4)]]).unwrap();
        let b = Mat::from_rows(Q, vec![vec![s(5), s(6)], vec![s(7), s(0)]]).unwrap();
        let k = a.kron(&b).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for p in 0..2 {
                    for q in 0..2 {
                        assert_eq!(
                            k.at(i * 2 + p, j * 2 + q),
                            &a.at(i, j).mul(b.at(p, q)).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let z = Mat::zeros(3, 3, Q);
        let k = z.kernel_basis().unwrap();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank().unwrap(), 3);
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(Mat::identity(4, Q).rank().unwrap(), 4);
    }

    // Oracle: hand elimination of [[1,1],[1,1]] gives kernel span{(1,-1)}.
    #[test]
    fn kernel_of_all_ones_2x2() {
        let a = Mat::from_rows(Q, vec![vec![s(1), s(1)], vec![s(1), s(1)]]).unwrap();
        let k = a.kernel_basis().unwrap();
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        // Normalized kernel vector is proportional to (1, -1).
        assert_eq!(col[0].mul(&s(-1)).unwrap(), col[1]);
        assert!(!col[0].is_zero());
    }

    #[test]
    fn twist_special_cases() {
        assert_eq!(twist(1, 5, Q), Mat::identity(5, Q));
        let t = twist(2, 2, Q);
        assert_eq!(t.matmul(&t).unwrap(), Mat::identity(4, Q));
    }

    #[test]
    fn twist_swaps_simple_tensors() {
        let v = vec![s(1), s(2)];
        let w = vec![s(3), s(4), s(5)];
        let vw = tensor_vec(&v, &w).unwrap();
        let wv = tensor_vec(&w, &v).unwrap();
        assert_eq!(twist(2, 3, Q).apply(&vw).unwrap(), wv);
    }

    #[test]
    fn solve_reports_inconsistent_systems_as_none() {
        let a = Mat::from_rows(Q, vec![vec![s(1), s(1)], vec![s(1), s(1)]]).unwrap();
        let rhs = Mat::col_vec(Q, &[s(1), s(2)]);
        assert!(a.solve(&rhs).unwrap().is_none());
        let rhs_ok = Mat::col_vec(Q, &[s(3), s(3)]);
        let x = a.solve(&rhs_ok).unwrap().unwrap();
        assert_eq!(a.matmul(&x).unwrap(), rhs_ok);
    }

    fn arb_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-5i64..5, rows * cols)
            .prop_map(move |v| Mat::from_fn(rows, cols, Q, |r, c| s(v[r * cols + c])))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_nullity(a in arb_mat(4, 5)) {
            let rank = a.rank().unwrap();
            let nullity = a.kernel_basis().unwrap().cols();
            prop_assert_eq!(rank + nullity, 5);
        }

        #[test]
        fn kernel_columns_really_die(a in arb_mat(3, 4)) {
            let k = a.kernel_basis().unwrap();
            for c in 0..k.cols() {
                let v = a.apply(&k.column(c)).unwrap();
                prop_assert!(v.iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn twist_involution(v in 1usize..5, w in 1usize..5) {
            let t = twist(v, w, Q).matmul(&twist(w, v, Q)).unwrap();
            prop_assert_eq!(t, Mat::identity(v * w, Q));
        }

        #[test]
        fn kron_associative(a in arb_mat(2, 2), b in arb_mat(2, 3), c in arb_mat(3, 2)) {
            let lhs = a.kron(&b).unwrap().kron(&c).unwrap();
            let rhs = a.kron(&b.kron(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_mixed_product(a in arb_mat(2, 2), b in arb_mat(2, 2),
                              c in arb_mat(2, 2), d in arb_mat(2, 2)) {
            // (a⊗b)(c⊗d) = ac ⊗ bd
            let lhs = a.kron(&b).unwrap().matmul(&c.kron(&d).unwrap()).unwrap();
            let rhs = a.matmul(&c).unwrap().kron(&b.matmul(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
