//! Finite-dimensional algebra and coalgebra data on a fixed ordered basis,
//! and the weak bialgebra / weak Hopf algebra structures built from them.
//!
//! Structure constants: `e_i · e_j = Σ_k c[i][j][k] e_k` and
//! `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`. The multiplication matrix is
//! dim × dim² with column `i*dim + j`; the comultiplication matrix is
//! dim² × dim with row `j*dim + k`.

use crate::error::{Error, Result};
use crate::linalg::{tensor_vec, Mat};
use crate::scalar::{FieldSpec, Scalar};

/// Multiplication and unit of a finite-dimensional algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct FDAlgebraData {
    pub dim: usize,
    pub mult: Mat,
    pub unit: Vec<Scalar>,
}

impl FDAlgebraData {
    pub fn new(dim: usize, mult: Mat, unit: Vec<Scalar>) -> Result<FDAlgebraData> {
        if mult.rows() != dim || mult.cols() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra data: dim {dim}, mult {}x{}, unit {}",
                mult.rows(),
                mult.cols(),
                unit.len()
            )));
        }
        Ok(FDAlgebraData { dim, mult, unit })
    }

    pub fn field(&self) -> FieldSpec {
        self.mult.field()
    }

    /// Product of two coordinate vectors.
    pub fn mult_vec(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b)?;
                for k in 0..self.dim {
                    let c = self.mult.at(k, i * self.dim + j);
                    if !c.is_zero() {
                        out[k] = out[k].fma(c, &ab)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let field = self.field();
        let mut v = vec![field.zero(); self.dim];
        v[i] = field.one();
        v
    }

    /// Matrix of left multiplication by `v`.
    pub fn left_mult_op(&self, v: &[Scalar]) -> Result<Mat> {
        let cols = (0..self.dim)
            .map(|j| self.mult_vec(v, &self.basis_vec(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_fn(self.dim, self.dim, self.field(), |r, c| {
            cols[c][r].clone()
        }))
    }

    /// Matrix of right multiplication by `v`.
    pub fn right_mult_op(&self, v: &[Scalar]) -> Result<Mat> {
        let cols = (0..self.dim)
            .map(|j| self.mult_vec(&self.basis_vec(j), v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Mat::from_fn(self.dim, self.dim, self.field(), |r, c| {
            cols[c][r].clone()
        }))
    }

    pub fn is_commutative(&self) -> Result<bool> {
        let t = crate::linalg::twist(self.dim, self.dim, self.field());
        Ok(self.mult.matmul(&t)? == self.mult)
    }
}

/// Comultiplication and counit of a finite-dimensional coalgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct FDCoalgebraData {
    pub dim: usize,
    pub comult: Mat,
    pub counit: Vec<Scalar>,
}

impl FDCoalgebraData {
    pub fn new(dim: usize, comult: Mat, counit: Vec<Scalar>) -> Result<FDCoalgebraData> {
        if comult.rows() != dim * dim || comult.cols() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "coalgebra data: dim {dim}, comult {}x{}, counit {}",
                comult.rows(),
                comult.cols(),
                counit.len()
            )));
        }
        Ok(FDCoalgebraData {
            dim,
            comult,
            counit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.comult.field()
    }

    /// Δ applied to a coordinate vector; result lives in dim².
    pub fn comult_vec(&self, u: &[Scalar]) -> Result<Vec<Scalar>> {
        self.comult.apply(u)
    }

    pub fn counit_vec(&self, u: &[Scalar]) -> Result<Scalar> {
        let mut out = self.field().zero();
        for (i, a) in u.iter().enumerate() {
            if !a.is_zero() {
                out = out.fma(&self.counit[i], a)?;
            }
        }
        Ok(out)
    }

    pub fn is_cocommutative(&self) -> Result<bool> {
        let t = crate::linalg::twist(self.dim, self.dim, self.field());
        Ok(t.matmul(&self.comult)? == self.comult)
    }
}

/// Paired algebra and coalgebra data on a shared basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakBialgebra {
    pub alg: FDAlgebraData,
    pub coalg: FDCoalgebraData,
    pub labels: Option<Vec<String>>,
}

impl WeakBialgebra {
    pub fn new(
        alg: FDAlgebraData,
        coalg: FDCoalgebraData,
        labels: Option<Vec<String>>,
    ) -> Result<WeakBialgebra> {
        if alg.dim != coalg.dim {
            return Err(Error::DimensionMismatch(format!(
                "algebra dim {} vs coalgebra dim {}",
                alg.dim, coalg.dim
            )));
        }
        if alg.field() != coalg.field() {
            return Err(Error::FieldMismatch);
        }
        if let Some(l) = &labels {
            if l.len() != alg.dim {
                return Err(Error::DimensionMismatch("labels".into()));
            }
        }
        Ok(WeakBialgebra { alg, coalg, labels })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        self.alg.basis_vec(i)
    }

    pub fn unit_vec(&self) -> Vec<Scalar> {
        self.alg.unit.clone()
    }

    pub fn mult_vec(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.alg.mult_vec(u, v)
    }

    pub fn comult_vec(&self, u: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coalg.comult_vec(u)
    }

    pub fn counit_of(&self, u: &[Scalar]) -> Result<Scalar> {
        self.coalg.counit_vec(u)
    }

    pub fn counit_row(&self) -> Mat {
        Mat::row_vec(self.field(), &self.coalg.counit)
    }

    pub fn unit_col(&self) -> Mat {
        Mat::col_vec(self.field(), &self.alg.unit)
    }

    /// Δ(1) as a dim² coordinate vector.
    pub fn comult_of_unit(&self) -> Result<Vec<Scalar>> {
        self.comult_vec(&self.alg.unit)
    }

    /// ε_t(h) = ε(1_1 h) 1_2, as a dim×dim matrix.
    pub fn eps_t_mat(&self) -> Result<Mat> {
        let n = self.dim();
        let d1 = self.comult_of_unit()?;
        let mut m = Mat::zeros(n, n, self.field());
        for i in 0..n {
            let ei = self.basis_vec(i);
            let mut col = vec![self.field().zero(); n];
            for (flat, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::split_index(flat, n);
                let prod = self.mult_vec(&self.basis_vec(j), &ei)?;
                let w = c.mul(&self.counit_of(&prod)?)?;
                col[k] = col[k].add(&w)?;
            }
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, i, v);
            }
        }
        Ok(m)
    }

    /// ε_s(h) = 1_1 ε(h 1_2).
    pub fn eps_s_mat(&self) -> Result<Mat> {
        let n = self.dim();
        let d1 = self.comult_of_unit()?;
        let mut m = Mat::zeros(n, n, self.field());
        for i in 0..n {
            let ei = self.basis_vec(i);
            let mut col = vec![self.field().zero(); n];
            for (flat, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::split_index(flat, n);
                let prod = self.mult_vec(&ei, &self.basis_vec(k))?;
                let w = c.mul(&self.counit_of(&prod)?)?;
                col[j] = col[j].add(&w)?;
            }
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, i, v);
            }
        }
        Ok(m)
    }

    /// ε_s'(h) = ε(h 1_1) 1_2.
    pub fn eps_s_prime_mat(&self) -> Result<Mat> {
        let n = self.dim();
        let d1 = self.comult_of_unit()?;
        let mut m = Mat::zeros(n, n, self.field());
        for i in 0..n {
            let ei = self.basis_vec(i);
            let mut col = vec![self.field().zero(); n];
            for (flat, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = crate::linalg::split_index(flat, n);
                let prod = self.mult_vec(&ei, &self.basis_vec(j))?;
                let w = c.mul(&self.counit_of(&prod)?)?;
                col[k] = col[k].add(&w)?;
            }
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, i, v);
            }
        }
        Ok(m)
    }

    /// Product of two vectors in H⊗H, multiplying leg-wise.
    pub fn tensor2_mult(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        let field = self.field();
        let mut out = vec![field.zero(); n * n];
        for (fu, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i1, i2) = crate::linalg::split_index(fu, n);
            for (fv, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (j1, j2) = crate::linalg::split_index(fv, n);
                let ab = a.mul(b)?;
                let p1 = self.mult_vec(&self.basis_vec(i1), &self.basis_vec(j1))?;
                let p2 = self.mult_vec(&self.basis_vec(i2), &self.basis_vec(j2))?;
                for (k1, x) in p1.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (k2, y) in p2.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let idx = k1 * n + k2;
                        out[idx] = out[idx].add(&ab.mul(x)?.mul(y)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of two vectors in H⊗H⊗H, multiplying leg-wise.
    pub fn tensor3_mult(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        let field = self.field();
        let mut out = vec![field.zero(); n * n * n];
        for (fu, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i1, rest) = (fu / (n * n), fu % (n * n));
            let (i2, i3) = crate::linalg::split_index(rest, n);
            for (fv, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (j1, restv) = (fv / (n * n), fv % (n * n));
                let (j2, j3) = crate::linalg::split_index(restv, n);
                let ab = a.mul(b)?;
                let p1 = self.mult_vec(&self.basis_vec(i1), &self.basis_vec(j1))?;
                let p2 = self.mult_vec(&self.basis_vec(i2), &self.basis_vec(j2))?;
                let p3 = self.mult_vec(&self.basis_vec(i3), &self.basis_vec(j3))?;
                for (k1, x) in p1.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (k2, y) in p2.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let xy = x.mul(y)?;
                        for (k3, z) in p3.iter().enumerate() {
                            if z.is_zero() {
                                continue;
                            }
                            let idx = (k1 * n + k2) * n + k3;
                            out[idx] = out[idx].add(&ab.mul(&xy)?.mul(z)?)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// (Δ⊗id)Δ(u) = (id⊗Δ)Δ(u) evaluated the first way; coassociativity is
    /// a separate check.
    pub fn comult2_vec(&self, u: &[Scalar]) -> Result<Vec<Scalar>> {
        self.comult_legs(u, 3)
    }

    /// Iterated coproduct of `u` with the given number of tensor legs
    /// (legs = 1 returns `u`), expanding the leftmost leg each round.
    pub fn comult_legs(&self, u: &[Scalar], legs: usize) -> Result<Vec<Scalar>> {
        let n = self.dim();
        let mut cur = u.to_vec();
        let mut cur_legs = 1usize;
        while cur_legs < legs {
            let tail = n.pow((cur_legs - 1) as u32);
            let mut next = vec![self.field().zero(); n * n * tail];
            for (flat, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (head, rest) = (flat / tail, flat % tail);
                let d = self.comult_vec(&self.basis_vec(head))?;
                for (f2, c2) in d.iter().enumerate() {
                    if !c2.is_zero() {
                        let idx = f2 * tail + rest;
                        next[idx] = next[idx].add(&c.mul(c2)?)?;
                    }
                }
            }
            cur = next;
            cur_legs += 1;
        }
        Ok(cur)
    }

    pub fn is_commutative(&self) -> Result<bool> {
        self.alg.is_commutative()
    }

    pub fn is_cocommutative(&self) -> Result<bool> {
        self.coalg.is_cocommutative()
    }
}

/// A weak bialgebra with an antipode matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct WeakHopfAlgebra {
    pub wb: WeakBialgebra,
    pub antipode: Mat,
}

impl WeakHopfAlgebra {
    pub fn new(wb: WeakBialgebra, antipode: Mat) -> Result<WeakHopfAlgebra> {
        if antipode.rows() != wb.dim() || antipode.cols() != wb.dim() {
            return Err(Error::DimensionMismatch("antipode shape".into()));
        }
        if antipode.field() != wb.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(WeakHopfAlgebra { wb, antipode })
    }

    pub fn dim(&self) -> usize {
        self.wb.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.wb.field()
    }

    pub fn antipode_vec(&self, u: &[Scalar]) -> Result<Vec<Scalar>> {
        self.antipode.apply(u)
    }
}

/// Convenience: coordinates of u⊗v for vectors over possibly different
/// spaces (same field).
pub fn tensor(u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    tensor_vec(u, v)
}
