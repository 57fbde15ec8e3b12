//! Constructors for the example weak Hopf algebras: groupoid algebras,
//! the averaged-coproduct group algebra, disjoint unions, the
//! unit-adjunction of a Hopf algebra, and linear duals.

use crate::algebra::{FDAlgebraData, FDCoalgebraData, WeakBialgebra, WeakHopfAlgebra};
use crate::error::{Error, Result};
use crate::group::{FiniteGroupTable, GroupoidSpec};
use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};
use crate::validate::hopf_criterion;

/// Groupoid algebra of a disjoint union of groups: δ_g δ_h = δ_{gh} when
/// g, h compose (same component), 0 otherwise; Δ(δ_g) = δ_g ⊗ δ_g,
/// ε(δ_g) = 1, S(δ_g) = δ_{g⁻¹}; unit Σ_e δ_e.
pub fn build_groupoid_algebra(spec: &GroupoidSpec, field: FieldSpec) -> Result<WeakHopfAlgebra> {
    let dim = spec.total_elements();
    let mut offset = Vec::with_capacity(spec.components.len());
    let mut acc = 0;
    for c in &spec.components {
        offset.push(acc);
        acc += c.order;
    }

    let mut mult = Mat::zeros(dim, dim * dim, field);
    let mut comult = Mat::zeros(dim * dim, dim, field);
    let mut unit = vec![field.zero(); dim];
    let counit = vec![field.one(); dim];
    let mut antipode = Mat::zeros(dim, dim, field);
    let mut labels = Vec::with_capacity(dim);

    for (ci, comp) in spec.components.iter().enumerate() {
        let base = offset[ci];
        unit[base + comp.identity] = field.one();
        for a in 0..comp.order {
            let ga = base + a;
            labels.push(format!("d{}_{}", ci, a));
            comult.set(ga * dim + ga, ga, field.one());
            antipode.set(base + comp.inv(a), ga, field.one());
            for b in 0..comp.order {
                let gb = base + b;
                mult.set(base + comp.op(a, b), ga * dim + gb, field.one());
            }
        }
    }

    let alg = FDAlgebraData::new(dim, mult, unit)?;
    let coalg = FDCoalgebraData::new(dim, comult, counit)?;
    let wb = WeakBialgebra::new(alg, coalg, Some(labels))?;
    WeakHopfAlgebra::new(wb, antipode)
}

/// The group algebra of a finite abelian group with the averaged
/// coproduct Δ(g) = (1/|G|) Σ_h gh ⊗ h⁻¹ and counit ε(g) = |G|·[g = 1].
/// The antipode is the identity.
pub fn build_hg(g: &FiniteGroupTable, field: FieldSpec) -> Result<WeakHopfAlgebra> {
    if !g.abelian {
        return Err(Error::NotAbelian);
    }
    let order = g.order as u64;
    let p = field.characteristic();
    if p != 0 && order.is_multiple_of(p) {
        return Err(Error::BadCharacteristic(order));
    }
    let n = g.order;
    let inv_order = Scalar::from_i64(n as i64, field).inv()?;

    let mut mult = Mat::zeros(n, n * n, field);
    let mut comult = Mat::zeros(n * n, n, field);
    let mut unit = vec![field.zero(); n];
    let mut counit = vec![field.zero(); n];
    unit[g.identity] = field.one();
    counit[g.identity] = Scalar::from_i64(n as i64, field);

    for a in 0..n {
        for b in 0..n {
            mult.set(g.op(a, b), a * n + b, field.one());
            // Coefficient of e_a ⊗ e_b in Δ(e_i) is 1/|G| when ab = i.
            comult.set(a * n + b, g.op(a, b), inv_order.clone());
        }
    }

    let labels = (0..n).map(|i| format!("g{}", i)).collect();
    let alg = FDAlgebraData::new(n, mult, unit)?;
    let coalg = FDCoalgebraData::new(n, comult, counit)?;
    let wb = WeakBialgebra::new(alg, coalg, Some(labels))?;
    WeakHopfAlgebra::new(wb, Mat::identity(n, field))
}

/// Block-diagonal disjoint union of weak Hopf algebras: products vanish
/// across blocks and the unit is the sum of the block units.
pub fn build_disjoint_union(parts: &[WeakHopfAlgebra]) -> Result<WeakHopfAlgebra> {
    let first = parts
        .first()
        .ok_or_else(|| Error::BadParams("union of zero parts".into()))?;
    let field = first.field();
    if parts.iter().any(|p| p.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let dim: usize = parts.iter().map(|p| p.dim()).sum();
    let mut offset = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for p in parts {
        offset.push(acc);
        acc += p.dim();
    }

    let mut mult = Mat::zeros(dim, dim * dim, field);
    let mut comult = Mat::zeros(dim * dim, dim, field);
    let mut unit = vec![field.zero(); dim];
    let mut counit = vec![field.zero(); dim];
    let mut antipode = Mat::zeros(dim, dim, field);
    let mut labels = Vec::with_capacity(dim);

    for (pi, part) in parts.iter().enumerate() {
        let base = offset[pi];
        let m = part.dim();
        for i in 0..m {
            let gi = base + i;
            labels.push(format!("p{}_{}", pi, i));
            unit[gi] = part.wb.alg.unit[i].clone();
            counit[gi] = part.wb.coalg.counit[i].clone();
            for j in 0..m {
                for k in 0..m {
                    let c = part.wb.alg.mult.at(k, i * m + j);
                    if !c.is_zero() {
                        mult.set(base + k, gi * dim + (base + j), c.clone());
                    }
                }
            }
            for j in 0..m {
                for k in 0..m {
                    let c = part.wb.coalg.comult.at(j * m + k, i);
                    if !c.is_zero() {
                        comult.set((base + j) * dim + (base + k), gi, c.clone());
                    }
                }
            }
            for j in 0..m {
                let c = part.antipode.at(j, i);
                if !c.is_zero() {
                    antipode.set(base + j, gi, c.clone());
                }
            }
        }
    }

    let alg = FDAlgebraData::new(dim, mult, unit)?;
    let coalg = FDCoalgebraData::new(dim, comult, counit)?;
    let wb = WeakBialgebra::new(alg, coalg, Some(labels))?;
    WeakHopfAlgebra::new(wb, antipode)
}

/// Adjoins a fresh multiplicative unit to a Hopf algebra. The new basis
/// element comes last; the old unit stays in the basis span. The new
/// structure maps are Δ(new) = (new−old)⊗(new−old) + old⊗old,
/// ε(new) = 2, S(new) = new.
pub fn build_kaplansky(h: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra> {
    if !hopf_criterion(h)?.is_hopf() {
        return Err(Error::NotHopf);
    }
    let n = h.dim();
    let dim = n + 1;
    let field = h.field();
    let top = n; // index of the adjoined unit

    let mut mult = Mat::zeros(dim, dim * dim, field);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = h.wb.alg.mult.at(k, i * n + j);
                if !c.is_zero() {
                    mult.set(k, i * dim + j, c.clone());
                }
            }
        }
    }
    for i in 0..dim {
        mult.set(i, top * dim + i, field.one());
        if i != top {
            mult.set(i, i * dim + top, field.one());
        }
    }

    let mut unit = vec![field.zero(); dim];
    unit[top] = field.one();

    let mut comult = Mat::zeros(dim * dim, dim, field);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = h.wb.coalg.comult.at(j * n + k, i);
                if !c.is_zero() {
                    comult.set(j * dim + k, i, c.clone());
                }
            }
        }
    }
    // Δ(new) = (new−e)⊗(new−e) + e⊗e  with e the old unit.
    let mut old_unit = vec![field.zero(); dim];
    for (i, c) in h.wb.alg.unit.iter().enumerate() {
        old_unit[i] = c.clone();
    }
    let mut new_minus_e: Vec<Scalar> = old_unit.iter().map(Scalar::neg).collect();
    new_minus_e[top] = field.one();
    let part1 = crate::algebra::tensor(&new_minus_e, &new_minus_e)?;
    let part2 = crate::algebra::tensor(&old_unit, &old_unit)?;
    for (flat, v) in part1.iter().enumerate() {
        let total = v.add(&part2[flat])?;
        if !total.is_zero() {
            comult.set(flat, top, total);
        }
    }

    let mut counit = vec![field.zero(); dim];
    for (i, c) in h.wb.coalg.counit.iter().enumerate() {
        counit[i] = c.clone();
    }
    counit[top] = Scalar::from_i64(2, field);

    let mut antipode = Mat::zeros(dim, dim, field);
    for i in 0..n {
        for j in 0..n {
            let c = h.antipode.at(j, i);
            if !c.is_zero() {
                antipode.set(j, i, c.clone());
            }
        }
    }
    antipode.set(top, top, field.one());

    let mut labels: Vec<String> = (0..n).map(|i| format!("h{}", i)).collect();
    labels.push("unit_new".into());

    let alg = FDAlgebraData::new(dim, mult, unit)?;
    let coalg = FDCoalgebraData::new(dim, comult, counit)?;
    let wb = WeakBialgebra::new(alg, coalg, Some(labels))?;
    WeakHopfAlgebra::new(wb, antipode)
}

/// Linear dual of a weak bialgebra on the dual basis: multiplication and
/// comultiplication swap through transposition, unit and counit swap, and
/// the antipode transposes.
pub fn build_dual(wb: &WeakBialgebra) -> Result<WeakBialgebra> {
    let n = wb.dim();
    let alg = FDAlgebraData::new(n, wb.coalg.comult.transpose(), wb.coalg.counit.clone())?;
    let coalg = FDCoalgebraData::new(n, wb.alg.mult.transpose(), wb.alg.unit.clone())?;
    let labels = wb
        .labels
        .as_ref()
        .map(|l| l.iter().map(|s| format!("{s}*")).collect());
    WeakBialgebra::new(alg, coalg, labels)
}

pub fn build_dual_hopf(wh: &WeakHopfAlgebra) -> Result<WeakHopfAlgebra> {
    WeakHopfAlgebra::new(build_dual(&wh.wb)?, wh.antipode.transpose())
}
