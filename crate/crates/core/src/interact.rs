//! Actions of a weak bialgebra on an algebra and coactions on a
//! coalgebra, stored as full matrices: `act: H⊗A → A` and
//! `coact: H → H⊗A` with `ρ(h) = h⁰ ⊗ h¹`. Includes the scalar action
//! family through a functional λ, the scalar coaction family through a
//! group-like idempotent z, the dual-side structures, and the extension
//! of a Hopf-pair action to the unit-adjoined algebras.

use crate::algebra::{tensor, WeakBialgebra};
use crate::error::{Error, Result};
use crate::linalg::{split_index, twist, Mat};
use crate::report::{cmp_mats, CheckReport};
use crate::scalar::Scalar;
use crate::zoo::build_dual;

/// A left action of `h` on the algebra part of `a`.
#[derive(Debug, Clone)]
pub struct ActionData {
    pub h: WeakBialgebra,
    pub a: WeakBialgebra,
    pub act: Mat,
}

impl ActionData {
    pub fn new(h: WeakBialgebra, a: WeakBialgebra, act: Mat) -> Result<ActionData> {
        if act.rows() != a.dim() || act.cols() != h.dim() * a.dim() {
            return Err(Error::DimensionMismatch(format!(
                "action matrix {}x{} for dims H={}, A={}",
                act.rows(),
                act.cols(),
                h.dim(),
                a.dim()
            )));
        }
        if act.field() != h.field() || h.field() != a.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(ActionData { h, a, act })
    }

    /// h · x for coordinate vectors.
    pub fn act_vec(&self, hv: &[Scalar], av: &[Scalar]) -> Result<Vec<Scalar>> {
        self.act.apply(&tensor(hv, av)?)
    }

    /// h · 1_A.
    pub fn act_on_unit(&self, hv: &[Scalar]) -> Result<Vec<Scalar>> {
        self.act_vec(hv, &self.a.unit_vec())
    }
}

/// A right coaction of (the coalgebra part of) `a` on `h`.
#[derive(Debug, Clone)]
pub struct CoactionData {
    pub h: WeakBialgebra,
    pub a: WeakBialgebra,
    pub coact: Mat,
}

impl CoactionData {
    pub fn new(h: WeakBialgebra, a: WeakBialgebra, coact: Mat) -> Result<CoactionData> {
        if coact.rows() != h.dim() * a.dim() || coact.cols() != h.dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction matrix {}x{} for dims H={}, A={}",
                coact.rows(),
                coact.cols(),
                h.dim(),
                a.dim()
            )));
        }
        if coact.field() != h.field() || h.field() != a.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(CoactionData { h, a, coact })
    }

    /// ρ(h) as a vector in H⊗A.
    pub fn coact_vec(&self, hv: &[Scalar]) -> Result<Vec<Scalar>> {
        self.coact.apply(hv)
    }
}

/// Checks the four module-algebra conditions, plus the two product
/// identities that hold when the acting element lies in the image of the
/// target or source map.
pub fn check_module_algebra(action: &ActionData) -> Result<CheckReport> {
    let h = &action.h;
    let a = &action.a;
    let nh = h.dim();
    let na = a.dim();
    let field = h.field();
    let id_h = Mat::identity(nh, field);
    let id_a = Mat::identity(na, field);
    let mut report = CheckReport::new();

    // 1_H · x = x
    let lhs = action.act.matmul(&h.unit_col().kron(&id_a)?)?;
    cmp_mats(&mut report, "action_unital", &lhs, &id_a, &[na]);

    // h · (xy) = (h_1 · x)(h_2 · y)
    let lhs = action.act.matmul(&id_h.kron(&a.alg.mult)?)?;
    let spread = h.coalg.comult.kron(&Mat::identity(na * na, field))?;
    let shuffle = id_h.kron(&twist(nh, na, field).kron(&id_a)?)?;
    let rhs = a.alg.mult.matmul(
        &action
            .act
            .kron(&action.act)?
            .matmul(&shuffle.matmul(&spread)?)?,
    )?;
    cmp_mats(
        &mut report,
        "action_multiplicative",
        &lhs,
        &rhs,
        &[nh, na, na],
    );

    // h · (k · x) = hk · x
    let lhs = action.act.matmul(&id_h.kron(&action.act)?)?;
    let rhs = action.act.matmul(&h.alg.mult.kron(&id_a)?)?;
    cmp_mats(&mut report, "action_associative", &lhs, &rhs, &[nh, nh, na]);

    // h · 1_A = ε_t(h) · 1_A
    let lhs = action.act.matmul(&id_h.kron(&a.unit_col())?)?;
    let rhs = action.act.matmul(&h.eps_t_mat()?.kron(&a.unit_col())?)?;
    cmp_mats(&mut report, "action_weak_unit", &lhs, &rhs, &[nh]);

    // For t in the image of ε_t: (t · x) y = t · (xy);
    // for s in the image of ε_s: x (s · y) = s · (xy).
    let target_basis = h.eps_t_mat()?.image_basis()?;
    for col in 0..target_basis.cols() {
        let t = target_basis.column(col);
        for i in 0..na {
            for j in 0..na {
                let x = a.basis_vec(i);
                let y = a.basis_vec(j);
                let lhs = a.mult_vec(&action.act_vec(&t, &x)?, &y)?;
                let rhs = action.act_vec(&t, &a.mult_vec(&x, &y)?)?;
                report.expect_eq_vec("target_element_distributes", &[col, i, j], &lhs, &rhs);
            }
        }
    }
    let source_basis = h.eps_s_mat()?.image_basis()?;
    for col in 0..source_basis.cols() {
        let s = source_basis.column(col);
        for i in 0..na {
            for j in 0..na {
                let x = a.basis_vec(i);
                let y = a.basis_vec(j);
                let lhs = a.mult_vec(&x, &action.act_vec(&s, &y)?)?;
                let rhs = action.act_vec(&s, &a.mult_vec(&x, &y)?)?;
                report.expect_eq_vec("source_element_distributes", &[col, i, j], &lhs, &rhs);
            }
        }
    }

    Ok(report)
}

/// Builds the scalar action h·x = λ(h)x after validating the three
/// conditions on λ: λ(1) = 1, λ = (λ⊗λ)∘Δ, and multiplicativity.
pub fn make_lambda_action(
    h: &WeakBialgebra,
    a: &WeakBialgebra,
    lambda: &[Scalar],
) -> Result<ActionData> {
    if lambda.len() != h.dim() {
        return Err(Error::DimensionMismatch("lambda length".into()));
    }
    let field = h.field();
    if lambda.iter().any(|c| c.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let lam = Mat::row_vec(field, lambda);

    let on_unit = lam.apply(&h.unit_vec())?;
    if !on_unit[0].is_one() {
        return Err(Error::InvalidLambda(format!(
            "lambda(1_H) = {} instead of 1",
            on_unit[0]
        )));
    }
    let split = lam.kron(&lam)?.matmul(&h.coalg.comult)?;
    if split != lam {
        return Err(Error::InvalidLambda(
            "lambda(h) != lambda(h_1) lambda(h_2)".into(),
        ));
    }
    let on_products = lam.matmul(&h.alg.mult)?;
    if on_products != lam.kron(&lam)? {
        return Err(Error::InvalidLambda(
            "lambda(hk) != lambda(h) lambda(k)".into(),
        ));
    }

    let act = lam.kron(&Mat::identity(a.dim(), field))?;
    let action = ActionData::new(h.clone(), a.clone(), act)?;
    let report = check_module_algebra(&action)?;
    if !report.all_pass() {
        return Err(Error::InvalidStructure(
            "accepted lambda fails the module-algebra axioms".into(),
        ));
    }
    Ok(action)
}

/// Checks the four comodule-coalgebra conditions.
pub fn check_comodule_coalgebra(co: &CoactionData) -> Result<CheckReport> {
    let h = &co.h;
    let a = &co.a;
    let nh = h.dim();
    let na = a.dim();
    let field = h.field();
    let id_h = Mat::identity(nh, field);
    let id_a = Mat::identity(na, field);
    let mut report = CheckReport::new();

    // ε_A(h¹) h⁰ = h
    let lhs = id_h.kron(&a.counit_row())?.matmul(&co.coact)?;
    cmp_mats(&mut report, "coaction_counital", &lhs, &id_h, &[nh]);

    // h⁰_1 ⊗ h⁰_2 ⊗ h¹ = h_1⁰ ⊗ h_2⁰ ⊗ h_1¹ h_2¹
    let lhs = h.coalg.comult.kron(&id_a)?.matmul(&co.coact)?;
    let pair = co.coact.kron(&co.coact)?.matmul(&h.coalg.comult)?;
    let shuffle = id_h.kron(&twist(na, nh, field).kron(&id_a)?)?;
    let rhs = Mat::identity(nh * nh, field)
        .kron(&a.alg.mult)?
        .matmul(&shuffle.matmul(&pair)?)?;
    cmp_mats(&mut report, "coaction_comultiplicative", &lhs, &rhs, &[nh]);

    // h⁰⁰ ⊗ h⁰¹ ⊗ h¹ = h⁰ ⊗ h¹_1 ⊗ h¹_2
    let lhs = co.coact.kron(&id_a)?.matmul(&co.coact)?;
    let rhs = id_h.kron(&a.coalg.comult)?.matmul(&co.coact)?;
    cmp_mats(&mut report, "coaction_coassociative", &lhs, &rhs, &[nh]);

    // h¹ ε(h⁰) = ε_s(h¹) ε(h⁰)
    let lhs = h.counit_row().kron(&id_a)?.matmul(&co.coact)?;
    let rhs = h.counit_row().kron(&a.eps_s_mat()?)?.matmul(&co.coact)?;
    cmp_mats(&mut report, "coaction_weak_counit", &lhs, &rhs, &[nh]);

    Ok(report)
}

/// Builds the scalar coaction ρ(h) = h ⊗ z after validating the three
/// conditions on z: ε(z) = 1, z² = z, Δ(z) = z ⊗ z.
pub fn make_z_coaction(h: &WeakBialgebra, a: &WeakBialgebra, z: &[Scalar]) -> Result<CoactionData> {
    if z.len() != a.dim() {
        return Err(Error::DimensionMismatch("z length".into()));
    }
    let field = a.field();
    if z.iter().any(|c| c.field() != field) {
        return Err(Error::FieldMismatch);
    }
    let eps_z = a.counit_of(z)?;
    if !eps_z.is_one() {
        return Err(Error::InvalidZ(format!("counit(z) = {eps_z} instead of 1")));
    }
    if a.mult_vec(z, z)? != z {
        return Err(Error::InvalidZ("z is not idempotent".into()));
    }
    if a.comult_vec(z)? != tensor(z, z)? {
        return Err(Error::InvalidZ("z is not group-like".into()));
    }

    let coact = Mat::identity(h.dim(), field).kron(&Mat::col_vec(field, z))?;
    let co = CoactionData::new(h.clone(), a.clone(), coact)?;
    let report = check_comodule_coalgebra(&co)?;
    if !report.all_pass() {
        return Err(Error::InvalidStructure(
            "accepted z fails the comodule-coalgebra axioms".into(),
        ));
    }
    Ok(co)
}

/// H acting on itself by its own multiplication.
pub fn mult_action(h: &WeakBialgebra) -> Result<ActionData> {
    ActionData::new(h.clone(), h.clone(), h.alg.mult.clone())
}

/// H coacting on itself by its own comultiplication.
pub fn comult_coaction(h: &WeakBialgebra) -> Result<CoactionData> {
    CoactionData::new(h.clone(), h.clone(), h.coalg.comult.clone())
}

/// The trivial Hopf-pair action h·x = ε(h)x.
pub fn trivial_action(h: &WeakBialgebra, a: &WeakBialgebra) -> Result<ActionData> {
    let act = h.counit_row().kron(&Mat::identity(a.dim(), a.field()))?;
    ActionData::new(h.clone(), a.clone(), act)
}

/// The trivial Hopf-pair coaction ρ(h) = h ⊗ 1_A.
pub fn trivial_coaction(h: &WeakBialgebra, a: &WeakBialgebra) -> Result<CoactionData> {
    let coact = Mat::identity(h.dim(), h.field()).kron(&a.unit_col())?;
    CoactionData::new(h.clone(), a.clone(), coact)
}

/// A right action of `actor` on the algebra `module` (module ⊗ actor →
/// module). This is the shape dualization produces.
#[derive(Debug, Clone)]
pub struct RightActionData {
    pub module: WeakBialgebra,
    pub actor: WeakBialgebra,
    pub act: Mat,
}

/// A left coaction of `coactor` on the coalgebra `coacted`
/// (coacted → coactor ⊗ coacted).
#[derive(Debug, Clone)]
pub struct LeftCoactionData {
    pub coacted: WeakBialgebra,
    pub coactor: WeakBialgebra,
    pub coact: Mat,
}

/// Dual of a coaction ρ: H → H⊗A: the right action of A* on H* given by
/// (φ ↼ f)(h) = f(h¹) φ(h⁰). On the dual bases this is exactly the
/// transposed coaction matrix.
pub fn dual_action_from_coaction(co: &CoactionData) -> Result<RightActionData> {
    Ok(RightActionData {
        module: build_dual(&co.h)?,
        actor: build_dual(&co.a)?,
        act: co.coact.transpose(),
    })
}

/// Dual of an action ·: H⊗A → A: the left coaction of H* on A* given by
/// ρ(f) = Σ_i h_i* ⊗ (f ↼ ĥ_i) over the dual basis, i.e. the transposed
/// action matrix.
pub fn dual_coaction_from_action(action: &ActionData) -> Result<LeftCoactionData> {
    Ok(LeftCoactionData {
        coacted: build_dual(&action.a)?,
        coactor: build_dual(&action.h)?,
        coact: action.act.transpose(),
    })
}

/// Right-module-algebra axioms, realized by dualizing back to a coaction
/// and running the comodule-coalgebra checker. Transposing twice is the
/// identity, so this is the axiom set the duality proposition asserts.
pub fn check_right_module_algebra(r: &RightActionData) -> Result<CheckReport> {
    let co = CoactionData::new(
        build_dual(&r.module)?,
        build_dual(&r.actor)?,
        r.act.transpose(),
    )?;
    check_comodule_coalgebra(&co)
}

/// Left-comodule-coalgebra axioms via dualization to a left action.
pub fn check_left_comodule_coalgebra(l: &LeftCoactionData) -> Result<CheckReport> {
    let action = ActionData::new(
        build_dual(&l.coactor)?,
        build_dual(&l.coacted)?,
        l.coact.transpose(),
    )?;
    check_module_algebra(&action)
}

/// Extends an action of a Hopf algebra H on A to the unit-adjoined pair
/// (H', A'): the new unit of H' acts as the identity on all of A', and
/// old elements act on the new unit of A' through the counit.
pub fn kaplansky_extend_action(
    h_prime: &WeakBialgebra,
    a_prime: &WeakBialgebra,
    base: &ActionData,
) -> Result<ActionData> {
    let nh = base.h.dim();
    let na = base.a.dim();
    if h_prime.dim() != nh + 1 || a_prime.dim() != na + 1 {
        return Err(Error::DimensionMismatch(
            "extension expects one adjoined basis element on each side".into(),
        ));
    }
    let field = h_prime.field();
    let nhp = nh + 1;
    let nap = na + 1;
    let mut act = Mat::zeros(nap, nhp * nap, field);
    for i in 0..nh {
        for j in 0..na {
            for k in 0..na {
                let c = base.act.at(k, i * na + j);
                if !c.is_zero() {
                    act.set(k, i * nap + j, c.clone());
                }
            }
        }
        // h · new_unit_A = ε(h) new_unit_A
        let eps = base.h.coalg.counit[i].clone();
        if !eps.is_zero() {
            act.set(na, i * nap + na, eps);
        }
    }
    // new_unit_H · x = x
    for j in 0..nap {
        act.set(j, nh * nap + j, field.one());
    }
    ActionData::new(h_prime.clone(), a_prime.clone(), act)
}

/// Extends a coaction ρ: H → H⊗A of a Hopf pair to (H', A') with
/// ρ(new) = (new_H − e_H) ⊗ (new_A − e_A) + e_H ⊗ e_A.
pub fn kaplansky_extend_coaction(
    h_prime: &WeakBialgebra,
    a_prime: &WeakBialgebra,
    base: &CoactionData,
) -> Result<CoactionData> {
    let nh = base.h.dim();
    let na = base.a.dim();
    if h_prime.dim() != nh + 1 || a_prime.dim() != na + 1 {
        return Err(Error::DimensionMismatch(
            "extension expects one adjoined basis element on each side".into(),
        ));
    }
    let field = h_prime.field();
    let nhp = nh + 1;
    let nap = na + 1;
    let mut coact = Mat::zeros(nhp * nap, nhp, field);
    for i in 0..nh {
        for (flat, c) in base.coact.column(i).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, q) = split_index(flat, na);
            coact.set(p * nap + q, i, c.clone());
        }
    }
    let mut eh = vec![field.zero(); nhp];
    for (i, c) in base.h.alg.unit.iter().enumerate() {
        eh[i] = c.clone();
    }
    let mut ea = vec![field.zero(); nap];
    for (i, c) in base.a.alg.unit.iter().enumerate() {
        ea[i] = c.clone();
    }
    let mut new_h: Vec<Scalar> = eh.iter().map(Scalar::neg).collect();
    new_h[nh] = field.one();
    let mut new_a: Vec<Scalar> = ea.iter().map(Scalar::neg).collect();
    new_a[na] = field.one();
    let part1 = tensor(&new_h, &new_a)?;
    let part2 = tensor(&eh, &ea)?;
    for (flat, v) in part1.iter().enumerate() {
        let total = v.add(&part2[flat])?;
        if !total.is_zero() {
            coact.set(flat, nh, total);
        }
    }
    CoactionData::new(h_prime.clone(), a_prime.clone(), coact)
}
