//! Axiom validation for weak bialgebras and weak Hopf algebras: the
//! defining conditions, the derived identity suite, antipode verification
//! and solving, and the criterion for being an ordinary Hopf algebra.

use crate::algebra::{WeakBialgebra, WeakHopfAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{split_index, twist, Mat};
use crate::report::{CheckItem, CheckReport};
use crate::scalar::Scalar;

fn mat_from_cols(rows: usize, wb: &WeakBialgebra, cols: Vec<Vec<Scalar>>) -> Mat {
    Mat::from_fn(rows, cols.len(), wb.field(), |r, c| cols[c][r].clone())
}

pub(crate) use crate::report::cmp_mats;

/// (ε⊗id) applied to a vector in H⊗H.
pub fn contract_counit_left(wb: &WeakBialgebra, u: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = wb.dim();
    let mut out = vec![wb.field().zero(); n];
    for (flat, c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (j, k) = split_index(flat, n);
        out[k] = out[k].fma(c, &wb.coalg.counit[j])?;
    }
    Ok(out)
}

/// (id⊗ε) applied to a vector in H⊗H.
pub fn contract_counit_right(wb: &WeakBialgebra, u: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = wb.dim();
    let mut out = vec![wb.field().zero(); n];
    for (flat, c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (j, k) = split_index(flat, n);
        out[j] = out[j].fma(c, &wb.coalg.counit[k])?;
    }
    Ok(out)
}

/// Checks the algebra and coalgebra axioms plus the three defining weak
/// bialgebra conditions, all as exact equalities on basis tuples.
pub fn check_weak_bialgebra(wb: &WeakBialgebra) -> Result<CheckReport> {
    let n = wb.dim();
    let mut report = CheckReport::new();

    // Associativity on basis triples, for pointable witnesses.
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(j))?;
            for k in 0..n {
                let lhs = wb.mult_vec(&ij, &wb.basis_vec(k))?;
                let jk = wb.mult_vec(&wb.basis_vec(j), &wb.basis_vec(k))?;
                let rhs = wb.mult_vec(&wb.basis_vec(i), &jk)?;
                if lhs != rhs {
                    let diff: Vec<Scalar> = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(a, b)| a.sub(b))
                        .collect::<Result<_>>()?;
                    report.push(CheckItem::fail("algebra_associative", vec![i, j, k], diff));
                    break 'assoc;
                }
            }
        }
    }
    if report.get("algebra_associative").is_none() {
        report.push(CheckItem::pass("algebra_associative"));
    }

    for i in 0..n {
        let e = wb.basis_vec(i);
        let left = wb.mult_vec(&wb.unit_vec(), &e)?;
        let right = wb.mult_vec(&e, &wb.unit_vec())?;
        report.expect_eq_vec("algebra_unital_left", &[i], &left, &e);
        report.expect_eq_vec("algebra_unital_right", &[i], &right, &e);
    }

    for i in 0..n {
        let e = wb.basis_vec(i);
        let d = wb.comult_vec(&e)?;
        // (Δ⊗id)Δ vs (id⊗Δ)Δ
        let mut lhs = vec![wb.field().zero(); n * n * n];
        let mut rhs = vec![wb.field().zero(); n * n * n];
        for (flat, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = split_index(flat, n);
            let da = wb.comult_vec(&wb.basis_vec(a))?;
            for (f2, c2) in da.iter().enumerate() {
                if !c2.is_zero() {
                    lhs[f2 * n + b] = lhs[f2 * n + b].fma(c, c2)?;
                }
            }
            let db = wb.comult_vec(&wb.basis_vec(b))?;
            for (f2, c2) in db.iter().enumerate() {
                if !c2.is_zero() {
                    rhs[a * n * n + f2] = rhs[a * n * n + f2].fma(c, c2)?;
                }
            }
        }
        report.expect_eq_vec("coalgebra_coassociative", &[i], &lhs, &rhs);

        let l = contract_counit_left(wb, &d)?;
        let r = contract_counit_right(wb, &d)?;
        report.expect_eq_vec("coalgebra_counital_left", &[i], &l, &e);
        report.expect_eq_vec("coalgebra_counital_right", &[i], &r, &e);
    }

    // Δ(hk) = Δ(h)Δ(k) on basis pairs.
    for i in 0..n {
        let di = wb.comult_vec(&wb.basis_vec(i))?;
        for j in 0..n {
            let prod = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(j))?;
            let lhs = wb.comult_vec(&prod)?;
            let dj = wb.comult_vec(&wb.basis_vec(j))?;
            let rhs = wb.tensor2_mult(&di, &dj)?;
            report.expect_eq_vec("coproduct_multiplicative", &[i, j], &lhs, &rhs);
        }
    }

    // ε(hkl) = ε(hk_1)ε(k_2 l) = ε(hk_2)ε(k_1 l) on basis triples.
    for j in 0..n {
        let dj = wb.comult_vec(&wb.basis_vec(j))?;
        for i in 0..n {
            for l in 0..n {
                let hk = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(j))?;
                let hkl = wb.mult_vec(&hk, &wb.basis_vec(l))?;
                let full = wb.counit_of(&hkl)?;
                let mut split_a = wb.field().zero();
                let mut split_b = wb.field().zero();
                for (flat, c) in dj.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (k1, k2) = split_index(flat, n);
                    let hk1 = wb.counit_of(&wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(k1))?)?;
                    let k2l = wb.counit_of(&wb.mult_vec(&wb.basis_vec(k2), &wb.basis_vec(l))?)?;
                    split_a = split_a.add(&c.mul(&hk1)?.mul(&k2l)?)?;
                    let hk2 = wb.counit_of(&wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(k2))?)?;
                    let k1l = wb.counit_of(&wb.mult_vec(&wb.basis_vec(k1), &wb.basis_vec(l))?)?;
                    split_b = split_b.add(&c.mul(&hk2)?.mul(&k1l)?)?;
                }
                report.expect_eq_vec(
                    "weak_counit_first_split",
                    &[i, j, l],
                    std::slice::from_ref(&full),
                    std::slice::from_ref(&split_a),
                );
                report.expect_eq_vec(
                    "weak_counit_second_split",
                    &[i, j, l],
                    std::slice::from_ref(&full),
                    std::slice::from_ref(&split_b),
                );
            }
        }
    }

    // (1⊗Δ(1))(Δ(1)⊗1) = (Δ(1)⊗1)(1⊗Δ(1)) = Δ²(1).
    let d1 = wb.comult_of_unit()?;
    let one = wb.unit_vec();
    let one_d1 = crate::algebra::tensor(&one, &d1)?;
    let d1_one = crate::algebra::tensor(&d1, &one)?;
    let left = wb.tensor3_mult(&one_d1, &d1_one)?;
    let right = wb.tensor3_mult(&d1_one, &one_d1)?;
    let d2 = wb.comult2_vec(&one)?;
    report.expect_eq_vec("unit_coproduct_left_form", &[], &left, &d2);
    report.expect_eq_vec("unit_coproduct_right_form", &[], &right, &d2);

    Ok(report)
}

fn require_valid(wb: &WeakBialgebra) -> Result<()> {
    if check_weak_bialgebra(wb)?.all_pass() {
        Ok(())
    } else {
        Err(Error::InvalidStructure("weak bialgebra axioms fail".into()))
    }
}

/// Matrix of h ↦ 1_1 h ⊗ 1_2.
fn unit_left_smear(wb: &WeakBialgebra) -> Result<Mat> {
    let n = wb.dim();
    let d1 = wb.comult_of_unit()?;
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut col = vec![wb.field().zero(); n * n];
        for (flat, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = split_index(flat, n);
            let prod = wb.mult_vec(&wb.basis_vec(j), &wb.basis_vec(i))?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    col[r * n + k] = col[r * n + k].fma(c, v)?;
                }
            }
        }
        cols.push(col);
    }
    Ok(mat_from_cols(n * n, wb, cols))
}

/// Matrix of h ↦ 1_1 ⊗ h 1_2.
fn unit_right_smear(wb: &WeakBialgebra) -> Result<Mat> {
    let n = wb.dim();
    let d1 = wb.comult_of_unit()?;
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut col = vec![wb.field().zero(); n * n];
        for (flat, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = split_index(flat, n);
            let prod = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(k))?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    col[j * n + r] = col[j * n + r].fma(c, v)?;
                }
            }
        }
        cols.push(col);
    }
    Ok(mat_from_cols(n * n, wb, cols))
}

/// Matrix of h ↦ h 1_1 ⊗ 1_2.
fn unit_left_smear_prime(wb: &WeakBialgebra) -> Result<Mat> {
    let n = wb.dim();
    let d1 = wb.comult_of_unit()?;
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut col = vec![wb.field().zero(); n * n];
        for (flat, c) in d1.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = split_index(flat, n);
            let prod = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(j))?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    col[r * n + k] = col[r * n + k].fma(c, v)?;
                }
            }
        }
        cols.push(col);
    }
    Ok(mat_from_cols(n * n, wb, cols))
}

/// Runs the derived-identity suite; with an antipode the antipode
/// identities are included. The identities are theorems of the defining
/// axioms, so a failure pinpoints which consequence a corrupted structure
/// breaks; the suite itself does not insist on the axioms first.
pub fn identity_suite(wb: &WeakBialgebra, antipode: Option<&Mat>) -> Result<CheckReport> {
    let n = wb.dim();
    let field = wb.field();
    let mut report = CheckReport::new();

    let et = wb.eps_t_mat()?;
    let es = wb.eps_s_mat()?;
    let esp = wb.eps_s_prime_mat()?;
    let id = Mat::identity(n, field);
    let eps = wb.counit_row();
    let m = &wb.alg.mult;
    let d = &wb.coalg.comult;

    cmp_mats(
        &mut report,
        "target_map_idempotent",
        &et.matmul(&et)?,
        &et,
        &[n],
    );
    cmp_mats(
        &mut report,
        "source_map_idempotent",
        &es.matmul(&es)?,
        &es,
        &[n],
    );
    cmp_mats(
        &mut report,
        "source_prime_map_idempotent",
        &esp.matmul(&esp)?,
        &esp,
        &[n],
    );

    // ε(h ε_t(k)) = ε(hk) and ε(ε_s(h) k) = ε(hk)
    let eps_m = eps.matmul(m)?;
    cmp_mats(
        &mut report,
        "counit_absorbs_target",
        &eps_m.matmul(&id.kron(&et)?)?,
        &eps_m,
        &[n, n],
    );
    cmp_mats(
        &mut report,
        "counit_absorbs_source",
        &eps_m.matmul(&es.kron(&id)?)?,
        &eps_m,
        &[n, n],
    );

    // Δ(1) lies in H_s ⊗ H_t
    let d1 = wb.comult_of_unit()?;
    let projected = es.kron(&et)?.apply(&d1)?;
    report.expect_eq_vec("unit_coproduct_in_source_target", &[], &projected, &d1);

    // h_1 ⊗ ε_t(h_2) = 1_1 h ⊗ 1_2
    let lhs_t = id.kron(&et)?.matmul(d)?;
    let rhs_t = unit_left_smear(wb)?;
    cmp_mats(&mut report, "coproduct_target_form", &lhs_t, &rhs_t, &[n]);

    // ε_s(h_1) ⊗ h_2 = 1_1 ⊗ h 1_2
    let lhs_s = es.kron(&id)?.matmul(d)?;
    let rhs_s = unit_right_smear(wb)?;
    cmp_mats(&mut report, "coproduct_source_form", &lhs_s, &rhs_s, &[n]);

    // h ε_t(k) = ε(h_1 k) h_2
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        let di = wb.comult_vec(&wb.basis_vec(i))?;
        for j in 0..n {
            let mut col = vec![field.zero(); n];
            for (flat, c) in di.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = split_index(flat, n);
                let w = wb.counit_of(&wb.mult_vec(&wb.basis_vec(a), &wb.basis_vec(j))?)?;
                col[b] = col[b].add(&c.mul(&w)?)?;
            }
            cols.push(col);
        }
    }
    let rhs = mat_from_cols(n, wb, cols);
    cmp_mats(
        &mut report,
        "target_product_expansion",
        &m.matmul(&id.kron(&et)?)?,
        &rhs,
        &[n, n],
    );

    // ε_s(h) k = k_1 ε(h k_2)
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let dj = wb.comult_vec(&wb.basis_vec(j))?;
            let mut col = vec![field.zero(); n];
            for (flat, c) in dj.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = split_index(flat, n);
                let w = wb.counit_of(&wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(b))?)?;
                col[a] = col[a].add(&c.mul(&w)?)?;
            }
            cols.push(col);
        }
    }
    let rhs = mat_from_cols(n, wb, cols);
    cmp_mats(
        &mut report,
        "source_product_expansion",
        &m.matmul(&es.kron(&id)?)?,
        &rhs,
        &[n, n],
    );

    // ε_t(ε_t(h) k) = ε_t(h) ε_t(k); ε_s(h ε_s(k)) = ε_s(h) ε_s(k)
    cmp_mats(
        &mut report,
        "target_partial_multiplicativity",
        &et.matmul(&m.matmul(&et.kron(&id)?)?)?,
        &m.matmul(&et.kron(&et)?)?,
        &[n, n],
    );
    cmp_mats(
        &mut report,
        "source_partial_multiplicativity",
        &es.matmul(&m.matmul(&id.kron(&es)?)?)?,
        &m.matmul(&es.kron(&es)?)?,
        &[n, n],
    );

    // h = ε_t(h_1) h_2 and h = h_1 ε_s(h_2)
    cmp_mats(
        &mut report,
        "target_split_recovers_identity",
        &m.matmul(&et.kron(&id)?)?.matmul(d)?,
        &id,
        &[n],
    );
    cmp_mats(
        &mut report,
        "source_split_recovers_identity",
        &m.matmul(&id.kron(&es)?)?.matmul(d)?,
        &id,
        &[n],
    );

    // The two biconditionals about Δ²(1): each side evaluated on its own,
    // then the truth values compared.
    let one = wb.unit_vec();
    let d2 = wb.comult2_vec(&one)?;
    let one_d1 = crate::algebra::tensor(&one, &d1)?;
    let d1_one = crate::algebra::tensor(&d1, &one)?;
    let mixed_left = wb.tensor3_mult(&one_d1, &d1_one)?;
    let mixed_right = wb.tensor3_mult(&d1_one, &one_d1)?;
    let target_side_a = d2 == mixed_left;
    let target_side_b = lhs_t == rhs_t;
    report.expect(
        "unit_coproduct_target_biconditional",
        target_side_a == target_side_b,
    );
    let source_side_a = d2 == mixed_right;
    let lhs_sp = id.kron(&esp)?.matmul(d)?;
    let rhs_sp = unit_left_smear_prime(wb)?;
    cmp_mats(
        &mut report,
        "coproduct_source_prime_form",
        &lhs_sp,
        &rhs_sp,
        &[n],
    );
    let source_side_b = lhs_sp == rhs_sp;
    report.expect(
        "unit_coproduct_source_biconditional",
        source_side_a == source_side_b,
    );

    // Commutativity promotes the counital maps to algebra maps.
    if wb.is_commutative()? {
        cmp_mats(
            &mut report,
            "commutative_target_multiplicative",
            &et.matmul(m)?,
            &m.matmul(&et.kron(&et)?)?,
            &[n, n],
        );
        cmp_mats(
            &mut report,
            "commutative_source_multiplicative",
            &es.matmul(m)?,
            &m.matmul(&es.kron(&es)?)?,
            &[n, n],
        );
    }

    if let Some(s) = antipode {
        cmp_mats(
            &mut report,
            "target_of_antipode",
            &et.matmul(s)?,
            &et.matmul(&es)?,
            &[n],
        );
        cmp_mats(
            &mut report,
            "antipode_of_source",
            &et.matmul(&es)?,
            &s.matmul(&es)?,
            &[n],
        );
        cmp_mats(
            &mut report,
            "source_of_antipode",
            &es.matmul(s)?,
            &es.matmul(&et)?,
            &[n],
        );
        cmp_mats(
            &mut report,
            "antipode_of_target",
            &es.matmul(&et)?,
            &s.matmul(&et)?,
            &[n],
        );

        // h_1 ⊗ S(h_2) h_3 = h 1_1 ⊗ S(1_2)
        let mut lhs_cols = Vec::with_capacity(n);
        let mut rhs_cols = Vec::with_capacity(n);
        for i in 0..n {
            let d2i = wb.comult2_vec(&wb.basis_vec(i))?;
            let mut col = vec![field.zero(); n * n];
            for (flat, c) in d2i.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, rest) = (flat / (n * n), flat % (n * n));
                let (b, cc) = split_index(rest, n);
                let sb = s.apply(&wb.basis_vec(b))?;
                let prod = wb.mult_vec(&sb, &wb.basis_vec(cc))?;
                for (r, v) in prod.iter().enumerate() {
                    if !v.is_zero() {
                        col[a * n + r] = col[a * n + r].fma(c, v)?;
                    }
                }
            }
            lhs_cols.push(col);

            let mut col = vec![field.zero(); n * n];
            for (flat, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = split_index(flat, n);
                let prod = wb.mult_vec(&wb.basis_vec(i), &wb.basis_vec(j))?;
                let sk = s.apply(&wb.basis_vec(k))?;
                for (r, v) in prod.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (r2, v2) in sk.iter().enumerate() {
                        if !v2.is_zero() {
                            col[r * n + r2] = col[r * n + r2].add(&c.mul(v)?.mul(v2)?)?;
                        }
                    }
                }
            }
            rhs_cols.push(col);
        }
        cmp_mats(
            &mut report,
            "antipode_right_smear",
            &mat_from_cols(n * n, wb, lhs_cols),
            &mat_from_cols(n * n, wb, rhs_cols),
            &[n],
        );

        // h_1 S(h_2) ⊗ h_3 = S(1_1) ⊗ 1_2 h
        let mut lhs_cols = Vec::with_capacity(n);
        let mut rhs_cols = Vec::with_capacity(n);
        for i in 0..n {
            let d2i = wb.comult2_vec(&wb.basis_vec(i))?;
            let mut col = vec![field.zero(); n * n];
            for (flat, c) in d2i.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, rest) = (flat / (n * n), flat % (n * n));
                let (b, cc) = split_index(rest, n);
                let sb = s.apply(&wb.basis_vec(b))?;
                let prod = wb.mult_vec(&wb.basis_vec(a), &sb)?;
                for (r, v) in prod.iter().enumerate() {
                    if !v.is_zero() {
                        col[r * n + cc] = col[r * n + cc].fma(c, v)?;
                    }
                }
            }
            lhs_cols.push(col);

            let mut col = vec![field.zero(); n * n];
            for (flat, c) in d1.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (j, k) = split_index(flat, n);
                let sj = s.apply(&wb.basis_vec(j))?;
                let prod = wb.mult_vec(&wb.basis_vec(k), &wb.basis_vec(i))?;
                for (r, v) in sj.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (r2, v2) in prod.iter().enumerate() {
                        if !v2.is_zero() {
                            col[r * n + r2] = col[r * n + r2].add(&c.mul(v)?.mul(v2)?)?;
                        }
                    }
                }
            }
            rhs_cols.push(col);
        }
        cmp_mats(
            &mut report,
            "antipode_left_smear",
            &mat_from_cols(n * n, wb, lhs_cols),
            &mat_from_cols(n * n, wb, rhs_cols),
            &[n],
        );

        // S(hk) = S(k)S(h) and Δ(S(h)) = S(h_2) ⊗ S(h_1)
        let tw = twist(n, n, field);
        cmp_mats(
            &mut report,
            "antipode_antimultiplicative",
            &s.matmul(m)?,
            &m.matmul(&s.kron(s)?.matmul(&tw)?)?,
            &[n, n],
        );
        cmp_mats(
            &mut report,
            "antipode_anticomultiplicative",
            &d.matmul(s)?,
            &s.kron(s)?.matmul(&tw.matmul(d)?)?,
            &[n],
        );
    }

    Ok(report)
}

/// Verifies the three antipode axioms on every basis element.
pub fn verify_antipode(wb: &WeakBialgebra, s: &Mat) -> Result<CheckReport> {
    let n = wb.dim();
    if s.rows() != n || s.cols() != n {
        return Err(Error::DimensionMismatch("antipode shape".into()));
    }
    if s.field() != wb.field() {
        return Err(Error::FieldMismatch);
    }
    let mut report = CheckReport::new();
    let et = wb.eps_t_mat()?;
    let es = wb.eps_s_mat()?;
    for i in 0..n {
        let e = wb.basis_vec(i);
        let d = wb.comult_vec(&e)?;

        let mut conv_right = vec![wb.field().zero(); n];
        let mut conv_left = vec![wb.field().zero(); n];
        for (flat, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = split_index(flat, n);
            let sb = s.apply(&wb.basis_vec(b))?;
            let prod = wb.mult_vec(&wb.basis_vec(a), &sb)?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    conv_right[r] = conv_right[r].fma(c, v)?;
                }
            }
            let sa = s.apply(&wb.basis_vec(a))?;
            let prod = wb.mult_vec(&sa, &wb.basis_vec(b))?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    conv_left[r] = conv_left[r].fma(c, v)?;
                }
            }
        }
        report.expect_eq_vec("antipode_target_axiom", &[i], &conv_right, &et.column(i));
        report.expect_eq_vec("antipode_source_axiom", &[i], &conv_left, &es.column(i));

        // S(h_1) h_2 S(h_3) = S(h)
        let d2 = wb.comult2_vec(&e)?;
        let mut triple = vec![wb.field().zero(); n];
        for (flat, c) in d2.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, rest) = (flat / (n * n), flat % (n * n));
            let (b, cc) = split_index(rest, n);
            let sa = s.apply(&wb.basis_vec(a))?;
            let sc = s.apply(&wb.basis_vec(cc))?;
            let prod = wb.mult_vec(&wb.mult_vec(&sa, &wb.basis_vec(b))?, &sc)?;
            for (r, v) in prod.iter().enumerate() {
                if !v.is_zero() {
                    triple[r] = triple[r].fma(c, v)?;
                }
            }
        }
        report.expect_eq_vec("antipode_triple_axiom", &[i], &triple, &s.column(i));
    }
    Ok(report)
}

/// Solves for an antipode as a linear system over the dim² unknown matrix
/// entries. The system stacks the two convolution axioms together with the
/// linear composition identities every antipode satisfies
/// (ε_t∘S = ε_t∘ε_s = S∘ε_s and ε_s∘S = ε_s∘ε_t = S∘ε_t); the extra rows
/// never exclude a valid antipode but can cut an otherwise ambiguous
/// solution set down to a point. The cubic third axiom is verified on the
/// unique solution.
pub fn solve_antipode(wb: &WeakBialgebra) -> Result<Mat> {
    require_valid(wb)?;
    let n = wb.dim();
    let field = wb.field();
    let et = wb.eps_t_mat()?;
    let es = wb.eps_s_mat()?;
    let et_es = et.matmul(&es)?;
    let es_et = es.matmul(&et)?;

    // Unknown u[c*n + j] = coefficient of e_j in S(e_c).
    let rows = 6 * n * n;
    let cols = n * n;
    let mut sys = Mat::zeros(rows, cols, field);
    let mut rhs = Mat::zeros(rows, 1, field);
    for a in 0..n {
        let da = wb.comult_vec(&wb.basis_vec(a))?;
        for k in 0..n {
            let row_t = a * n + k;
            let row_s = n * n + a * n + k;
            rhs.set(row_t, 0, et.at(k, a).clone());
            rhs.set(row_s, 0, es.at(k, a).clone());
            for (flat, c) in da.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (b, cc) = split_index(flat, n);
                for j in 0..n {
                    // axiom (i): Σ d[a](b,c) m(b, j -> k) u[c,j]
                    let mcoef = wb.alg.mult.at(k, b * n + j);
                    if !mcoef.is_zero() {
                        let cur = sys.at(row_t, cc * n + j).add(&c.mul(mcoef)?)?;
                        sys.set(row_t, cc * n + j, cur);
                    }
                    // axiom (ii): Σ d[a](b,c) m(j, c -> k) u[b,j]
                    let mcoef = wb.alg.mult.at(k, j * n + cc);
                    if !mcoef.is_zero() {
                        let cur = sys.at(row_s, b * n + j).add(&c.mul(mcoef)?)?;
                        sys.set(row_s, b * n + j, cur);
                    }
                }
            }
            // ε_t(S(e_a)) = (ε_t ε_s)(e_a): coefficient et[k][j] on u[a,j]
            let row = 2 * n * n + a * n + k;
            rhs.set(row, 0, et_es.at(k, a).clone());
            for j in 0..n {
                sys.set(row, a * n + j, et.at(k, j).clone());
            }
            // ε_s(S(e_a)) = (ε_s ε_t)(e_a)
            let row = 3 * n * n + a * n + k;
            rhs.set(row, 0, es_et.at(k, a).clone());
            for j in 0..n {
                sys.set(row, a * n + j, es.at(k, j).clone());
            }
            // S(ε_s(e_a)) = (ε_t ε_s)(e_a): coefficient es[i][a] on u[i,k]
            let row = 4 * n * n + a * n + k;
            rhs.set(row, 0, et_es.at(k, a).clone());
            for i in 0..n {
                sys.set(row, i * n + k, es.at(i, a).clone());
            }
            // S(ε_t(e_a)) = (ε_s ε_t)(e_a)
            let row = 5 * n * n + a * n + k;
            rhs.set(row, 0, es_et.at(k, a).clone());
            for i in 0..n {
                sys.set(row, i * n + k, et.at(i, a).clone());
            }
        }
    }

    let kernel = sys.kernel_basis()?;
    if kernel.cols() > 0 {
        // Inconsistency wins over ambiguity as a diagnosis.
        if sys.solve(&rhs)?.is_none() {
            return Err(Error::NoAntipode("linear system inconsistent".into()));
        }
        return Err(Error::Underdetermined(kernel.cols()));
    }
    let sol = match sys.solve(&rhs)? {
        Some(x) => x,
        None => return Err(Error::NoAntipode("linear system inconsistent".into())),
    };
    let mut s = Mat::zeros(n, n, field);
    for c in 0..n {
        for j in 0..n {
            s.set(j, c, sol.at(c * n + j, 0).clone());
        }
    }
    let report = verify_antipode(wb, &s)?;
    if report.all_pass() {
        Ok(s)
    } else {
        Err(Error::NoAntipode(
            "unique linear solution violates the triple axiom".into(),
        ))
    }
}

/// The five equivalent conditions under which a weak Hopf algebra is an
/// ordinary Hopf algebra, each evaluated independently.
#[derive(Debug, Clone)]
pub struct HopfCriterion {
    pub unit_coproduct_trivial: bool,
    pub counit_multiplicative: bool,
    pub right_convolution_scalar: bool,
    pub left_convolution_scalar: bool,
    pub counital_subalgebras_trivial: bool,
}

impl HopfCriterion {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.unit_coproduct_trivial,
            self.counit_multiplicative,
            self.right_convolution_scalar,
            self.left_convolution_scalar,
            self.counital_subalgebras_trivial,
        ]
    }

    pub fn coherent(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }

    pub fn is_hopf(&self) -> bool {
        self.unit_coproduct_trivial
    }
}

pub fn hopf_criterion(wh: &WeakHopfAlgebra) -> Result<HopfCriterion> {
    let wb = &wh.wb;
    let n = wb.dim();
    let field = wb.field();
    let d1 = wb.comult_of_unit()?;
    let one_one = crate::algebra::tensor(&wb.unit_vec(), &wb.unit_vec())?;

    let eps_m = wb.counit_row().matmul(&wb.alg.mult)?;
    let eps_eps = wb.counit_row().kron(&wb.counit_row())?;

    // h_1 S(h_2) = ε(h) 1 and S(h_1) h_2 = ε(h) 1
    let mut right_ok = true;
    let mut left_ok = true;
    for i in 0..n {
        let d = wb.comult_vec(&wb.basis_vec(i))?;
        let mut conv_r = vec![field.zero(); n];
        let mut conv_l = vec![field.zero(); n];
        for (flat, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = split_index(flat, n);
            let sb = wh.antipode.apply(&wb.basis_vec(b))?;
            for (r, v) in wb.mult_vec(&wb.basis_vec(a), &sb)?.iter().enumerate() {
                if !v.is_zero() {
                    conv_r[r] = conv_r[r].fma(c, v)?;
                }
            }
            let sa = wh.antipode.apply(&wb.basis_vec(a))?;
            for (r, v) in wb.mult_vec(&sa, &wb.basis_vec(b))?.iter().enumerate() {
                if !v.is_zero() {
                    conv_l[r] = conv_l[r].fma(c, v)?;
                }
            }
        }
        let eps_h = wb.coalg.counit[i].clone();
        let scalar_unit: Vec<Scalar> = wb
            .unit_vec()
            .iter()
            .map(|u| u.mul(&eps_h))
            .collect::<Result<_>>()?;
        if conv_r != scalar_unit {
            right_ok = false;
        }
        if conv_l != scalar_unit {
            left_ok = false;
        }
    }

    Ok(HopfCriterion {
        unit_coproduct_trivial: d1 == one_one,
        counit_multiplicative: eps_m == eps_eps,
        right_convolution_scalar: right_ok,
        left_convolution_scalar: left_ok,
        counital_subalgebras_trivial: wb.eps_t_mat()?.rank()? == 1 && wb.eps_s_mat()?.rank()? == 1,
    })
}
