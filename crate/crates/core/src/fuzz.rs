//! Seeded corruption of valid structures. Every corruption targets the
//! support of a named axiom, so a corrupted instance provably fails at
//! least one check; a trial where every check still passes is a bug in
//! the checkers, and the driver reports it as such.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{WeakBialgebra, WeakHopfAlgebra};
use crate::error::{Error, Result};
use crate::interact::{check_module_algebra, make_lambda_action, ActionData};
use crate::json::recipe;
use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};
use crate::validate::{check_weak_bialgebra, verify_antipode};

/// The structures the corruption trials draw from.
pub fn instance_pool() -> Vec<(String, FieldSpec)> {
    let f5 = FieldSpec::prime_field(5).expect("5 is prime");
    let f7 = FieldSpec::prime_field(7).expect("7 is prime");
    let q = FieldSpec::Rationals;
    vec![
        ("hg:C2".into(), q),
        ("hg:C3".into(), q),
        ("hg:C4".into(), q),
        ("hg:C2xC2".into(), q),
        ("groupoid:C2,C3".into(), q),
        ("groupoid:C2".into(), q),
        ("kaplansky:groupoid:C2".into(), q),
        ("union:hg:C2|groupoid:C2".into(), q),
        ("dual:hg:C2xC2".into(), q),
        ("hg:C2xC2".into(), f5),
        ("groupoid:C2,C3".into(), f7),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorruptionKind {
    MultOnUnitSupport,
    ComultOnCounitSupport,
    AntipodeScale,
    CounitEntry,
    UnitEntry,
}

impl CorruptionKind {
    pub fn name(&self) -> &'static str {
        match self {
            CorruptionKind::MultOnUnitSupport => "mult_on_unit_support",
            CorruptionKind::ComultOnCounitSupport => "comult_on_counit_support",
            CorruptionKind::AntipodeScale => "antipode_scale",
            CorruptionKind::CounitEntry => "counit_entry",
            CorruptionKind::UnitEntry => "unit_entry",
        }
    }
}

const ALL_KINDS: [CorruptionKind; 5] = [
    CorruptionKind::MultOnUnitSupport,
    CorruptionKind::ComultOnCounitSupport,
    CorruptionKind::AntipodeScale,
    CorruptionKind::CounitEntry,
    CorruptionKind::UnitEntry,
];

#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub instance: String,
    pub kind: CorruptionKind,
    pub failing_checks: Vec<String>,
    pub first_witness: Option<Vec<usize>>,
}

impl TrialOutcome {
    pub fn detected(&self) -> bool {
        !self.failing_checks.is_empty()
    }
}

fn nonzero_delta(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    loop {
        let n = rng.gen_range(-3i64..=3);
        if n != 0 {
            let s = Scalar::from_i64(n, field);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

/// Applies one support-targeted corruption; the returned structure is
/// guaranteed to violate the named axiom.
pub fn corrupt(
    wh: &WeakHopfAlgebra,
    kind: CorruptionKind,
    rng: &mut ChaCha8Rng,
) -> Result<WeakHopfAlgebra> {
    let mut out = wh.clone();
    let n = wh.dim();
    let field = wh.field();
    let wb = &wh.wb;
    let delta = nonzero_delta(rng, field);
    match kind {
        CorruptionKind::MultOnUnitSupport => {
            // bump c[u][i][k] with unit_u ≠ 0: breaks 1·e_i = e_i
            let unit_support: Vec<usize> = (0..n).filter(|&u| !wb.alg.unit[u].is_zero()).collect();
            let u = unit_support[rng.gen_range(0..unit_support.len())];
            let i = rng.gen_range(0..n);
            let k = rng.gen_range(0..n);
            let cur = out.wb.alg.mult.at(k, u * n + i).add(&delta)?;
            out.wb.alg.mult.set(k, u * n + i, cur);
        }
        CorruptionKind::ComultOnCounitSupport => {
            // bump d[i][j][k] with ε(e_j) ≠ 0: breaks (ε⊗id)Δ(e_i) = e_i
            let eps_support: Vec<usize> =
                (0..n).filter(|&j| !wb.coalg.counit[j].is_zero()).collect();
            let j = eps_support[rng.gen_range(0..eps_support.len())];
            let i = rng.gen_range(0..n);
            let k = rng.gen_range(0..n);
            let cur = out.wb.coalg.comult.at(j * n + k, i).add(&delta)?;
            out.wb.coalg.comult.set(j * n + k, i, cur);
        }
        CorruptionKind::AntipodeScale => {
            // scale S by c ∉ {0, 1}: the target axiom fails wherever
            // ε_t(e_h) ≠ 0, and ε_t never vanishes identically
            let mut factor = delta;
            if factor.is_one() {
                factor = Scalar::from_i64(2, field);
            }
            out.antipode = out.antipode.scale(&factor)?;
        }
        CorruptionKind::CounitEntry => {
            // bump ε at an index in the support of some first coproduct
            // leg: breaks counitality for that basis element
            let mut candidates = Vec::new();
            for a in 0..n {
                for j in 0..n {
                    if (0..n).any(|k| !wb.coalg.comult.at(j * n + k, a).is_zero()) {
                        candidates.push(j);
                    }
                }
            }
            let j = candidates[rng.gen_range(0..candidates.len())];
            out.wb.coalg.counit[j] = out.wb.coalg.counit[j].add(&delta)?;
        }
        CorruptionKind::UnitEntry => {
            // bump the unit at j, where some e_j · e_i ≠ 0 (always true:
            // e_j · 1 = e_j): breaks right unitality at that i
            let j = rng.gen_range(0..n);
            out.wb.alg.unit[j] = out.wb.alg.unit[j].add(&delta)?;
        }
    }
    Ok(out)
}

/// Runs the full validator battery on a corrupted instance and collects
/// the failing check ids.
pub fn run_validators(wh: &WeakHopfAlgebra) -> Result<TrialOutcome> {
    let mut failing = Vec::new();
    let mut witness = None;
    let bialg = check_weak_bialgebra(&wh.wb)?;
    let anti = verify_antipode(&wh.wb, &wh.antipode)?;
    for item in bialg.items.iter().chain(anti.items.iter()) {
        if !item.pass {
            if witness.is_none() {
                witness = item.witness.clone();
            }
            failing.push(item.id.clone());
        }
    }
    Ok(TrialOutcome {
        instance: String::new(),
        kind: CorruptionKind::UnitEntry,
        failing_checks: failing,
        first_witness: witness,
    })
}

/// Seeded corruption trials over the instance pool. Every outcome must
/// report at least one failing check; `false_passes` counts the ones that
/// did not (always zero unless a checker regresses).
pub struct FuzzReport {
    pub outcomes: Vec<TrialOutcome>,
    pub false_passes: usize,
    pub lambda_trials: usize,
    pub lambda_rejected: usize,
    pub lambda_inconsistencies: usize,
}

pub fn run_corruption_trials(seed: u64, trials: usize) -> Result<FuzzReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = instance_pool();
    let built: Vec<(String, WeakHopfAlgebra)> = pool
        .iter()
        .map(|(spec, field)| Ok((format!("{spec} over {field}"), recipe(spec, *field)?)))
        .collect::<Result<_>>()?;

    let mut outcomes = Vec::with_capacity(trials);
    let mut false_passes = 0;
    for _ in 0..trials {
        let (name, wh) = &built[rng.gen_range(0..built.len())];
        let kind = ALL_KINDS[rng.gen_range(0..ALL_KINDS.len())];
        let corrupted = corrupt(wh, kind, &mut rng)?;
        let mut outcome = run_validators(&corrupted)?;
        outcome.instance = name.clone();
        outcome.kind = kind;
        if !outcome.detected() {
            false_passes += 1;
        }
        outcomes.push(outcome);
    }

    // Rejection-path fuzzing for the scalar action family: a random λ is
    // either accepted (and then the module-algebra axioms must hold) or
    // rejected (and forcing it through must fail the checker).
    let mut lambda_trials = 0;
    let mut lambda_rejected = 0;
    let mut lambda_inconsistencies = 0;
    let h = recipe("groupoid:C2,C3", FieldSpec::Rationals)?.wb;
    for _ in 0..trials.min(64) {
        lambda_trials += 1;
        let lambda: Vec<Scalar> = (0..h.dim())
            .map(|_| Scalar::from_i64(rng.gen_range(-2i64..=2), FieldSpec::Rationals))
            .collect();
        match make_lambda_action(&h, &h, &lambda) {
            Ok(action) => {
                if !check_module_algebra(&action)?.all_pass() {
                    lambda_inconsistencies += 1;
                }
            }
            Err(Error::InvalidLambda(_)) => {
                lambda_rejected += 1;
                let forced = forced_lambda_action(&h, &lambda)?;
                if check_module_algebra(&forced)?.all_pass() {
                    lambda_inconsistencies += 1;
                }
            }
            Err(e) => return Err(e),
        }
    }

    Ok(FuzzReport {
        outcomes,
        false_passes,
        lambda_trials,
        lambda_rejected,
        lambda_inconsistencies,
    })
}

/// Builds the scalar action matrix without validating λ, for exercising
/// the negative path of the module-algebra checker.
pub fn forced_lambda_action(h: &WeakBialgebra, lambda: &[Scalar]) -> Result<ActionData> {
    let lam = Mat::row_vec(h.field(), lambda);
    let act = lam.kron(&Mat::identity(h.dim(), h.field()))?;
    ActionData::new(h.clone(), h.clone(), act)
}
