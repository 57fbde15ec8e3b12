//! Check reports: one entry per verified identity, with an exact witness
//! on failure.

use crate::linalg::Mat;
use crate::scalar::Scalar;
use std::fmt;

/// Outcome of a single identity check. `witness` holds the basis-index
/// tuple the identity first failed on; `residual` the exact nonzero
/// difference at that point. Both are absent on pass.
#[derive(Debug, Clone)]
pub struct CheckItem {
    pub id: String,
    pub pass: bool,
    pub witness: Option<Vec<usize>>,
    pub residual: Option<Vec<Scalar>>,
}

impl CheckItem {
    pub fn pass(id: impl Into<String>) -> CheckItem {
        CheckItem {
            id: id.into(),
            pass: true,
            witness: None,
            residual: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Vec<usize>, residual: Vec<Scalar>) -> CheckItem {
        CheckItem {
            id: id.into(),
            pass: false,
            witness: Some(witness),
            residual: Some(residual),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// Records `lhs == rhs` for two equal-length coordinate vectors
    /// computed at the basis tuple `witness`.
    pub fn expect_eq_vec(&mut self, id: &str, witness: &[usize], lhs: &[Scalar], rhs: &[Scalar]) {
        // Only the first failure per id is recorded; later tuples are
        // still checked by the caller loop but would duplicate the entry.
        if self.get(id).is_some_and(|item| !item.pass) {
            return;
        }
        let diff: Vec<Scalar> = lhs
            .iter()
            .zip(rhs)
            .map(|(a, b)| a.sub(b).expect("same field"))
            .collect();
        if diff.iter().all(Scalar::is_zero) {
            if self.get(id).is_none() {
                self.push(CheckItem::pass(id));
            }
        } else {
            self.items.retain(|i| i.id != id);
            self.push(CheckItem::fail(id, witness.to_vec(), diff));
        }
    }

    /// Records a plain boolean condition.
    pub fn expect(&mut self, id: &str, ok: bool) {
        if ok {
            self.push(CheckItem::pass(id));
        } else {
            self.push(CheckItem::fail(id, vec![], vec![]));
        }
    }
}

/// Compares two matrices column by column; a failing column index is
/// decoded into a basis tuple via `dims` (row-major, e.g. `[n, n]` for a
/// bilinear identity), and the exact column difference is the residual.
pub(crate) fn cmp_mats(report: &mut CheckReport, id: &str, lhs: &Mat, rhs: &Mat, dims: &[usize]) {
    debug_assert_eq!(lhs.rows(), rhs.rows());
    debug_assert_eq!(lhs.cols(), rhs.cols());
    for c in 0..lhs.cols() {
        let lcol = lhs.column(c);
        let rcol = rhs.column(c);
        if lcol != rcol {
            let mut idx = Vec::new();
            let mut rem = c;
            for &d in dims.iter().rev() {
                idx.push(rem % d);
                rem /= d;
            }
            idx.reverse();
            let diff: Vec<Scalar> = lcol
                .iter()
                .zip(&rcol)
                .map(|(a, b)| a.sub(b).expect("same field"))
                .collect();
            report.push(CheckItem::fail(id, idx, diff));
            return;
        }
    }
    report.push(CheckItem::pass(id));
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            if item.pass {
                writeln!(f, "  [ok]   {}", item.id)?;
            } else {
                let w = item
                    .witness
                    .as_ref()
                    .map(|w| format!("{w:?}"))
                    .unwrap_or_default();
                let res = item
                    .residual
                    .as_ref()
                    .map(|r| {
                        r.iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .unwrap_or_default();
                writeln!(f, "  [FAIL] {} at {w} residual [{res}]", item.id)?;
            }
        }
        Ok(())
    }
}
