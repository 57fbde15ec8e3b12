//! Finite groups as plain multiplication tables, plus quotients and the
//! little parser for products of cyclic groups ("C2xC3").

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
    pub abelian: bool,
}

impl FiniteGroupTable {
    /// Validates the table against the group axioms and fills in the
    /// derived data.
    pub fn from_table(mult: Vec<Vec<usize>>) -> Result<FiniteGroupTable> {
        let n = mult.len();
        if n == 0 || mult.iter().any(|row| row.len() != n) {
            return Err(Error::BadParams(
                "multiplication table must be square".into(),
            ));
        }
        if mult.iter().flatten().any(|&x| x >= n) {
            return Err(Error::BadParams("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
            .ok_or_else(|| Error::BadParams("table has no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::BadParams(format!(
                            "table not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mult[a][b] == identity && mult[b][a] == identity)
                .ok_or_else(|| Error::BadParams(format!("element {a} has no inverse")))?;
        }
        let abelian = (0..n).all(|a| (0..n).all(|b| mult[a][b] == mult[b][a]));
        Ok(FiniteGroupTable {
            order: n,
            mult,
            inverse,
            identity,
            abelian,
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroupTable {
        assert!(n >= 1);
        let mult = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroupTable::from_table(mult).expect("cyclic table is a group")
    }

    pub fn direct_product(a: &FiniteGroupTable, b: &FiniteGroupTable) -> FiniteGroupTable {
        let n = a.order * b.order;
        let idx = |i: usize, j: usize| i * b.order + j;
        let mut mult = vec![vec![0; n]; n];
        for i1 in 0..a.order {
            for j1 in 0..b.order {
                for i2 in 0..a.order {
                    for j2 in 0..b.order {
                        mult[idx(i1, j1)][idx(i2, j2)] = idx(a.mult[i1][i2], b.mult[j1][j2]);
                    }
                }
            }
        }
        FiniteGroupTable::from_table(mult).expect("product table is a group")
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// Parses "C2", "C2xC3", "C2xC2xC5" into a direct product of cyclic
/// groups.
pub fn parse_group(spec: &str) -> Result<FiniteGroupTable> {
    let mut parts = Vec::new();
    for token in spec.split(['x', 'X']) {
        let t = token.trim();
        let n: usize = t
            .strip_prefix(['C', 'c'])
            .and_then(|d| d.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::BadParams(format!("cannot parse group factor `{t}`")))?;
        parts.push(FiniteGroupTable::cyclic(n));
    }
    let mut iter = parts.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::BadParams("empty group spec".into()))?;
    Ok(iter.fold(first, |acc, g| FiniteGroupTable::direct_product(&acc, &g)))
}

/// Quotient of `g` by the subgroup given as an index set. The subgroup
/// must be closed, contain the identity, and be normal.
pub fn group_quotient(g: &FiniteGroupTable, subgroup: &[usize]) -> Result<FiniteGroupTable> {
    let n = g.order;
    let mut in_sub = vec![false; n];
    for &s in subgroup {
        if s >= n {
            return Err(Error::NotSubgroup(format!("index {s} out of range")));
        }
        in_sub[s] = true;
    }
    if !in_sub[g.identity] {
        return Err(Error::NotSubgroup("missing identity".into()));
    }
    for &a in subgroup {
        if !in_sub[g.inv(a)] {
            return Err(Error::NotSubgroup(format!(
                "not closed under inverse at {a}"
            )));
        }
        for &b in subgroup {
            if !in_sub[g.op(a, b)] {
                return Err(Error::NotSubgroup(format!("not closed at ({a},{b})")));
            }
        }
    }
    for x in 0..n {
        for &s in subgroup {
            if !in_sub[g.op(g.op(x, s), g.inv(x))] {
                return Err(Error::NotSubgroup(format!("not normal at ({x},{s})")));
            }
        }
    }

    // Left cosets in order of their smallest representative.
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &s in subgroup {
            coset_of[g.op(x, s)] = c;
        }
    }
    let q = reps.len();
    let mut mult = vec![vec![0; q]; q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mult[i][j] = coset_of[g.op(a, b)];
        }
    }
    FiniteGroupTable::from_table(mult)
        .map_err(|e| Error::NotSubgroup(format!("quotient table invalid: {e}")))
}

/// A disjoint union of groups: the only groupoids this library builds.
#[derive(Debug, Clone)]
pub struct GroupoidSpec {
    pub components: Vec<FiniteGroupTable>,
}

impl GroupoidSpec {
    pub fn new(components: Vec<FiniteGroupTable>) -> Result<GroupoidSpec> {
        if components.is_empty() {
            return Err(Error::BadParams(
                "groupoid needs at least one component".into(),
            ));
        }
        Ok(GroupoidSpec { components })
    }

    pub fn total_elements(&self) -> usize {
        self.components.iter().map(|c| c.order).sum()
    }
}
