//! The structure-constant JSON schema and the pair-file schema.
//!
//! A structure file holds one (weak) bialgebra on an ordered basis:
//! `{ "field": "Q" | {"Fp": p}, "dim": n,
//!    "mult": c[i][j][k]  with e_i e_j = Σ_k c[i][j][k] e_k,
//!    "unit": [..],
//!    "comult": d[i][j][k] with Δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k,
//!    "counit": [..],
//!    "antipode": s[i][j] (optional), "labels": [..] (optional) }`
//! Rationals are written as bare integers or "a/b" strings; prime-field
//! elements as integers in [0, p).
//!
//! A pair file references two structures (inline, by file, or by zoo
//! recipe) together with an action and a coaction.

use serde_json::{json, Map, Value};
use std::path::Path;

use crate::algebra::{FDAlgebraData, FDCoalgebraData, WeakBialgebra, WeakHopfAlgebra};
use crate::error::{Error, Result};
use crate::group::{parse_group, GroupoidSpec};
use crate::interact::{
    comult_coaction, kaplansky_extend_action, kaplansky_extend_coaction, make_lambda_action,
    make_z_coaction, mult_action, trivial_action, trivial_coaction, ActionData, CoactionData,
};
use crate::linalg::Mat;
use crate::matched::MatchedPairData;
use crate::scalar::{parse_rational, FieldSpec, Scalar};
use crate::zoo;

fn perr(path: &str, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        msg: msg.into(),
    }
}

pub fn field_to_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Rationals => json!("Q"),
        FieldSpec::PrimeField(p) => json!({ "Fp": p }),
    }
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Rationals),
        Value::Object(m) => {
            let p = m
                .get("Fp")
                .and_then(Value::as_u64)
                .ok_or_else(|| perr("field", "expected {\"Fp\": prime}"))?;
            FieldSpec::prime_field(p)
        }
        _ => Err(perr("field", "expected \"Q\" or {\"Fp\": p}")),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => {
            let (num, den) = s.rational_parts().expect("rational");
            if den == "1" {
                if let Ok(n) = num.parse::<i64>() {
                    return json!(n);
                }
            }
            json!(format!("{num}/{den}"))
        }
        Scalar::Fp { value, .. } => json!(value),
    }
}

pub fn scalar_from_json(v: &Value, field: FieldSpec, path: &str) -> Result<Scalar> {
    match (v, field) {
        (Value::Number(n), FieldSpec::Rationals) => {
            let i = n
                .as_i64()
                .ok_or_else(|| perr(path, "integer out of range"))?;
            Ok(Scalar::from_i64(i, field))
        }
        (Value::String(s), FieldSpec::Rationals) => parse_rational(s),
        (Value::Number(n), FieldSpec::PrimeField(p)) => {
            let i = n
                .as_u64()
                .ok_or_else(|| perr(path, "prime-field element must be a nonnegative integer"))?;
            if i >= p {
                return Err(perr(path, format!("residue {i} not reduced mod {p}")));
            }
            Ok(Scalar::Fp {
                value: i,
                modulus: p,
            })
        }
        _ => Err(perr(path, "unsupported scalar encoding for this field")),
    }
}

fn scalar_vec_from_json(v: &Value, field: FieldSpec, path: &str) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| perr(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, field, &format!("{path}[{i}]")))
        .collect()
}

pub struct LoadedStructure {
    pub wb: WeakBialgebra,
    pub antipode: Option<Mat>,
}

impl LoadedStructure {
    pub fn require_hopf(self) -> Result<WeakHopfAlgebra> {
        match self.antipode {
            Some(s) => WeakHopfAlgebra::new(self.wb, s),
            None => Err(Error::BadParams(
                "structure carries no antipode but one is required".into(),
            )),
        }
    }
}

pub fn structure_to_json(wb: &WeakBialgebra, antipode: Option<&Mat>) -> Value {
    let n = wb.dim();
    let mut mult = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let col: Vec<Value> = (0..n)
                .map(|k| scalar_to_json(wb.alg.mult.at(k, i * n + j)))
                .collect();
            row.push(Value::Array(col));
        }
        mult.push(Value::Array(row));
    }
    let mut comult = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let col: Vec<Value> = (0..n)
                .map(|k| scalar_to_json(wb.coalg.comult.at(j * n + k, i)))
                .collect();
            row.push(Value::Array(col));
        }
        comult.push(Value::Array(row));
    }
    let mut out = Map::new();
    out.insert("field".into(), field_to_json(wb.field()));
    out.insert("dim".into(), json!(n));
    out.insert("mult".into(), Value::Array(mult));
    out.insert(
        "unit".into(),
        Value::Array(wb.alg.unit.iter().map(scalar_to_json).collect()),
    );
    out.insert("comult".into(), Value::Array(comult));
    out.insert(
        "counit".into(),
        Value::Array(wb.coalg.counit.iter().map(scalar_to_json).collect()),
    );
    if let Some(s) = antipode {
        let rows: Vec<Value> = (0..n)
            .map(|i| Value::Array((0..n).map(|j| scalar_to_json(s.at(j, i))).collect()))
            .collect();
        out.insert("antipode".into(), Value::Array(rows));
    }
    if let Some(labels) = &wb.labels {
        out.insert("labels".into(), json!(labels));
    }
    Value::Object(out)
}

pub fn structure_from_json(v: &Value) -> Result<LoadedStructure> {
    let obj = v
        .as_object()
        .ok_or_else(|| perr("$", "structure must be an object"))?;
    let field = field_from_json(obj.get("field").ok_or_else(|| perr("field", "missing"))?)?;
    let n = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| perr("dim", "missing or not an integer"))? as usize;

    let mult_v = obj.get("mult").ok_or_else(|| perr("mult", "missing"))?;
    let mut mult = Mat::zeros(n, n * n, field);
    let rows = mult_v
        .as_array()
        .filter(|a| a.len() == n)
        .ok_or_else(|| perr("mult", format!("expected {n} rows")))?;
    for (i, row) in rows.iter().enumerate() {
        let cols = row
            .as_array()
            .filter(|a| a.len() == n)
            .ok_or_else(|| perr(&format!("mult[{i}]"), format!("expected {n} entries")))?;
        for (j, cell) in cols.iter().enumerate() {
            let coords = scalar_vec_from_json(cell, field, &format!("mult[{i}][{j}]"))?;
            if coords.len() != n {
                return Err(perr(
                    &format!("mult[{i}][{j}]"),
                    format!("expected {n} coords"),
                ));
            }
            for (k, c) in coords.into_iter().enumerate() {
                mult.set(k, i * n + j, c);
            }
        }
    }

    let comult_v = obj.get("comult").ok_or_else(|| perr("comult", "missing"))?;
    let mut comult = Mat::zeros(n * n, n, field);
    let rows = comult_v
        .as_array()
        .filter(|a| a.len() == n)
        .ok_or_else(|| perr("comult", format!("expected {n} rows")))?;
    for (i, row) in rows.iter().enumerate() {
        let cols = row
            .as_array()
            .filter(|a| a.len() == n)
            .ok_or_else(|| perr(&format!("comult[{i}]"), format!("expected {n} entries")))?;
        for (j, cell) in cols.iter().enumerate() {
            let coords = scalar_vec_from_json(cell, field, &format!("comult[{i}][{j}]"))?;
            if coords.len() != n {
                return Err(perr(
                    &format!("comult[{i}][{j}]"),
                    format!("expected {n} coords"),
                ));
            }
            for (k, c) in coords.into_iter().enumerate() {
                comult.set(j * n + k, i, c);
            }
        }
    }

    let unit = scalar_vec_from_json(
        obj.get("unit").ok_or_else(|| perr("unit", "missing"))?,
        field,
        "unit",
    )?;
    let counit = scalar_vec_from_json(
        obj.get("counit").ok_or_else(|| perr("counit", "missing"))?,
        field,
        "counit",
    )?;

    let antipode = match obj.get("antipode") {
        None => None,
        Some(av) => {
            let rows = av
                .as_array()
                .filter(|a| a.len() == n)
                .ok_or_else(|| perr("antipode", format!("expected {n} rows")))?;
            let mut s = Mat::zeros(n, n, field);
            for (i, row) in rows.iter().enumerate() {
                let coords = scalar_vec_from_json(row, field, &format!("antipode[{i}]"))?;
                if coords.len() != n {
                    return Err(perr(&format!("antipode[{i}]"), format!("expected {n}")));
                }
                for (j, c) in coords.into_iter().enumerate() {
                    s.set(j, i, c);
                }
            }
            Some(s)
        }
    };

    let labels = match obj.get("labels") {
        None => None,
        Some(lv) => Some(
            lv.as_array()
                .filter(|a| a.len() == n)
                .ok_or_else(|| perr("labels", format!("expected {n} labels")))?
                .iter()
                .map(|x| x.as_str().map(String::from))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| perr("labels", "labels must be strings"))?,
        ),
    };

    let alg = FDAlgebraData::new(n, mult, unit)?;
    let coalg = FDCoalgebraData::new(n, comult, counit)?;
    let wb = WeakBialgebra::new(alg, coalg, labels)?;
    Ok(LoadedStructure { wb, antipode })
}

/// Builds a zoo structure from a compositional recipe string:
/// `groupoid:C2,C3`, `hg:C2xC2`, `kaplansky:<recipe>`, `dual:<recipe>`,
/// `union:<recipe>|<recipe>|…`.
pub fn recipe(spec: &str, field: FieldSpec) -> Result<WeakHopfAlgebra> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownExample(spec.to_string()))?;
    match kind.trim() {
        "groupoid" => {
            let comps = rest
                .split(',')
                .map(parse_group)
                .collect::<Result<Vec<_>>>()?;
            zoo::build_groupoid_algebra(&GroupoidSpec::new(comps)?, field)
        }
        "hg" => zoo::build_hg(&parse_group(rest)?, field),
        "kaplansky" => zoo::build_kaplansky(&recipe(rest, field)?),
        "dual" => zoo::build_dual_hopf(&recipe(rest, field)?),
        "union" => {
            let parts = rest
                .split('|')
                .map(|r| recipe(r, field))
                .collect::<Result<Vec<_>>>()?;
            zoo::build_disjoint_union(&parts)
        }
        other => Err(Error::UnknownExample(other.to_string())),
    }
}

pub struct LoadedPair {
    pub mp: MatchedPairData,
    pub h_antipode: Option<Mat>,
    pub a_antipode: Option<Mat>,
    pub h_recipe: Option<String>,
    pub a_recipe: Option<String>,
}

fn load_side(v: &Value, field: FieldSpec, base_dir: &Path, side: &str) -> Result<LoadedStructure> {
    match v {
        Value::String(spec) => {
            let wh = recipe(spec, field)?;
            Ok(LoadedStructure {
                wb: wh.wb,
                antipode: Some(wh.antipode),
            })
        }
        Value::Object(m) if m.contains_key("file") => {
            let rel = m["file"]
                .as_str()
                .ok_or_else(|| perr(side, "file must be a string"))?;
            let path = base_dir.join(rel);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| perr(side, format!("cannot read {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| perr(side, format!("invalid JSON: {e}")))?;
            structure_from_json(&value)
        }
        Value::Object(_) => structure_from_json(v),
        _ => Err(perr(
            side,
            "expected recipe string, {file}, or inline structure",
        )),
    }
}

/// Loads a pair file: two structures plus the action and coaction specs.
pub fn pair_from_json(v: &Value, base_dir: &Path) -> Result<LoadedPair> {
    let obj = v
        .as_object()
        .ok_or_else(|| perr("$", "pair file must be an object"))?;
    let field = field_from_json(obj.get("field").ok_or_else(|| perr("field", "missing"))?)?;
    let h_spec = obj.get("H").ok_or_else(|| perr("H", "missing"))?;
    let a_spec = obj.get("A").ok_or_else(|| perr("A", "missing"))?;
    let h_loaded = load_side(h_spec, field, base_dir, "H")?;
    let a_loaded = load_side(a_spec, field, base_dir, "A")?;
    let h = h_loaded.wb.clone();
    let a = a_loaded.wb.clone();
    let nh = h.dim();
    let na = a.dim();

    let action_v = obj.get("action").ok_or_else(|| perr("action", "missing"))?;
    let action = match action_v {
        Value::String(s) if s == "mult" => {
            if h != a {
                return Err(perr("action", "\"mult\" needs H = A"));
            }
            mult_action(&h)?
        }
        Value::String(s) if s == "kaplansky_trivial" => {
            let base_h = kaplansky_base(obj.get("H"), field)?;
            let base_a = kaplansky_base(obj.get("A"), field)?;
            let base = trivial_action(&base_h.wb, &base_a.wb)?;
            kaplansky_extend_action(&h, &a, &base)?
        }
        Value::Object(m) if m.contains_key("lambda") => {
            let lam = scalar_vec_from_json(&m["lambda"], field, "action.lambda")?;
            make_lambda_action(&h, &a, &lam)?
        }
        Value::Object(m) if m.contains_key("trivial") => trivial_action(&h, &a)?,
        Value::Array(rows) => {
            // act[i_h][j_a] = coordinates of e_{i_h} · f_{j_a}
            let mut act = Mat::zeros(na, nh * na, field);
            if rows.len() != nh {
                return Err(perr("action", format!("expected {nh} rows")));
            }
            for (i, row) in rows.iter().enumerate() {
                let cols = row
                    .as_array()
                    .filter(|c| c.len() == na)
                    .ok_or_else(|| perr("action", format!("row {i}: expected {na} entries")))?;
                for (j, cell) in cols.iter().enumerate() {
                    let coords = scalar_vec_from_json(cell, field, &format!("action[{i}][{j}]"))?;
                    for (k, c) in coords.into_iter().enumerate() {
                        act.set(k, i * na + j, c);
                    }
                }
            }
            ActionData::new(h.clone(), a.clone(), act)?
        }
        _ => return Err(perr("action", "unrecognized action spec")),
    };

    let coaction_v = obj
        .get("coaction")
        .ok_or_else(|| perr("coaction", "missing"))?;
    let coaction = match coaction_v {
        Value::String(s) if s == "comult" => {
            if h != a {
                return Err(perr("coaction", "\"comult\" needs H = A"));
            }
            comult_coaction(&h)?
        }
        Value::String(s) if s == "kaplansky_trivial" => {
            let base_h = kaplansky_base(obj.get("H"), field)?;
            let base_a = kaplansky_base(obj.get("A"), field)?;
            let base = trivial_coaction(&base_h.wb, &base_a.wb)?;
            kaplansky_extend_coaction(&h, &a, &base)?
        }
        Value::Object(m) if m.contains_key("z") => {
            let z = scalar_vec_from_json(&m["z"], field, "coaction.z")?;
            make_z_coaction(&h, &a, &z)?
        }
        Value::Object(m) if m.contains_key("trivial") => trivial_coaction(&h, &a)?,
        Value::Array(rows) => {
            // co[i_h] = matrix with ρ(e_{i_h}) = Σ co[i_h][p][q] e_p ⊗ f_q
            let mut coact = Mat::zeros(nh * na, nh, field);
            if rows.len() != nh {
                return Err(perr("coaction", format!("expected {nh} rows")));
            }
            for (i, row) in rows.iter().enumerate() {
                let ps = row
                    .as_array()
                    .filter(|c| c.len() == nh)
                    .ok_or_else(|| perr("coaction", format!("row {i}: expected {nh} slices")))?;
                for (p, slice) in ps.iter().enumerate() {
                    let coords =
                        scalar_vec_from_json(slice, field, &format!("coaction[{i}][{p}]"))?;
                    if coords.len() != na {
                        return Err(perr(
                            &format!("coaction[{i}][{p}]"),
                            format!("expected {na}"),
                        ));
                    }
                    for (q, c) in coords.into_iter().enumerate() {
                        coact.set(p * na + q, i, c);
                    }
                }
            }
            CoactionData::new(h.clone(), a.clone(), coact)?
        }
        _ => return Err(perr("coaction", "unrecognized coaction spec")),
    };

    Ok(LoadedPair {
        mp: MatchedPairData::new(action, coaction)?,
        h_antipode: h_loaded.antipode,
        a_antipode: a_loaded.antipode,
        h_recipe: h_spec.as_str().map(String::from),
        a_recipe: a_spec.as_str().map(String::from),
    })
}

fn kaplansky_base(side: Option<&Value>, field: FieldSpec) -> Result<WeakHopfAlgebra> {
    let spec = side
        .and_then(Value::as_str)
        .ok_or_else(|| perr("pair", "kaplansky_trivial needs recipe-based H and A"))?;
    let rest = spec
        .strip_prefix("kaplansky:")
        .ok_or_else(|| perr("pair", "kaplansky_trivial needs kaplansky:<base> recipes"))?;
    recipe(rest, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn structure_roundtrip_preserves_constants() {
        let wh = recipe("hg:C2xC2", Q).unwrap();
        let v = structure_to_json(&wh.wb, Some(&wh.antipode));
        let loaded = structure_from_json(&v).unwrap();
        assert_eq!(loaded.wb, wh.wb);
        assert_eq!(loaded.antipode.unwrap(), wh.antipode);
    }

    #[test]
    fn structure_roundtrip_over_prime_field() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let wh = recipe("groupoid:C2,C3", f5).unwrap();
        let v = structure_to_json(&wh.wb, Some(&wh.antipode));
        let text = serde_json::to_string(&v).unwrap();
        let loaded = structure_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(loaded.wb, wh.wb);
    }

    #[test]
    fn recipes_compose() {
        assert_eq!(recipe("kaplansky:groupoid:C2", Q).unwrap().dim(), 3);
        assert_eq!(recipe("union:hg:C2|groupoid:C3", Q).unwrap().dim(), 5);
        assert_eq!(recipe("dual:hg:C2", Q).unwrap().dim(), 2);
        assert!(matches!(
            recipe("frobenius:C2", Q),
            Err(Error::UnknownExample(_))
        ));
    }

    #[test]
    fn pair_file_with_lambda_and_z() {
        let v = serde_json::json!({
            "field": "Q",
            "H": "groupoid:C2,C3",
            "A": "groupoid:C2,C3",
            "action": { "lambda": [1, 1, 0, 0, 0] },
            "coaction": { "z": [0, 0, 1, 0, 0] },
        });
        let pair = pair_from_json(&v, Path::new(".")).unwrap();
        assert_eq!(pair.mp.h().dim(), 5);
        assert!(pair.h_antipode.is_some());
    }

    #[test]
    fn malformed_scalars_are_rejected_with_paths() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let bad = json!(7);
        match scalar_from_json(&bad, f5, "unit[0]") {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "unit[0]"),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_rational("2/4").unwrap() == Scalar::ratio(1, 2, Q).unwrap());
    }
}
