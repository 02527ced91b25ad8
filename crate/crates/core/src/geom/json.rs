//! JSON encoding of the geometric types.
//!
//! Rationals are emitted as `{"num": "<decimal>", "den": "<decimal>"}` with
//! both parts as decimal strings, so golden files are stable across
//! languages and integer widths.

use super::fan::{Cone, Fan};
use super::num::{Int, Rat};
use super::polytope::{Halfspace, Polytope};
use serde_json::{json, Map, Value};
use std::str::FromStr;

pub fn rat_to_json(q: &Rat) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn int_to_json(n: &Int) -> Value {
    Value::String(n.to_string())
}

pub fn qvec_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_json).collect())
}

pub fn zvec_to_json(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn rat_from_json(v: &Value) -> Result<Rat, String> {
    let obj = v.as_object().ok_or("rational must be an object")?;
    let num = obj
        .get("num")
        .and_then(Value::as_str)
        .ok_or("missing num")?;
    let den = obj
        .get("den")
        .and_then(Value::as_str)
        .ok_or("missing den")?;
    let n = Int::from_str(num).map_err(|e| e.to_string())?;
    let d = Int::from_str(den).map_err(|e| e.to_string())?;
    if d == Int::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rat::new(n, d))
}

pub fn qvec_from_json(v: &Value) -> Result<Vec<Rat>, String> {
    v.as_array()
        .ok_or("vector must be an array")?
        .iter()
        .map(rat_from_json)
        .collect()
}

pub fn zvec_from_json(v: &Value) -> Result<Vec<Int>, String> {
    v.as_array()
        .ok_or("vector must be an array")?
        .iter()
        .map(|x| {
            x.as_str()
                .ok_or_else(|| "integer must be a string".to_string())
                .and_then(|s| Int::from_str(s).map_err(|e| e.to_string()))
        })
        .collect()
}

pub fn polytope_to_json(p: &Polytope) -> Value {
    let mut m = Map::new();
    m.insert("ambient".into(), json!(p.ambient));
    m.insert("dim".into(), json!(p.dim));
    m.insert(
        "vertices".into(),
        Value::Array(p.vertices.iter().map(|v| qvec_to_json(v)).collect()),
    );
    m.insert(
        "facets".into(),
        Value::Array(
            p.facets
                .iter()
                .map(|f| {
                    json!({
                        "normal": zvec_to_json(&f.normal),
                        "offset": rat_to_json(&f.offset),
                    })
                })
                .collect(),
        ),
    );
    m.insert(
        "equations".into(),
        Value::Array(
            p.equations
                .iter()
                .map(|(a, b)| json!({"normal": zvec_to_json(a), "offset": rat_to_json(b)}))
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn polytope_from_json(v: &Value) -> Result<Polytope, String> {
    let verts = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or("missing vertices")?
        .iter()
        .map(qvec_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Polytope::convex_hull(&verts).map_err(|e| e.to_string())
}

pub fn cone_to_json(c: &Cone) -> Value {
    json!({ "rays": Value::Array(c.rays.iter().map(|r| zvec_to_json(r)).collect()), "dim": c.dim() })
}

pub fn fan_to_json(f: &Fan) -> Value {
    json!({
        "ambient": f.ambient,
        "complete": f.complete,
        "rays": Value::Array(f.rays().iter().map(|r| zvec_to_json(r)).collect()),
        "maximal_cones": Value::Array(f.maximal.iter().map(cone_to_json).collect()),
        "cones": Value::Array(f.all_cones().iter().map(cone_to_json).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::num::{qvec, rat};

    #[test]
    fn rational_roundtrip() {
        let q = rat(-22, 7);
        assert_eq!(rat_from_json(&rat_to_json(&q)).unwrap(), q);
    }

    #[test]
    fn polytope_roundtrip() {
        let p = Polytope::convex_hull(&[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1])]).unwrap();
        let j = polytope_to_json(&p);
        let q = polytope_from_json(&j).unwrap();
        assert_eq!(p, q);
    }
}
