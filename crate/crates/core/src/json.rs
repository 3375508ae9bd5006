//! Canonical JSON encodings.
//!
//! Vectors are arrays of `{"lambda": [..], "c": ..}` in descending
//! lexicographic order of `lambda`; polynomials are arrays of vectors indexed
//! by the power of `t`. Integers are written at full precision.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::logconcavity::{CheckReport, IntPoly, SchurPoly};
use crate::partition::Partition;
use crate::schur::SchurVector;

pub fn bigint(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integer literal"))
}

pub fn schur_vector(v: &SchurVector) -> Value {
    Value::Array(
        v.iter()
            .map(|(p, c)| {
                let mut m = Map::new();
                m.insert("lambda".into(), json!(p.parts()));
                m.insert("c".into(), bigint(c));
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn schur_poly(p: &SchurPoly) -> Value {
    Value::Array(p.coeffs().iter().map(schur_vector).collect())
}

pub fn int_poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint).collect())
}

pub fn check_report(r: &CheckReport) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| {
            let mut m = Map::new();
            m.insert("i".into(), json!(w.i));
            m.insert("j".into(), json!(w.j));
            m.insert("difference".into(), schur_vector(&w.difference));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("verdict".into(), json!(r.verdict));
    m.insert("witnesses".into(), Value::Array(witnesses));
    m.insert("cells_checked".into(), json!(r.cells_checked));
    Value::Object(m)
}

/// Compact single-line text of a value; stable because keys keep insertion
/// order and vectors are emitted sorted.
pub fn canonical(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Data(msg.into())
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).map_err(|_| bad(format!("not an integer: {n}"))),
        other => Err(bad(format!("expected integer, got {other}"))),
    }
}

pub fn parse_schur_vector(v: &Value) -> Result<SchurVector> {
    let terms = v.as_array().ok_or_else(|| bad("vector must be an array"))?;
    let mut out = SchurVector::zero();
    for t in terms {
        let lambda = t.get("lambda").and_then(Value::as_array).ok_or_else(|| bad("term needs \"lambda\""))?;
        let parts = lambda
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("bad part {x}"))))
            .collect::<Result<Vec<_>>>()?;
        let c = parse_int(t.get("c").ok_or_else(|| bad("term needs \"c\""))?)?;
        out.add_term(Partition::new(parts)?, c);
    }
    Ok(out)
}

pub fn parse_schur_poly(v: &Value) -> Result<SchurPoly> {
    let coeffs = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    Ok(SchurPoly::new(coeffs.iter().map(parse_schur_vector).collect::<Result<_>>()?))
}

/// Reads a polynomial either bare or wrapped in an object under `"poly"`.
pub fn parse_poly_document(text: &str) -> Result<SchurPoly> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    match v.get("poly") {
        Some(p) => parse_schur_poly(p),
        None => parse_schur_poly(&v),
    }
}
