//! Constants transcribed from published computations, shipped as versioned
//! JSON with checksums.

use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::json::{canonical, parse_schur_poly, parse_schur_vector};
use crate::logconcavity::SchurPoly;
use crate::schur::SchurVector;

pub const BRAID_B7: &str = include_str!("../data/braid_b7.json");
pub const REMARK: &str = include_str!("../data/remark.json");

/// A recorded difference `c_i c_j - c_{i-1} c_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordedDifference {
    pub i: usize,
    pub j: usize,
    pub difference: SchurVector,
}

#[derive(Clone, Debug)]
pub struct Dataset {
    pub name: String,
    pub source: String,
    pub version: u64,
    pub poly: SchurPoly,
    pub differences: Vec<RecordedDifference>,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn checked(value: &Value, expected: Option<&Value>, what: &str) -> Result<()> {
    let expected = expected.and_then(Value::as_str).ok_or_else(|| Error::Data(format!("{what}: missing sha256")))?;
    let actual = sha256_hex(&canonical(value));
    if actual != expected {
        return Err(Error::Data(format!("{what}: checksum mismatch ({actual} != {expected})")));
    }
    Ok(())
}

fn recorded(entry: &Value, what: &str) -> Result<RecordedDifference> {
    let idx = |k: &str| {
        entry
            .get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Data(format!("{what}: missing {k}")))
    };
    let diff = entry.get("difference").ok_or_else(|| Error::Data(format!("{what}: missing difference")))?;
    if entry.get("sha256").is_some() {
        checked(diff, entry.get("sha256"), what)?;
    }
    Ok(RecordedDifference { i: idx("i")?, j: idx("j")?, difference: parse_schur_vector(diff)? })
}

/// Parses a data file and verifies its checksums.
pub fn load(text: &str) -> Result<Dataset> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Data(format!("missing field {k:?}")));
    let name = field("name")?.as_str().unwrap_or_default().to_string();
    let poly_value = field("poly")?;
    checked(poly_value, v.get("sha256"), &name)?;
    let mut differences = Vec::new();
    if let Some(d) = v.get("ilc_difference") {
        differences.push(recorded(d, &name)?);
    }
    if let Some(ds) = v.get("differences").and_then(Value::as_array) {
        for d in ds {
            differences.push(recorded(d, &name)?);
        }
    }
    Ok(Dataset {
        source: field("source")?.as_str().unwrap_or_default().to_string(),
        version: field("version")?.as_u64().ok_or_else(|| Error::Data("version must be an integer".into()))?,
        poly: parse_schur_poly(poly_value)?,
        name,
        differences,
    })
}

pub fn braid_b7() -> Dataset {
    load(BRAID_B7).expect("bundled braid data is valid")
}

pub fn remark() -> Dataset {
    load(REMARK).expect("bundled remark data is valid")
}
