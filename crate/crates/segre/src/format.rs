//! Serialized forms of the core values.
//!
//! Big integers and rationals are always decimal strings (`"12"`,
//! `"-1/2"`), so documents survive any JSON implementation intact.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use segre_core::betti::{BettiDiagram, BettiEntry};
use segre_core::series::LaurentPolynomial;
use segre_core::toric::{Face, LatticePoint};
use serde_json::{json, Map, Value};

use crate::error::FormatError;

pub fn naturals_to_json(values: &[BigUint]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn naturals_from_json(value: &Value) -> Result<Vec<BigUint>, FormatError> {
    value
        .as_array()
        .ok_or(FormatError::Shape("an array of decimal strings"))?
        .iter()
        .map(|v| {
            let s = v.as_str().ok_or(FormatError::Shape("a decimal string"))?;
            BigUint::from_str(s).map_err(|_| FormatError::Number(s.into()))
        })
        .collect()
}

fn rational_from_str(s: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::Number(s.into());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(s).map(BigRational::from_integer).map_err(|_| bad()),
    }
}

/// `{"exponent": "coefficient"}`; zero terms are omitted.
pub fn polynomial_to_json(p: &LaurentPolynomial) -> Value {
    let map: Map<String, Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    Value::Object(map)
}

pub fn polynomial_from_json(value: &Value) -> Result<LaurentPolynomial, FormatError> {
    let map = value.as_object().ok_or(FormatError::Shape("an object of exponent -> coefficient"))?;
    let mut p = LaurentPolynomial::zero();
    for (e, c) in map {
        let e = i64::from_str(e).map_err(|_| FormatError::Number(e.clone()))?;
        let c = c.as_str().ok_or(FormatError::Shape("a coefficient string"))?;
        p.add_term(e, rational_from_str(c)?);
    }
    Ok(p)
}

pub fn point_to_json(p: &LatticePoint) -> Value {
    json!(p.coords())
}

pub fn points_to_json(points: &[LatticePoint]) -> Value {
    Value::Array(points.iter().map(point_to_json).collect())
}

pub fn points_from_json(value: &Value) -> Result<Vec<LatticePoint>, FormatError> {
    value
        .as_array()
        .ok_or(FormatError::Shape("an array of points"))?
        .iter()
        .map(|p| {
            let coords = p
                .as_array()
                .ok_or(FormatError::Shape("a coordinate array"))?
                .iter()
                .map(|c| {
                    c.as_u64()
                        .and_then(|c| u32::try_from(c).ok())
                        .ok_or(FormatError::Shape("a nonnegative coordinate"))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            Ok(LatticePoint::new(coords))
        })
        .collect()
}

pub fn face_from_json(value: &Value) -> Result<Face, FormatError> {
    Face::new(points_from_json(value)?).map_err(|e| FormatError::Core(e.to_string()))
}

/// `0,0;0,1;1,1`
pub fn points_to_line(points: &[LatticePoint]) -> String {
    points
        .iter()
        .map(|p| p.coords().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn points_from_line(line: &str) -> Result<Vec<LatticePoint>, FormatError> {
    let line = line.trim();
    if line.is_empty() {
        return Ok(Vec::new());
    }
    line.split(';')
        .map(|p| {
            let coords = p
                .split(',')
                .map(|c| u32::from_str(c.trim()).map_err(|_| FormatError::Number(c.into())))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(LatticePoint::new(coords))
        })
        .collect()
}

/// One face per line, in iteration order.
pub fn faces_to_text<'a>(faces: impl IntoIterator<Item = &'a Face>) -> String {
    faces.into_iter().map(|f| points_to_line(f.points()) + "\n").collect()
}

pub fn faces_from_text(text: &str) -> Result<Vec<Face>, FormatError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Face::new(points_from_line(l)?).map_err(|e| FormatError::Core(e.to_string())))
        .collect()
}

/// `"84"`, `"nonzero"` or `"unknown"`.
pub fn entry_label(e: &BettiEntry) -> String {
    match e {
        BettiEntry::Known(v) => v.to_string(),
        BettiEntry::Nonzero => "nonzero".into(),
        BettiEntry::Unknown => "unknown".into(),
    }
}

fn entry_from_json(value: &Value) -> Result<BettiEntry, FormatError> {
    match value.as_str().ok_or(FormatError::Shape("a Betti entry string"))? {
        "nonzero" => Ok(BettiEntry::Nonzero),
        "unknown" => Ok(BettiEntry::Unknown),
        s => BigUint::from_str(s).map(BettiEntry::Known).map_err(|_| FormatError::Number(s.into())),
    }
}

/// `{"first_row", "columns", "rows": [[entry, ...], ...]}`.
pub fn betti_to_json(d: &BettiDiagram) -> Value {
    let rows: Vec<Value> = d
        .entries
        .iter()
        .map(|row| Value::Array(row.iter().map(|e| Value::String(entry_label(e))).collect()))
        .collect();
    json!({ "first_row": d.first_row, "columns": d.columns, "rows": rows })
}

pub fn betti_from_json(value: &Value) -> Result<BettiDiagram, FormatError> {
    let field = |k: &str| value.get(k).and_then(Value::as_u64).map(|v| v as usize);
    let first_row = field("first_row").ok_or(FormatError::Shape("first_row"))?;
    let columns = field("columns").ok_or(FormatError::Shape("columns"))?;
    let entries = value
        .get("rows")
        .and_then(Value::as_array)
        .ok_or(FormatError::Shape("rows"))?
        .iter()
        .map(|row| {
            let row = row.as_array().ok_or(FormatError::Shape("a row array"))?;
            if row.len() != columns {
                return Err(FormatError::Shape("rows of length `columns`"));
            }
            row.iter().map(entry_from_json).collect()
        })
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(BettiDiagram { first_row, columns, entries })
}
