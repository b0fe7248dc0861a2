//! JSON encodings. Rationals are `["numerator", "denominator"]` string
//! pairs so no value ever passes through a float.

use crate::{Expansion, Partition, Poly, Rational, SeriesExpansion};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

pub fn rational_to_json(q: &Rational) -> Value {
    json!([q.numer().to_string(), q.denom().to_string()])
}

pub fn rational_from_json(value: &Value) -> Option<Rational> {
    let [numer, denom] = value.as_array()?.as_slice() else {
        return None;
    };
    let numer: BigInt = numer.as_str()?.parse().ok()?;
    let denom: BigInt = denom.as_str()?.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Coefficients in ascending degree.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(value: &Value) -> Option<Poly> {
    let coeffs = value
        .as_array()?
        .iter()
        .map(rational_from_json)
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::new(coeffs))
}

pub fn series_to_json(series: &Expansion) -> Value {
    json!({
        "order": series.order(),
        "coefficients": series.coefficients().iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(value: &Value) -> Option<Expansion> {
    let coeffs = value
        .get("coefficients")?
        .as_array()?
        .iter()
        .map(poly_from_json)
        .collect::<Option<Vec<_>>>()?;
    if coeffs.is_empty() || value.get("order")?.as_u64()? as usize != coeffs.len() - 1 {
        return None;
    }
    Some(SeriesExpansion::new(coeffs))
}

pub fn partitions_to_json(partitions: &[Partition]) -> Value {
    Value::Array(partitions.iter().map(|p| json!(p.parts())).collect())
}
