//! Serde helpers. Big integers go out as decimal strings so that no JSON
//! reader truncates them to a double.

use std::fmt::Display;

use num_rational::BigRational;
use serde::Serializer;

pub fn decimal<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn optional_decimal<T: Display, S: Serializer>(
    value: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_str("unknown"),
    }
}

/// Rationals as `p/q`, always with an explicit denominator.
pub fn ratio<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&format_ratio(value))
}

pub fn format_ratio(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Plain decimal notation with `digits` significant digits.
pub fn significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i64 + 1;
    let decimals = (digits as i64 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
