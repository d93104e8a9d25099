//! Text encodings of [`TruncatedSeries`].
//!
//! JSON: `{"order": N, "coeffs": ["num/den", ...]}` with exactly `N + 1`
//! entries. CSV: a `n,numerator,denominator` header followed by one row per
//! coefficient. Rationals are always written as reduced `num/den` strings so
//! nothing passes through binary floating point.

use std::io::{BufRead, Write};

use rug::{Integer, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// `"num/den"`, denominator always present.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Serialize, Deserialize)]
struct Wire {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Wire {
            order: self.order(),
            coeffs: self.coeffs().iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        if wire.coeffs.len() != wire.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                wire.order,
                wire.order + 1,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| crate::parse_rational(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries::new(coeffs))
    }
}

pub fn write_csv<W: Write>(series: &TruncatedSeries, mut out: W) -> std::io::Result<()> {
    writeln!(out, "n,numerator,denominator")?;
    for (n, c) in series.coeffs().iter().enumerate() {
        writeln!(out, "{},{},{}", n, c.numer(), c.denom())?;
    }
    Ok(())
}

/// Reads the CSV written by [`write_csv`]. Rows must be consecutive from 0.
pub fn read_csv<R: BufRead>(input: R) -> Result<TruncatedSeries> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .transpose()
        .map_err(|e| Error::Parse(e.to_string()))?
        .ok_or_else(|| Error::Parse("empty CSV".into()))?;
    if header.trim() != "n,numerator,denominator" {
        return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
    }
    let mut coeffs = Vec::new();
    for line in lines {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.trim().split(',').collect();
        let [n, num, den] = fields[..] else {
            return Err(Error::Parse(format!("expected 3 fields in {line:?}")));
        };
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad index in {line:?}")))?;
        if n != coeffs.len() {
            return Err(Error::Parse(format!("row {n} out of sequence")));
        }
        let num = Integer::from_str_radix(num, 10)
            .map_err(|_| Error::Parse(format!("bad numerator in {line:?}")))?;
        let den = Integer::from_str_radix(den, 10)
            .map_err(|_| Error::Parse(format!("bad denominator in {line:?}")))?;
        if den.cmp0().is_le() {
            return Err(Error::Parse(format!("denominator must be positive in {line:?}")));
        }
        coeffs.push(Rational::from((num, den)));
    }
    if coeffs.is_empty() {
        return Err(Error::Parse("CSV has no coefficient rows".into()));
    }
    Ok(TruncatedSeries::new(coeffs))
}
