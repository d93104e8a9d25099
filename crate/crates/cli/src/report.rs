use std::io::{self, Write};

use borwein_core::Float;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Serialize)]
pub struct Config {
    pub precision_bits: u32,
    pub format: Format,
    pub parallelism: usize,
    pub params: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct Verdicts {
    pub all_passed: bool,
    /// Identifiers of the failing rows or asserted checks.
    pub failed: Vec<String>,
}

/// What every command emits. Exactly one of `rows`/`checks` is present.
#[derive(Debug, Serialize)]
pub struct Report<R: Serialize> {
    pub command: &'static str,
    pub config: Config,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<R>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<R>>,
    pub verdicts: Verdicts,
}

/// Row types also know how to print themselves as a line of text.
pub trait TextRow {
    fn text(&self) -> String;
}

pub fn emit<R: Serialize + TextRow>(report: &Report<R>, out: &mut impl Write) -> io::Result<()> {
    let items = report.rows.as_ref().or(report.checks.as_ref()).map(Vec::as_slice).unwrap_or(&[]);
    match report.config.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for item in items {
                w.serialize(item)?;
            }
            w.flush()
        }
        Format::Text => {
            for item in items {
                writeln!(out, "{}", item.text())?;
            }
            let v = &report.verdicts;
            if v.all_passed {
                writeln!(out, "{}: ok", report.command)
            } else {
                writeln!(out, "{}: FAILED ({})", report.command, v.failed.join(", "))
            }
        }
    }
}

/// Decimal rendering with as many significant digits as the precision carries.
pub fn decimal(x: &Float) -> String {
    let digits = ((x.prec() as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize;
    x.to_string_radix(10, Some(digits))
}

/// Short decimal for residuals and ratios.
pub fn short(x: &Float) -> String {
    x.to_string_radix(10, Some(6))
}
