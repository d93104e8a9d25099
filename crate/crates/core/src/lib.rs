//! Exact q-series coefficients of powers of the infinite Borwein product
//! `G_p(q) = ∏ (1 - q^n) / (1 - q^{pn})`, circle-method estimates for those
//! coefficients with explicit error bounds, and exact checkers for the theta
//! function identities that govern the cubic case.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: exact truncated power series over the rationals, rational
//!   powers, eta-like products and the Borwein coefficients themselves.
//! - [`numeric`]: MPFR-backed outward-rounded intervals and a small complex
//!   type used by every floating-point verdict.
//! - [`modular`]: Dedekind sums, eta multipliers, the Kloosterman-type sums
//!   `A_k(n)` and a two-sided check of the modular transformation of `G_p^δ`.
//! - [`asymptotics`]: the Bessel main term, its error bound and the `p = 3`
//!   growth estimate.
//! - [`identities`]: theta-function identities, dissections, vanishing,
//!   divisibility and sign-pattern checks.

pub mod asymptotics;
pub mod error;
pub mod identities;
pub mod modular;
pub mod numeric;
pub mod series;

pub use error::{Error, Result};
pub use rug::{Float, Integer, Rational};

/// Which reading of a formula whose displayed form was specialised to `p = 3`.
///
/// `ProofGeneral` keeps the dependence on `p` that the derivation produces;
/// `AsStated` uses the displayed constants literally. The two agree at `p = 3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    AsStated,
    #[default]
    ProofGeneral,
}

/// Default working precision (bits) for floating-point evaluations.
pub const DEFAULT_PRECISION: u32 = 128;

/// Parses an exact rational from `"a/b"`, an integer, or a decimal literal
/// such as `"0.227"` (read exactly as `227/1000`, never through binary floats).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if s.contains('/') {
        let r = Rational::from_str_radix(s, 10).map_err(|_| bad())?;
        return Ok(r);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if (int_part.is_empty() && frac_part.is_empty())
        || !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let numer = Integer::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10)
        .map_err(|_| bad())?;
    let denom = Integer::from(Integer::u_pow_u(10, frac_part.len() as u32));
    let mut r = Rational::from((numer, denom));
    if neg {
        r = -r;
    }
    Ok(r)
}
