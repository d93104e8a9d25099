use rug::Rational;
use serde::Serialize;

use super::dissection::conjecture1_components;
use crate::asymptotics::predicted_sign;
use crate::error::{domain, Result};
use crate::series::{borwein_coeffs, TruncatedSeries};

/// Outcome of checking `c(n)·c(n+p) ≥ 0` for all `n + p ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignPatternReport {
    pub p: u64,
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub delta: Rational,
    pub order: usize,
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<usize>,
}

impl SignPatternReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

pub fn sign_pattern_check(p: u64, delta: &Rational, order: usize) -> Result<SignPatternReport> {
    let c = borwein_coeffs(p, delta, order)?;
    let p_us = p as usize;
    let bad: Vec<usize> = (0..=order.saturating_sub(p_us))
        .filter(|&n| order >= p_us && (c.coeffs()[n].cmp0() as i8) * (c.coeffs()[n + p_us].cmp0() as i8) < 0)
        .collect();
    Ok(SignPatternReport {
        p,
        delta: delta.clone(),
        order,
        checked: (order + 1).saturating_sub(p_us),
        violations: bad.len(),
        first_violation: bad.first().copied(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub name: char,
    pub nonnegative: bool,
    /// Index `n` (in the component's own variable) of the first negative coefficient.
    pub first_negative: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjecture1Report {
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub delta: Rational,
    pub order: usize,
    pub components: Vec<ComponentVerdict>,
}

impl Conjecture1Report {
    pub fn all_nonnegative(&self) -> bool {
        self.components.iter().all(|c| c.nonnegative)
    }
}

fn verdict(name: char, s: &TruncatedSeries) -> ComponentVerdict {
    let first_negative = s.coeffs().iter().position(|c| c.cmp0().is_lt());
    ComponentVerdict { name, nonnegative: first_negative.is_none(), first_negative }
}

/// Nonnegativity of `A`, `B`, `C` in `G_3^δ = A(q³) − q·B(q³) − q²·C(q³)`.
pub fn conjecture1_check(delta: &Rational, order: usize) -> Result<Conjecture1Report> {
    if order < 2 {
        return domain("dissection check needs order ≥ 2");
    }
    let g = borwein_coeffs(3, delta, order)?;
    let [a, b, c] = conjecture1_components(&g);
    Ok(Conjecture1Report {
        delta: delta.clone(),
        order,
        components: vec![verdict('A', &a), verdict('B', &b), verdict('C', &c)],
    })
}

/// Exact sign agreement of `c_3^{(δ)}(n)` with `cos(πδ/18 + 2πn/3)` and
/// strict positivity of `c(n)·c(n+3)`, for `from ≤ n ≤ to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub delta: Rational,
    pub from: usize,
    pub to: usize,
    pub sign_mismatches: Vec<usize>,
    pub nonpositive_products: Vec<usize>,
}

impl CorollaryReport {
    pub fn holds(&self) -> bool {
        self.sign_mismatches.is_empty() && self.nonpositive_products.is_empty()
    }
}

pub fn corollary_sign_check(delta: &Rational, from: usize, to: usize) -> Result<CorollaryReport> {
    if from > to {
        return domain("empty index range");
    }
    let c = borwein_coeffs(3, delta, to + 3)?;
    let sign = |n: usize| c.coeffs()[n].cmp0() as i8;
    let sign_mismatches = (from..=to).filter(|&n| sign(n) != predicted_sign(delta, n as i64)).collect();
    let nonpositive_products = (from..=to).filter(|&n| sign(n) * sign(n + 3) <= 0).collect();
    Ok(CorollaryReport { delta: delta.clone(), from, to, sign_mismatches, nonpositive_products })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_patterns() {
        assert!(sign_pattern_check(3, &Rational::from(1), 200).unwrap().holds());
        assert!(sign_pattern_check(5, &Rational::from(3), 200).unwrap().holds());
        assert!(conjecture1_check(&Rational::from(1), 200).unwrap().all_nonnegative());
    }

    #[test]
    fn tiny_order() {
        let r = sign_pattern_check(7, &Rational::from(1), 3).unwrap();
        assert_eq!(r.checked, 0);
        assert!(r.holds());
    }
}
