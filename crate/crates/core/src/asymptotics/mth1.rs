//! Growth estimate for `c_3^{(δ)}(n)`, `0.227 < δ ≤ 3`:
//!
//! ```text
//! |c/ĉ − cos(πδ/18 + 2πn/3)| ≤ M(L) = (L·w(δ) + L·log L + 2·I_1(L)) / I_1(2L)
//! L = (π/18)√(δ(12n − δ)),   ĉ = (2π²δ/27)·L^{−1}·I_1(2L)
//! ```
//!
//! `ĉ` here is the normalisation under which `ĉ·cos(…)` is the `N = 1` main
//! term, i.e. `(4πδ^{1/2}/(3√(12n−δ)))·I_1(2L)`.

use std::cmp::Ordering;

use rug::{Float, Rational};

use super::bessel::bessel_i1_interval;
use super::mth::theorem_mth_error_bound_interval;
use crate::error::{domain, Result};
use crate::numeric::{reduce_mod_two, Interval};
use crate::Variant;

const GUARD_BITS: u32 = 32;

fn dec(s: &str) -> Rational {
    crate::parse_rational(s).expect("literal")
}

fn hypothesis(delta: &Rational, n: i64) -> Result<()> {
    if *delta <= dec("0.227") || *delta > 3 {
        return domain(format!("the p = 3 growth estimate needs 0.227 < δ ≤ 3, got δ = {delta}"));
    }
    if *delta >= 12 * n {
        return domain(format!("the p = 3 growth estimate needs 12n − δ > 0 (n = {n})"));
    }
    Ok(())
}

/// `L`, `ĉ`, `w(δ)` and `M(L)` as point values.
#[derive(Clone, Debug)]
pub struct Mth1Quantities {
    pub l: Float,
    pub c_hat: Float,
    pub w: Float,
    pub m: Float,
}

/// Enclosures of the same quantities.
#[derive(Clone, Debug)]
pub struct Mth1Enclosures {
    pub l: Interval,
    pub c_hat: Interval,
    pub w: Interval,
    pub m: Interval,
}

/// `1.689^δ(1.222 + 1.002^δ) + 3·1.692^δ`, shared by `w(δ)` and the error constant.
fn cubic_constant_core(d: &Interval) -> Interval {
    let prec = d.prec();
    let c = |s: &str| Interval::from_rational(&dec(s), prec);
    c("1.689")
        .pow(d)
        .mul(&c("1.222").add(&c("1.002").pow(d)))
        .add(&c("1.692").pow(d).mul_rational(&Rational::from(3)))
}

/// `w(δ) = ½·log(1/δ) + 0.736·(1.689^δ(1.222+1.002^δ) + 3·1.692^δ)/δ + 0.119`.
pub fn w_interval(delta: &Rational, prec: u32) -> Interval {
    let d = Interval::from_rational(delta, prec);
    let half_log = Interval::from_rational(&Rational::from(delta.recip_ref()), prec)
        .ln()
        .mul_rational(&Rational::from((1, 2)));
    let core = cubic_constant_core(&d).mul_rational(&dec("0.736")).div(&d);
    half_log.add(&core).add(&Interval::from_rational(&dec("0.119"), prec))
}

/// `(4/9)·e^{3/(5π)}·(1.689^δ(1.222+1.002^δ) + 3·1.692^δ)`, the δ-only
/// majorant of the `p = 3` error allowance at `N = ⌈(20L²/δ)^{1/2}⌉`.
pub fn cubic_error_constant(delta: &Rational, prec: u32) -> Interval {
    let d = Interval::from_rational(delta, prec);
    Interval::from_int(3, prec)
        .div(&Interval::pi(prec).mul_rational(&Rational::from(5)))
        .exp()
        .mul_rational(&Rational::from((4, 9)))
        .mul(&cubic_constant_core(&d))
}

/// `L_{δ,n}` enclosure; no hypothesis check.
fn l_interval(delta: &Rational, n: i64, prec: u32) -> Interval {
    let inner = delta * (Rational::from(12 * n) - delta);
    Interval::pi(prec)
        .mul(&Interval::from_rational(&inner, prec).sqrt())
        .mul_rational(&Rational::from((1, 18)))
}

/// `N = ⌈(20 L²/δ)^{1/2}⌉`. If the enclosure straddles an integer the smaller
/// candidate is returned (the bound only grows as `N` shrinks).
pub fn mth1_cutoff(delta: &Rational, n: i64, prec: u32) -> u64 {
    let l = l_interval(delta, n, prec + GUARD_BITS);
    let v = l.square().mul_rational(&(20u32 / delta.clone())).sqrt();
    let lo = v.lo().to_f64().ceil();
    lo.max(1.0) as u64
}

pub fn mth1_enclosures(delta: &Rational, n: i64, prec: u32) -> Result<Mth1Enclosures> {
    hypothesis(delta, n)?;
    let wp = prec + GUARD_BITS;
    let l = l_interval(delta, n, wp);
    let two_l = l.mul_rational(&Rational::from(2));
    let i1_2l = bessel_i1_interval(&two_l);
    let c_hat = Interval::pi(wp)
        .square()
        .mul_rational(&(2u32 * delta.clone() / 27u32))
        .div(&l)
        .mul(&i1_2l);
    let w = w_interval(delta, wp);
    let numer = l.mul(&w).add(&l.mul(&l.ln())).add(&bessel_i1_interval(&l).mul_rational(&Rational::from(2)));
    let m = numer.div(&i1_2l);
    Ok(Mth1Enclosures { l, c_hat, w, m })
}

pub fn mth1_quantities(delta: &Rational, n: i64, prec: u32) -> Result<Mth1Quantities> {
    let e = mth1_enclosures(delta, n, prec)?;
    let f = |i: &Interval| Float::with_val(prec, i.mid());
    Ok(Mth1Quantities { l: f(&e.l), c_hat: f(&e.c_hat), w: f(&e.w), m: f(&e.m) })
}

/// `πθ = πδ/18 + 2πn/3` reduced to `θ ∈ [−1, 1)`.
fn cos_angle(delta: &Rational, n: i64) -> Rational {
    reduce_mod_two(&(Rational::from(delta / 18u32) + Rational::from((2 * n, 3))))
}

/// Rigorous check of `|c/ĉ − cos(πδ/18 + 2πn/3)| ≤ M(L)`: `true` only if the
/// upper end of the left side is at most the lower end of `M`.
pub fn check_mth1_inequality(delta: &Rational, n: i64, exact_c: &Rational, prec: u32) -> Result<bool> {
    let e = mth1_enclosures(delta, n, prec)?;
    let wp = e.l.prec();
    let cos = Interval::cos_pi_rational(&cos_angle(delta, n), wp);
    let lhs = Interval::from_rational(exact_c, wp).div(&e.c_hat).sub(&cos).abs();
    Ok(lhs.certainly_le(&e.m))
}

/// Whether `|cos(πδ/18 + 2πn/3)| > M(L)` holds rigorously, the condition under
/// which the inequality pins down the sign of `c_3^{(δ)}(n)`.
pub fn cosine_dominates(delta: &Rational, n: i64, prec: u32) -> Result<bool> {
    let e = mth1_enclosures(delta, n, prec)?;
    let cos = Interval::cos_pi_rational(&cos_angle(delta, n), e.l.prec()).abs();
    Ok(e.m.certainly_lt(&cos))
}

/// Exact sign of `cos(πδ/18 + 2πn/3)`.
pub fn predicted_sign(delta: &Rational, n: i64) -> i8 {
    let t = cos_angle(delta, n);
    let abs = Rational::from(t.abs_ref());
    match abs.cmp(&Rational::from((1, 2))) {
        Ordering::Less => 1,
        Ordering::Equal => 0,
        Ordering::Greater => -1,
    }
}

/// `x·log y + 2I_1(x) − (2 − γ − 1/(2y))·x`, an upper bound for
/// `Σ_{2≤k≤y} I_1(2x/k)`.
pub fn lemma_e_bound_interval(x: &Interval, y: u64) -> Result<Interval> {
    if y <= 2 {
        return domain(format!("the Bessel sum bound needs an integer y > 2, got {y}"));
    }
    if x.lo().cmp0() != Some(Ordering::Greater) {
        return domain("the Bessel sum bound needs x > 0");
    }
    let prec = x.prec();
    let log_y = Interval::from_int(y as i64, prec).ln();
    let coeff = Interval::from_int(2, prec)
        .sub(&Interval::euler_gamma(prec))
        .sub(&Interval::from_rational(&Rational::from((1, 2 * y)), prec));
    Ok(x
        .mul(&log_y)
        .add(&bessel_i1_interval(x).mul_rational(&Rational::from(2)))
        .sub(&coeff.mul(x)))
}

pub fn lemma_e_bound(x: &Float, y: u64, prec: u32) -> Result<Float> {
    let enc = lemma_e_bound_interval(&Interval::point(Float::with_val(prec + GUARD_BITS, x)), y)?;
    Ok(Float::with_val(prec, enc.mid()))
}

/// `Σ_{2≤k≤y} I_1(2x/k)` enclosure, the sum the bound majorises.
pub fn lemma_e_direct_sum(x: &Interval, y: u64) -> Interval {
    let mut s = Interval::from_int(0, x.prec());
    for k in 2..=y {
        s = s.add(&bessel_i1_interval(&x.mul_rational(&Rational::from((2, k)))));
    }
    s
}

/// The `p = 3` error allowance at `N = ⌈(20L²/δ)^{1/2}⌉` together with the
/// δ-only constant that should dominate it.
pub fn cubic_error_regime(delta: &Rational, n: u64, prec: u32) -> Result<(Interval, Interval)> {
    let big_n = mth1_cutoff(delta, n as i64, prec);
    let bound = theorem_mth_error_bound_interval(3, delta, n, big_n, Variant::ProofGeneral, prec)?;
    Ok((bound, cubic_error_constant(delta, prec + GUARD_BITS)))
}
