//! Main term and explicit error bound for `c_p^{(δ)}(n)`, prime `p`,
//! `0 < δ ≤ 24/(p−1)`:
//!
//! ```text
//! c_p^{(δ)}(n) = 2πδ^{1/2}/√X · Σ_{k≤N} A_{pk}^{(δ)}(n) I_1((p−1)π/(6pk) · √(δX))
//!              + e^{(24n−(p−1)δ)π/(6p²N²)} E,        X = 24n/(p−1) − δ,
//! |E| ≤ (p−1)e^{(p−1)πδ/12}/p² · (π√2 − 2 + 2 f(e^{−a})^δ f(e^{−2π})^δ)
//!     + 2(p−1) e^{−π(p−1)δ/(12p)} / p^{1−δ/2} · f(e^{−2π/p})^δ f(e^{−2π})^δ
//! ```
//!
//! with `a = 2pπ` (`Variant::ProofGeneral`) or `a = 6π` as displayed
//! (`Variant::AsStated`).

use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Rational};

use super::bessel::bessel_i1_interval;
use super::mth1::predicted_sign;
use crate::error::{domain, Result};
use crate::modular::{is_prime, kloosterman_sum};
use crate::numeric::Interval;
use crate::Variant;

const GUARD_BITS: u32 = 32;

/// Checks the hypotheses of the theorem and returns `X = 24n/(p−1) − δ`.
fn hypothesis(p: u64, delta: &Rational, n: u64, big_n: u64) -> Result<Rational> {
    if !is_prime(p) {
        return domain(format!("the asymptotic formula needs a prime p, got {p}"));
    }
    let cap = Rational::from((24, p - 1));
    if delta.cmp0() != Ordering::Greater || *delta > cap {
        return domain(format!("the asymptotic formula needs 0 < δ ≤ 24/(p−1) = {cap}, got δ = {delta}"));
    }
    if n == 0 {
        return domain("the asymptotic formula needs n ≥ 1");
    }
    if big_n == 0 {
        return domain("the asymptotic formula needs N ≥ 1");
    }
    let x = Rational::from((24 * n, p - 1)) - delta;
    if x.cmp0() != Ordering::Greater {
        return domain(format!("24n/(p−1) − δ must be positive (n = {n}, δ = {delta})"));
    }
    Ok(x)
}

/// Enclosure of the main term.
pub fn rademacher_main_interval(p: u64, delta: &Rational, n: u64, big_n: u64, prec: u32) -> Result<Interval> {
    let x = hypothesis(p, delta, n, big_n)?;
    let wp = prec + GUARD_BITS;
    let pi = Interval::pi(wp);
    let prefactor = pi
        .mul_rational(&Rational::from(2))
        .mul(&Interval::from_rational(delta, wp).sqrt())
        .div(&Interval::from_rational(&x, wp).sqrt());
    let root = Interval::from_rational(&Rational::from(delta * &x), wp).sqrt();
    let base_arg = pi.mul(&root).mul_rational(&Rational::from((p - 1, 6 * p)));
    let mut sum = Interval::from_int(0, wp);
    for k in 1..=big_n {
        let a = kloosterman_sum(p, p * k, delta, n as i64, wp)?.re;
        let i1 = bessel_i1_interval(&base_arg.mul_rational(&Rational::from((1, k))));
        sum = sum.add(&a.mul(&i1));
    }
    Ok(prefactor.mul(&sum))
}

/// Main term of the asymptotic formula at precision `prec`.
pub fn rademacher_main(p: u64, delta: &Rational, n: u64, big_n: u64, prec: u32) -> Result<Float> {
    Ok(Float::with_val(prec, rademacher_main_interval(p, delta, n, big_n, prec)?.mid()))
}

/// Enclosure of `f(e^{−c}) = ∏ 1/(1 − e^{−cn})` for `c > 0`.
///
/// The product is truncated once `x^n < 2^{−prec−8}`; the omitted factors
/// are at most `exp(Σ_{n>M} x^n/(1−x^n)) ≤ exp(x^{M+1}/(1−x)²)`, which widens
/// the upper endpoint.
pub fn euler_f_interval(c: &Interval) -> Interval {
    let prec = c.prec();
    let x = c.neg().exp();
    let one = Interval::from_int(1, prec);
    let threshold = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let mut prod = one.clone();
    let mut xn = x.clone();
    while *xn.hi() >= threshold {
        prod = prod.div(&one.sub(&xn));
        xn = xn.mul(&x);
    }
    let gap = one.sub(&x);
    let tail = xn.div(&gap.square()).exp();
    let hi = Float::with_val_round(prec, prod.hi() * tail.hi(), Round::Up).0;
    Interval::new(prod.lo().clone(), hi)
}

/// Enclosure of the full error allowance
/// `e^{(24n−(p−1)δ)π/(6p²N²)} · (bound on |E|)`.
pub fn theorem_mth_error_bound_interval(
    p: u64,
    delta: &Rational,
    n: u64,
    big_n: u64,
    variant: Variant,
    prec: u32,
) -> Result<Interval> {
    hypothesis(p, delta, n, big_n)?;
    let wp = prec + GUARD_BITS;
    let pi = Interval::pi(wp);
    let d = Interval::from_rational(delta, wp);
    let pm1 = Rational::from(p - 1);
    let pr = Rational::from(p);

    let growth_coeff = (Rational::from(24 * n) - Rational::from(&pm1 * delta))
        / Rational::from(6 * p * p * big_n * big_n);
    let growth = pi.mul_rational(&growth_coeff).exp();

    let f_pow = |c: Interval| euler_f_interval(&c).pow(&d);
    let f_2pi = f_pow(pi.mul_rational(&Rational::from(2)));
    let f_a = match variant {
        Variant::ProofGeneral => f_pow(pi.mul_rational(&Rational::from(2 * p))),
        Variant::AsStated => f_pow(pi.mul_rational(&Rational::from(6))),
    };
    let f_2pi_p = f_pow(pi.mul_rational(&Rational::from((2, p))));

    let two = Interval::from_int(2, wp);
    let sqrt2 = two.sqrt();
    let bracket = pi
        .mul(&sqrt2)
        .sub(&two)
        .add(&two.mul(&f_a).mul(&f_2pi));
    let first = pi
        .mul_rational(&(Rational::from(&pm1 * delta) / 12u32))
        .exp()
        .mul_rational(&(&pm1 / Rational::from(p * p)))
        .mul(&bracket);

    // p^{1−δ/2}
    let p_pow = Interval::from_rational(&pr, wp).pow(&Interval::from_rational(&(1 - Rational::from(delta / 2u32)), wp));
    let second = pi
        .mul_rational(&(-Rational::from(&pm1 * delta) / (12 * p)))
        .exp()
        .mul_rational(&Rational::from(2u32 * &pm1))
        .div(&p_pow)
        .mul(&f_2pi_p)
        .mul(&f_2pi);

    Ok(growth.mul(&first.add(&second)))
}

/// Error allowance of the asymptotic formula (rounded to nearest).
pub fn theorem_mth_error_bound(
    p: u64,
    delta: &Rational,
    n: u64,
    big_n: u64,
    variant: Variant,
    prec: u32,
) -> Result<Float> {
    let b = theorem_mth_error_bound_interval(p, delta, n, big_n, variant, prec)?;
    Ok(Float::with_val(prec, b.mid()))
}

/// One evaluated instance of the asymptotic formula.
#[derive(Clone, Debug)]
pub struct EstimateReport {
    pub p: u64,
    pub delta: Rational,
    pub n: u64,
    pub big_n: u64,
    pub variant: Variant,
    pub exact_coeff: Rational,
    pub main_term: Float,
    pub error_bound: Float,
    /// `|exact − main| ≤ bound`, decided with the upper end of the left
    /// enclosure against the lower end of the right one.
    pub within_bound: bool,
    /// For `p = 3`, the exact sign of `cos(πδ/18 + 2πn/3)`; otherwise the
    /// sign of the main term when its enclosure excludes zero, else 0.
    pub predicted_sign: i8,
    pub actual_sign: i8,
}

/// Evaluates main term and bound at `(p, δ, n, N)` and compares them with the
/// exact coefficient `exact` (which the caller takes from the series engine).
pub fn estimate_report(
    p: u64,
    delta: &Rational,
    n: u64,
    big_n: u64,
    exact: &Rational,
    variant: Variant,
    prec: u32,
) -> Result<EstimateReport> {
    let main = rademacher_main_interval(p, delta, n, big_n, prec)?;
    let bound = theorem_mth_error_bound_interval(p, delta, n, big_n, variant, prec)?;
    let wp = main.prec();
    let diff = Interval::from_rational(exact, wp).sub(&main).abs();
    let within_bound = diff.certainly_le(&bound);
    let predicted = if p == 3 {
        predicted_sign(delta, n as i64)
    } else {
        main.sign().unwrap_or(0)
    };
    Ok(EstimateReport {
        p,
        delta: delta.clone(),
        n,
        big_n,
        variant,
        exact_coeff: exact.clone(),
        main_term: Float::with_val(prec, main.mid()),
        error_bound: Float::with_val(prec, bound.mid()),
        within_bound,
        predicted_sign: predicted,
        actual_sign: exact.cmp0() as i8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::mth1::mth1_quantities;
    use crate::series::borwein_coeffs;
    use rug::float::Constant;

    const P: u32 = 128;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn hypotheses() {
        assert!(rademacher_main(4, &r(1, 1), 5, 1, P).is_err());
        assert!(rademacher_main(3, &r(0, 1), 5, 1, P).is_err());
        assert!(rademacher_main(3, &r(13, 1), 5, 1, P).is_err());
        assert!(rademacher_main(3, &r(12, 1), 5, 1, P).is_ok());
        assert!(rademacher_main(2, &r(24, 1), 1, 1, P).is_err()); // X = 0
        assert!(rademacher_main(2, &r(24, 1), 2, 1, P).is_ok());
        assert!(rademacher_main(2, &r(240001, 10000), 2, 1, P).is_err());
        assert!(rademacher_main(3, &r(1, 1), 0, 1, P).is_err());
    }

    #[test]
    fn euler_f_matches_partition_series() {
        // f(x) = Σ p(n) x^n at x = e^{−2π}
        let parts = crate::series::partition_numbers(60);
        let x = Float::with_val(P, -Float::with_val(P, Constant::Pi) * 2u32).exp();
        let mut s = Float::new(P);
        let mut xn = Float::with_val(P, 1);
        for c in parts.coeffs() {
            s += Float::with_val(P, &xn * c);
            xn *= &x;
        }
        let enc = euler_f_interval(&Interval::pi(P).mul_rational(&r(2, 1)));
        assert!(enc.contains(&s) || Float::with_val(P, &s - enc.mid()).abs() < 1e-36);
        assert!(enc.width() < 1e-36);
    }

    #[test]
    fn variants_agree_at_p3() {
        for d in [r(1, 4), r(1, 1), r(3, 1)] {
            let a = theorem_mth_error_bound(3, &d, 20, 2, Variant::AsStated, P).unwrap();
            let b = theorem_mth_error_bound(3, &d, 20, 2, Variant::ProofGeneral, P).unwrap();
            assert_eq!(a, b);
        }
        let a = theorem_mth_error_bound(5, &r(1, 1), 20, 2, Variant::AsStated, P).unwrap();
        let b = theorem_mth_error_bound(5, &r(1, 1), 20, 2, Variant::ProofGeneral, P).unwrap();
        assert!(a > b);
    }

    #[test]
    fn bound_decreases_in_big_n() {
        let d = r(3, 2);
        let mut prev = None;
        for big_n in 1..6 {
            let b = theorem_mth_error_bound(5, &d, 40, big_n, Variant::ProofGeneral, P).unwrap();
            if let Some(prev) = prev {
                assert!(b < prev);
            }
            prev = Some(b);
        }
    }

    #[test]
    fn n1_main_term_is_c_hat_cos() {
        for d in [r(1, 4), r(1, 1), r(5, 2), r(3, 1)] {
            for n in [1u64, 7, 50, 301] {
                let main = rademacher_main(3, &d, n, 1, P).unwrap();
                let q = mth1_quantities(&d, n as i64, P).unwrap();
                let angle = Rational::from(&d / 18u32) + r(2 * n as i64, 3);
                let cos = Interval::cos_pi_rational(&angle, P).mid();
                let expect = Float::with_val(P, &q.c_hat * &cos);
                // scaled by ĉ: the cosine vanishes on some classes
                let rel = Float::with_val(P, Float::with_val(P, &main - &expect) / &q.c_hat).abs();
                assert!(rel < 1e-30, "δ={d} n={n}: {main} vs {expect}");
            }
        }
    }

    #[test]
    fn small_cases_within_bound() {
        let exact = borwein_coeffs(3, &r(1, 1), 60).unwrap();
        for (n, big_n) in [(10u64, 2u64), (50, 3), (1, 1), (60, 1)] {
            let rep = estimate_report(3, &r(1, 1), n, big_n, &exact.coeffs()[n as usize], Variant::ProofGeneral, P)
                .unwrap();
            assert!(rep.within_bound, "{rep:?}");
        }
    }

    #[test]
    fn large_n_signs_agree() {
        let d = r(3, 1);
        let exact = borwein_coeffs(3, &d, 230).unwrap();
        for n in 200..=230u64 {
            let rep = estimate_report(3, &d, n, 3, &exact.coeffs()[n as usize], Variant::ProofGeneral, P).unwrap();
            assert!(rep.within_bound);
            assert_eq!(rep.predicted_sign, rep.actual_sign, "n={n}");
        }
    }
}
