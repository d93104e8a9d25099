//! Reciprocals and rational powers of series with unit constant term.
//!
//! `F = a^δ` is the unique series with `F(0) = 1` and `a·F' = δ·a'·F`.
//! Comparing coefficients of `q^{n-1}` gives, for `a(0) = 1`,
//!
//! ```text
//! n·F_n = Σ_{k=1..n} ((δ+1)·k − n) · a_k · F_{n−k}
//! ```
//!
//! which is evaluated in one of three exact ways depending on the inputs.

use rug::{Integer, Rational};

use super::{series_mul, TruncatedSeries};
use crate::error::{domain, Result};

/// Multiplicative inverse of `a` to the order of `a`.
pub fn series_inv(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = &a.coeffs()[0];
    if a0.cmp0().is_eq() {
        return domain("series_inv: constant term is zero");
    }
    let order = a.order();
    if a.is_integral() && (*a0 == 1 || *a0 == -1) {
        let sign = a0.numer().clone();
        let (_, ak) = a.integer_form();
        let support: Vec<usize> = (1..=order).filter(|&k| ak[k] != 0).collect();
        let mut b = vec![Integer::new(); order + 1];
        b[0] = sign.clone();
        for n in 1..=order {
            let mut acc = Integer::new();
            for &k in &support {
                if k > n {
                    break;
                }
                acc += &ak[k] * &b[n - k];
            }
            // 1/a0 == a0 for a0 = ±1
            b[n] = -(acc * &sign);
        }
        return Ok(TruncatedSeries::from_integer_form(&Integer::from(1), b));
    }
    let inv_a0 = Rational::from(a0.recip_ref());
    let support: Vec<usize> = (1..=order).filter(|&k| a.coeffs()[k].cmp0().is_ne()).collect();
    let mut b: Vec<Rational> = Vec::with_capacity(order + 1);
    b.push(inv_a0.clone());
    for n in 1..=order {
        let mut acc = Rational::new();
        for &k in &support {
            if k > n {
                break;
            }
            acc += Rational::from(&a.coeffs()[k] * &b[n - k]);
        }
        b.push(-(acc * &inv_a0));
    }
    Ok(TruncatedSeries::new(b))
}

/// `a^δ` for a series with constant term 1 and any rational `δ`.
pub fn series_pow(a: &TruncatedSeries, delta: &Rational) -> Result<TruncatedSeries> {
    if a.coeffs()[0] != 1 {
        return domain(format!(
            "series_pow: constant term must be 1, got {}",
            a.coeffs()[0]
        ));
    }
    let order = a.order();
    if delta.cmp0().is_eq() {
        return Ok(TruncatedSeries::one(order));
    }
    if a.is_integral() {
        if *delta.denom() == 1 {
            return Ok(pow_integral_base_integer_exponent(a, delta.numer()));
        }
        return Ok(pow_integral_base(a, delta));
    }
    if *delta.denom() == 1 {
        return pow_by_squaring(a, delta.numer());
    }
    Ok(pow_rational_recurrence(a, delta))
}

fn support_of(ak: &[Integer]) -> Vec<usize> {
    (1..ak.len()).filter(|&k| ak[k] != 0).collect()
}

/// Integer base, integer exponent: the recurrence stays in `Z` and the
/// division by `n` is exact.
fn pow_integral_base_integer_exponent(a: &TruncatedSeries, e: &Integer) -> TruncatedSeries {
    let order = a.order();
    let (_, ak) = a.integer_form();
    let support = support_of(&ak);
    let e1 = Integer::from(e + 1);
    let mut f = vec![Integer::new(); order + 1];
    f[0] = Integer::from(1);
    for n in 1..=order {
        let mut acc = Integer::new();
        for &k in &support {
            if k > n {
                break;
            }
            let weight = Integer::from(&e1 * k as u64) - n as u64;
            acc += weight * &ak[k] * &f[n - k];
        }
        acc.div_exact_u_mut(n as u32);
        f[n] = acc;
    }
    TruncatedSeries::from_integer_form(&Integer::from(1), f)
}

/// Integer base, exponent `num/den`. Writing `F_j = G_j / (den^j · j!)` turns
/// the recurrence into
///
/// ```text
/// G_n = Σ_k ((num+den)·k − den·n) · a_k · G_{n−k} · den^{k−1} · (n−1)!/(n−k)!
/// ```
///
/// which needs no gcd until each `F_n` is reduced once at the end.
fn pow_integral_base(a: &TruncatedSeries, delta: &Rational) -> TruncatedSeries {
    let order = a.order();
    let (_, ak) = a.integer_form();
    let support = support_of(&ak);
    let num = delta.numer();
    let den = delta.denom();
    let num_plus_den = Integer::from(num + den);

    let mut g = vec![Integer::new(); order + 1];
    g[0] = Integer::from(1);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rational::from(1));
    let mut scale = Integer::from(1); // den^n · n!
    for n in 1..=order {
        let mut acc = Integer::new();
        // w = den^{k-1} (n-1)!/(n-k)!, advanced for every k so sparse bases
        // still see the right weight.
        let mut w = Integer::from(1);
        let mut next = 0usize;
        let last = support.partition_point(|&k| k <= n);
        for k in 1..=n {
            if next >= last {
                break;
            }
            if k > 1 {
                w *= den;
                w *= (n - k + 1) as u32;
            }
            if support[next] != k {
                continue;
            }
            next += 1;
            let weight = Integer::from(&num_plus_den * k as u64) - Integer::from(den * n as u64);
            acc += weight * &ak[k] * &g[n - k] * &w;
        }
        scale *= den;
        scale *= n as u32;
        coeffs.push(Rational::from((acc.clone(), scale.clone())));
        g[n] = acc;
    }
    TruncatedSeries::new(coeffs)
}

fn pow_by_squaring(a: &TruncatedSeries, e: &Integer) -> Result<TruncatedSeries> {
    let mut base = if e.cmp0().is_lt() { series_inv(a)? } else { a.clone() };
    let mut remaining = Integer::from(e.abs_ref());
    let mut acc = TruncatedSeries::one(a.order());
    while remaining != 0 {
        if remaining.is_odd() {
            acc = series_mul(&acc, &base);
        }
        remaining >>= 1;
        if remaining != 0 {
            base = series_mul(&base, &base);
        }
    }
    Ok(acc)
}

fn pow_rational_recurrence(a: &TruncatedSeries, delta: &Rational) -> TruncatedSeries {
    let order = a.order();
    let support: Vec<usize> = (1..=order).filter(|&k| a.coeffs()[k].cmp0().is_ne()).collect();
    let delta1 = Rational::from(delta + 1);
    let mut f: Vec<Rational> = Vec::with_capacity(order + 1);
    f.push(Rational::from(1));
    for n in 1..=order {
        let mut acc = Rational::new();
        for &k in &support {
            if k > n {
                break;
            }
            let weight = Rational::from(&delta1 * k as u32) - n as u32;
            acc += weight * &a.coeffs()[k] * &f[n - k];
        }
        f.push(acc / n as u32);
    }
    TruncatedSeries::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().copied())
    }

    #[test]
    fn geometric_series() {
        assert_eq!(series_inv(&s(&[1, -1, 0, 0, 0])).unwrap(), s(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn inverse_of_rational_series() {
        let a = TruncatedSeries::new(vec![r(2, 1), r(1, 3), r(-1, 5), r(0, 1)]);
        let b = series_inv(&a).unwrap();
        assert_eq!(&a * &b, TruncatedSeries::one(3));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert!(series_inv(&s(&[0, 1, 2])).is_err());
        assert!(series_pow(&s(&[2, 1]), &r(1, 2)).is_err());
    }

    #[test]
    fn square_root_of_one_minus_q() {
        // binomial series (1-q)^{1/2} = Σ binom(1/2, n)(-q)^n
        let mut expect = vec![Rational::from(1)];
        let mut binom = Rational::from(1);
        for n in 1..=3u32 {
            binom = binom * (r(1, 2) - Rational::from(n - 1)) / n;
            let sign = if n % 2 == 1 { -1 } else { 1 };
            expect.push(Rational::from(&binom * sign));
        }
        let got = series_pow(&s(&[1, -1, 0, 0]), &r(1, 2)).unwrap();
        assert_eq!(got, TruncatedSeries::new(expect));
        assert_eq!(got.coeffs(), &[r(1, 1), r(-1, 2), r(-1, 8), r(-1, 16)]);
    }

    #[test]
    fn every_path_agrees() {
        let a_int = s(&[1, -2, 0, 3, 1, 0, -1, 4]);
        let d = r(-7, 3);
        let fast = pow_integral_base(&a_int, &d);
        let slow = pow_rational_recurrence(&a_int, &d);
        assert_eq!(fast, slow);

        let e = Integer::from(5);
        assert_eq!(
            pow_integral_base_integer_exponent(&a_int, &e),
            pow_by_squaring(&a_int, &e).unwrap()
        );
        let e = Integer::from(-3);
        assert_eq!(
            pow_integral_base_integer_exponent(&a_int, &e),
            pow_by_squaring(&a_int, &e).unwrap()
        );
        assert_eq!(
            pow_rational_recurrence(&a_int, &Rational::from(-3)),
            pow_by_squaring(&a_int, &e).unwrap()
        );
    }

    #[test]
    fn zeroth_power_is_one() {
        let a = TruncatedSeries::new(vec![r(1, 1), r(5, 7), r(-2, 3)]);
        assert_eq!(series_pow(&a, &Rational::new()).unwrap(), TruncatedSeries::one(2));
    }
}
