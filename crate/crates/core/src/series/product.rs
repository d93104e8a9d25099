//! Eta-like infinite products `∏_m (q^m; q^m)_∞^{e_m}` and the Borwein
//! coefficients built from them.

use std::collections::BTreeMap;

use rug::{Integer, Rational};

use super::{series_mul, series_pow, TruncatedSeries};
use crate::error::{domain, Result};

/// `∏_{n≥1} (1 − q^{mn})^{e}` over a list of `(m, e)` factors.
///
/// Moduli are kept distinct and sorted; exponents of repeated moduli are
/// merged and factors with exponent zero dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaLikeProduct {
    factors: Vec<(u64, Rational)>,
}

impl EtaLikeProduct {
    pub fn new<I>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut merged: BTreeMap<u64, Rational> = BTreeMap::new();
        for (m, e) in factors {
            if m == 0 {
                return domain("eta-like product: modulus must be positive");
            }
            *merged.entry(m).or_default() += e;
        }
        let factors = merged.into_iter().filter(|(_, e)| e.cmp0().is_ne()).collect();
        Ok(Self { factors })
    }

    /// `G_p(q)^δ = (q;q)_∞^δ / (q^p;q^p)_∞^δ`.
    pub fn borwein(p: u64, delta: &Rational) -> Result<Self> {
        Self::new([(1, delta.clone()), (p, Rational::from(-delta))])
    }

    pub fn factors(&self) -> &[(u64, Rational)] {
        &self.factors
    }
}

/// `(q^m; q^m)_∞` to the given order via Euler's pentagonal number theorem:
/// `Σ_{j∈Z} (−1)^j q^{m·j(3j−1)/2}`.
pub fn pentagonal_series(m: u64, order: usize) -> TruncatedSeries {
    assert!(m >= 1, "modulus must be positive");
    let mut terms = vec![(0usize, Rational::from(1))];
    let m = m as usize;
    for j in 1usize.. {
        let g1 = m * j * (3 * j - 1) / 2;
        if g1 > order {
            break;
        }
        let sign = if j % 2 == 1 { -1 } else { 1 };
        terms.push((g1, Rational::from(sign)));
        let g2 = m * j * (3 * j + 1) / 2;
        if g2 <= order {
            terms.push((g2, Rational::from(sign)));
        }
    }
    TruncatedSeries::from_terms(order, terms)
}

/// Exact expansion of an eta-like product to `order`.
///
/// Each factor is `(q;q)_∞^e` expanded to `⌊order/m⌋` (pentagonal series raised
/// by the sparse power recurrence), then substituted `q -> q^m`.
pub fn expand_product(prod: &EtaLikeProduct, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for (m, e) in &prod.factors {
        let m = *m as usize;
        if m > order {
            continue;
        }
        let inner = order / m;
        let base = pentagonal_series(1, inner);
        let powered = series_pow(&base, e).expect("pentagonal series has constant term 1");
        acc = series_mul(&acc, &powered.substitute_power(m, order));
    }
    acc
}

/// Borwein coefficients `c_p^{(δ)}(0..=order)` of `G_p(q)^δ`.
///
/// `p` need not be prime. `δ = 0` yields the series `1`.
pub fn borwein_coeffs(p: u64, delta: &Rational, order: usize) -> Result<TruncatedSeries> {
    if p < 2 {
        return domain(format!("borwein_coeffs: p must be at least 2, got {p}"));
    }
    if delta.cmp0().is_lt() {
        return domain(format!("borwein_coeffs: delta must be non-negative, got {delta}"));
    }
    Ok(expand_product(&EtaLikeProduct::borwein(p, delta)?, order))
}

/// Partition numbers `p(0..=order)` by the pentagonal recurrence
/// `p(n) = Σ_{j≥1} (−1)^{j+1} [p(n − j(3j−1)/2) + p(n − j(3j+1)/2)]`.
pub fn partition_numbers(order: usize) -> TruncatedSeries {
    let mut p = vec![Integer::new(); order + 1];
    p[0] = Integer::from(1);
    for n in 1..=order {
        let mut acc = Integer::new();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let mut t = p[n - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                t += &p[n - g2];
            }
            if j % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        p[n] = acc;
    }
    TruncatedSeries::from_integer_form(&Integer::from(1), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().copied())
    }

    /// Literal finite product `∏_{mn ≤ order} (1 − q^{mn})^e` for integer `e`.
    fn brute_force_product(factors: &[(u64, i64)], order: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(order);
        for &(m, e) in factors {
            let mut j = m as usize;
            while j <= order {
                let mut lin = TruncatedSeries::one(order);
                let mut c = lin.clone().into_coeffs();
                c[j] = Rational::from(-1);
                lin = TruncatedSeries::new(c);
                let factor = if e >= 0 {
                    lin
                } else {
                    crate::series::series_inv(&lin).unwrap()
                };
                for _ in 0..e.unsigned_abs() {
                    acc = &acc * &factor;
                }
                j += m as usize;
            }
        }
        acc
    }

    /// Counts partitions by enumeration (parts non-increasing).
    fn count_partitions(n: usize, max_part: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max_part.min(n)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn pentagonal_matches_finite_product() {
        let got = expand_product(&EtaLikeProduct::new([(1, Rational::from(1))]).unwrap(), 7);
        assert_eq!(got, ints(&[1, -1, -1, 0, 0, 1, 0, 1]));
        assert_eq!(got, brute_force_product(&[(1, 1)], 7));
    }

    #[test]
    fn cancelling_factors_give_one() {
        let p = EtaLikeProduct::new([(1, Rational::from(1)), (1, Rational::from(-1))]).unwrap();
        assert!(p.factors().is_empty());
        assert_eq!(expand_product(&p, 30), TruncatedSeries::one(30));
    }

    #[test]
    fn cube_is_jacobi_series() {
        let got = expand_product(&EtaLikeProduct::new([(1, Rational::from(3))]).unwrap(), 9);
        assert_eq!(got, brute_force_product(&[(1, 3)], 9));
        // Σ (−1)^l (2l+1) q^{l(l+1)/2}
        assert_eq!(got, ints(&[1, -3, 0, 5, 0, 0, -7, 0, 0, 0]));
    }

    #[test]
    fn mixed_integer_exponents_match_brute_force() {
        let factors = [(1u64, 2i64), (2, -3), (3, 1), (5, -2)];
        let prod =
            EtaLikeProduct::new(factors.iter().map(|&(m, e)| (m, Rational::from(e)))).unwrap();
        assert_eq!(expand_product(&prod, 60), brute_force_product(&factors, 60));
    }

    #[test]
    fn borwein_p3_delta1() {
        let c = borwein_coeffs(3, &Rational::from(1), 6).unwrap();
        assert_eq!(c, brute_force_product(&[(1, 1), (3, -1)], 6));
        assert_eq!(c, ints(&[1, -1, -1, 1, -1, 0, 2]));
    }

    #[test]
    fn borwein_domain() {
        assert!(borwein_coeffs(1, &Rational::from(1), 5).is_err());
        assert!(borwein_coeffs(3, &Rational::from(-1), 5).is_err());
        assert_eq!(borwein_coeffs(5, &Rational::new(), 4).unwrap(), TruncatedSeries::one(4));
    }

    #[test]
    fn partitions_small() {
        let p = partition_numbers(10);
        assert_eq!(p, ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]));
        for n in 0..=10 {
            assert_eq!(p.coeffs()[n], count_partitions(n, n));
        }
    }

    #[test]
    fn partition_generating_function_inverts_euler_product() {
        let p = partition_numbers(200);
        let euler = pentagonal_series(1, 200);
        assert_eq!(&p * &euler, TruncatedSeries::one(200));
        assert_eq!(crate::series::series_inv(&euler).unwrap(), p);
    }
}
