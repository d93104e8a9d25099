//! Exact truncated power series over the rationals.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of `q^0 ..= q^N`
//! exactly and nothing beyond. Every binary operation truncates to the smaller
//! of the two orders, so precision is never silently invented.

mod io;
mod power;
mod product;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

pub use io::{format_rational, read_csv, write_csv};
pub use power::{series_inv, series_pow};
pub use product::{
    borwein_coeffs, expand_product, partition_numbers, pentagonal_series, EtaLikeProduct,
};

/// Exact power series in `q`, truncated after `q^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty: a series always knows at least its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        Rational: From<T>,
    {
        Self::new(coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::new(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::from(1), 0, order)
    }

    /// `c·q^exponent` truncated at `order` (zero if `exponent > order`).
    pub fn monomial(c: Rational, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms; terms
    /// beyond `order` are dropped and repeated exponents accumulate.
    pub fn from_terms<I>(order: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; `None` when `n` is beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Drops every coefficient above `order`. Asking for a larger order than
    /// is known is clamped to the current order.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0().is_eq())
    }

    /// True when every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| *c.denom() == 1)
    }

    /// Largest absolute coefficient (zero for the zero series).
    pub fn max_abs(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|c| Rational::from(c.abs_ref()))
            .max()
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect() }
    }

    /// Multiplies by `q^shift`, keeping the order fixed.
    pub fn shift(&self, shift: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + shift > order {
                break;
            }
            out.coeffs[n + shift] = c.clone();
        }
        out
    }

    /// Substitutes `q -> q^m`. The result is exact up to `m·(order+1) - 1`;
    /// `target_order` must not exceed that.
    pub fn substitute_power(&self, m: usize, target_order: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        assert!(
            target_order < m * (self.order() + 1),
            "q -> q^{m} of an order-{} series is only known to order {}",
            self.order(),
            m * (self.order() + 1) - 1
        );
        let mut out = Self::zero(target_order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * m > target_order {
                break;
            }
            out.coeffs[n * m] = c.clone();
        }
        out
    }

    /// Exact Cauchy product truncated to the smaller order.
    pub fn mul_series(&self, other: &Self) -> Self {
        series_mul(self, other)
    }

    /// Number of nonzero coefficients.
    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| c.cmp0().is_ne()).count()
    }

    /// Lowest common denominator of the coefficients together with the
    /// integer numerators over it.
    pub(crate) fn integer_form(&self) -> (Integer, Vec<Integer>) {
        let mut lcd = Integer::from(1);
        for c in &self.coeffs {
            if *c.denom() != 1 {
                lcd.lcm_mut(c.denom());
            }
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                if lcd == 1 {
                    c.numer().clone()
                } else {
                    Integer::from(&lcd / c.denom()) * c.numer()
                }
            })
            .collect();
        (lcd, nums)
    }

    pub(crate) fn from_integer_form(denominator: &Integer, nums: Vec<Integer>) -> Self {
        let coeffs = nums
            .into_iter()
            .map(|n| {
                if *denominator == 1 {
                    Rational::from(n)
                } else {
                    Rational::from((n, denominator.clone()))
                }
            })
            .collect();
        Self { coeffs }
    }
}

/// Exact Cauchy product of two series, truncated to `min(order_a, order_b)`.
///
/// Coefficients are brought to a common denominator per operand so the inner
/// convolution runs over integers and each output coefficient is reduced once.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let (da, na) = a.truncate(order).integer_form();
    let (db, nb) = b.truncate(order).integer_form();
    let nz_b: Vec<usize> = (0..=order).filter(|&j| nb[j] != 0).collect();
    let mut out = vec![Integer::new(); order + 1];
    for (i, x) in na.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for &j in &nz_b {
            if i + j > order {
                break;
            }
            out[i + j] += x * &nb[j];
        }
    }
    TruncatedSeries::from_integer_form(&(da * db), out)
}

fn zip_with(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&Rational, &Rational) -> Rational,
) -> TruncatedSeries {
    let order = a.order().min(b.order());
    TruncatedSeries {
        coeffs: (0..=order).map(|n| f(&a.coeffs[n], &b.coeffs[n])).collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| Rational::from(x + y))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| Rational::from(x - y))
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        series_mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[order {}](", self.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.cmp0().is_eq() {
                continue;
            }
            let neg = c.cmp0().is_lt();
            let mag = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ if mag == 1 => {}
                _ => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = s(&[1, 1, 0]);
        let b = s(&[1, -1, 0]);
        assert_eq!(&a * &b, s(&[1, 0, -1]));
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let a = s(&[1, 1, 1, 1, 1]);
        let b = s(&[1, 2]);
        let c = &a * &b;
        assert_eq!(c.order(), 1);
        assert_eq!(c, s(&[1, 3]));
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn rational_product_reduces() {
        let a = TruncatedSeries::new(vec![Rational::from((1, 2)), Rational::from((1, 3))]);
        let b = TruncatedSeries::new(vec![Rational::from(2), Rational::from((3, 4))]);
        let c = &a * &b;
        assert_eq!(c.coeffs()[0], 1);
        assert_eq!(c.coeffs()[1], Rational::from((3, 8)) + Rational::from((2, 3)));
    }

    #[test]
    fn shift_and_substitute() {
        let a = s(&[1, 2, 3, 4]);
        assert_eq!(a.shift(2), s(&[0, 0, 1, 2]));
        assert_eq!(a.substitute_power(2, 6), s(&[1, 0, 2, 0, 3, 0, 4]));
    }

    #[test]
    #[should_panic]
    fn substitute_refuses_unknown_coefficients() {
        s(&[1, 2]).substitute_power(3, 6);
    }

    #[test]
    fn display_is_readable() {
        let a = TruncatedSeries::new(vec![
            Rational::from(1),
            Rational::from(-1),
            Rational::from((-1, 8)),
        ]);
        assert_eq!(a.to_string(), "1 - q - 1/8*q^2 + O(q^3)");
    }
}
