use rug::Rational;
use serde::Serialize;

use super::lambert::Lambert;
use crate::series::{expand_product, EtaLikeProduct, TruncatedSeries};

/// `∏ (q^m;q^m)_∞^{e}` over integer exponents.
pub(crate) fn eta(factors: &[(u64, i64)], order: usize) -> TruncatedSeries {
    let prod = EtaLikeProduct::new(factors.iter().map(|&(m, e)| (m, Rational::from(e))))
        .expect("positive moduli");
    expand_product(&prod, order)
}

pub(crate) fn max_abs_diff(a: &TruncatedSeries, b: &TruncatedSeries) -> Rational {
    (a - b).max_abs()
}

/// `Σ_{n∈Z} q^{n²}`.
fn theta3(order: usize) -> TruncatedSeries {
    let mut c = vec![0i64; order + 1];
    let mut n = 0usize;
    while n * n <= order {
        c[n * n] += if n == 0 { 1 } else { 2 };
        n += 1;
    }
    TruncatedSeries::from_integers(c)
}

/// Number of `(a, b) ∈ Z²` with `a² + b² = n`, by enumeration.
fn lattice_r2(order: usize) -> TruncatedSeries {
    let mut c = vec![0i64; order + 1];
    let r = (order as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            let n = (a * a + b * b) as usize;
            if n <= order {
                c[n] += 1;
            }
        }
    }
    TruncatedSeries::from_integers(c)
}

/// Largest coefficient difference among `(Σ q^{n²})²`, the lattice count
/// `r_2(n)`, the product `(−q,−q,q²;q²)_∞²` and
/// `1 + 4Σ(q^{4n+1}/(1−q^{4n+1}) − q^{4n+3}/(1−q^{4n+3}))`.
pub fn two_squares_check(order: usize) -> Rational {
    let lambert = Lambert::new(order).constant(1).progression(1, 4, 4, 1).progression(3, 4, -4, 1).finish();
    let t = theta3(order);
    let square = &t * &t;
    // (−q;q²)_∞ = (q²;q⁴)/(q;q²) = (q²;q²)²/((q;q)(q⁴;q⁴))
    let product = eta(&[(1, -2), (2, 5), (4, -2)], order);
    let product = &product * &product;
    [square, lattice_r2(order), product]
        .iter()
        .map(|s| max_abs_diff(s, &lambert))
        .max()
        .unwrap()
}

/// Residuals of the four cubic theta identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicResiduals {
    /// `((q;q)³ + 3q(q⁹;q⁹)³)/(q³;q³)` against its Lambert series.
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub cth: Rational,
    /// `a(q³) = b(q) + c(q³)`.
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub abc2: Rational,
    /// `a³ = b³ + c³`.
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub cubic: Rational,
    /// Lambert form of `a(q)`.
    #[serde(serialize_with = "crate::identities::ser_rational")]
    pub a_lambert: Rational,
}

impl CubicResiduals {
    pub fn all_zero(&self) -> bool {
        [&self.cth, &self.abc2, &self.cubic, &self.a_lambert].iter().all(|r| r.cmp0().is_eq())
    }
}

/// `a(q) = Σ_{m,n∈Z} q^{m²+mn+n²}`. Since `m²+mn+n² ≥ (m²+n²)/2`, the box
/// `|m|, |n| ≤ √(2N)` holds every pair contributing up to `q^N`.
pub fn cubic_a(order: usize) -> TruncatedSeries {
    let mut c = vec![0i64; order + 1];
    let r = ((2 * order) as f64).sqrt() as i64 + 1;
    for m in -r..=r {
        for n in -r..=r {
            let e = m * m + m * n + n * n;
            if e as usize <= order {
                c[e as usize] += 1;
            }
        }
    }
    TruncatedSeries::from_integers(c)
}

pub fn cubic_theta_check(order: usize) -> CubicResiduals {
    let a = cubic_a(order);
    let b = eta(&[(1, 3), (3, -1)], order);
    let c_cubed = eta(&[(1, -3), (3, 9)], order).shift(1).scale(&Rational::from(27));
    let c_of_q3 = eta(&[(3, -1), (9, 3)], order).shift(1).scale(&Rational::from(3));

    let cth_lhs = &(&eta(&[(1, 3)], order) + &eta(&[(9, 3)], order).shift(1).scale(&Rational::from(3)))
        * &eta(&[(3, -1)], order);
    let cth_rhs = Lambert::new(order).constant(1).progression(3, 9, 6, 1).progression(6, 9, -6, 1).finish();

    let a_q3 = a.substitute_power(3, order);
    let a_lambert = Lambert::new(order).constant(1).progression(1, 3, 6, 1).progression(2, 3, -6, 1).finish();

    let cube = |s: &TruncatedSeries| &(s * s) * s;
    CubicResiduals {
        cth: max_abs_diff(&cth_lhs, &cth_rhs),
        abc2: max_abs_diff(&a_q3, &(&b + &c_of_q3)),
        cubic: max_abs_diff(&cube(&a), &(&cube(&b) + &c_cubed)),
        a_lambert: max_abs_diff(&a, &a_lambert),
    }
}
