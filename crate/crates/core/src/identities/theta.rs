//! `θ(z;q) = (z, q/z; q)_∞ = (1/(q;q)_∞) Σ_{n∈Z} (−1)^n q^{n(n−1)/2} z^n`.

use std::cmp::Ordering;

use rug::{Float, Rational};

use crate::error::{domain, Result};
use crate::series::{pentagonal_series, series_inv, TruncatedSeries};

/// Coefficients of `z^m q^n` for `|m| ≤ z_degree`, `0 ≤ n ≤ q_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    z_degree: usize,
    rows: Vec<TruncatedSeries>,
}

impl BivariateSeries {
    pub fn zero(z_degree: usize, q_order: usize) -> Self {
        Self { z_degree, rows: vec![TruncatedSeries::zero(q_order); 2 * z_degree + 1] }
    }

    pub fn z_degree(&self) -> usize {
        self.z_degree
    }

    pub fn q_order(&self) -> usize {
        self.rows[0].order()
    }

    /// Coefficient series of `z^m` (zero outside the window).
    pub fn row(&self, m: i64) -> Option<&TruncatedSeries> {
        let idx = m + self.z_degree as i64;
        (0..self.rows.len() as i64).contains(&idx).then(|| &self.rows[idx as usize])
    }

    pub fn coeff(&self, m: i64, n: usize) -> Option<&Rational> {
        self.row(m)?.coeff(n)
    }

    fn add_term(&mut self, m: i64, n: usize, c: i64) {
        if m.unsigned_abs() as usize <= self.z_degree && n <= self.q_order() {
            let row = &mut self.rows[(m + self.z_degree as i64) as usize];
            let mut coeffs = std::mem::replace(row, TruncatedSeries::zero(0)).into_coeffs();
            coeffs[n] += c;
            *row = TruncatedSeries::new(coeffs);
        }
    }

    /// Multiplies every `z`-row by a series in `q` alone.
    pub fn mul_q(&self, s: &TruncatedSeries) -> Self {
        Self { z_degree: self.z_degree, rows: self.rows.iter().map(|r| r * s).collect() }
    }

    /// Restricts to the window `|m| ≤ z_degree`, `n ≤ q_order`.
    pub fn crop(&self, z_degree: usize, q_order: usize) -> Self {
        assert!(z_degree <= self.z_degree && q_order <= self.q_order());
        let off = self.z_degree - z_degree;
        Self {
            z_degree,
            rows: self.rows[off..off + 2 * z_degree + 1].iter().map(|r| r.truncate(q_order)).collect(),
        }
    }

    /// Largest coefficient difference over the common window.
    pub fn max_abs_diff(&self, other: &Self) -> Rational {
        let m = self.z_degree.min(other.z_degree);
        let n = self.q_order().min(other.q_order());
        let (a, b) = (self.crop(m, n), other.crop(m, n));
        a.rows.iter().zip(&b.rows).map(|(x, y)| (x - y).max_abs()).max().unwrap_or_default()
    }
}

impl std::ops::Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, o: &BivariateSeries) -> BivariateSeries {
        let m = self.z_degree.min(o.z_degree);
        let n = self.q_order().min(o.q_order());
        let (a, b) = (self.crop(m, n), o.crop(m, n));
        BivariateSeries { z_degree: m, rows: a.rows.iter().zip(&b.rows).map(|(x, y)| x + y).collect() }
    }
}

/// `Σ_n (−1)^n Q^{n(n−1)/2} w^n` with `Q = q^big_q` and
/// `w = sign · z^{z_step} · q^{q_shift}`, shifted by `z^{z_offset} q^{q_offset}`
/// and scaled by `c`, over the given window. Only terms with nonnegative
/// total `q`-exponent may land in the window; others are a caller bug.
#[allow(clippy::too_many_arguments)]
fn add_theta_sum(
    out: &mut BivariateSeries,
    big_q: i64,
    sign: i64,
    z_step: i64,
    q_shift: i64,
    z_offset: i64,
    q_offset: i64,
    c: i64,
) {
    let m_max = out.z_degree as i64;
    let n_max = out.q_order() as i64;
    // z-exponent z_offset + z_step·n must stay inside the window
    let reach = (m_max + z_offset.abs()) / z_step + 1;
    for n in -reach..=reach {
        let m = z_offset + z_step * n;
        let e = q_offset + big_q * n * (n - 1) / 2 + q_shift * n;
        if m.abs() > m_max || e > n_max {
            continue;
        }
        assert!(e >= 0, "negative q-exponent in theta expansion");
        let s = if n.rem_euclid(2) == 0 { 1 } else { -1 } * sign.pow(n.rem_euclid(2) as u32);
        out.add_term(m, e as usize, c * s);
    }
}

/// `θ(z;q)` on the window `|m| ≤ z_degree`, `n ≤ order`.
pub fn theta_series(z_degree: usize, order: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(z_degree, order);
    add_theta_sum(&mut s, 1, 1, 1, 0, 0, 0, 1);
    let inv = series_inv(&pentagonal_series(1, order)).expect("unit constant term");
    s.mul_q(&inv)
}

/// Integers `ℓ` with `⌈(1−k)/2⌉ ≤ ℓ ≤ ⌈(k−1)/2⌉`; there are exactly `k` of them.
pub fn jtpe_range(k: u64) -> std::ops::RangeInclusive<i64> {
    let k = k as i64;
    let lo = (1 - k).div_euclid(2) + i64::from((1 - k).rem_euclid(2) != 0);
    let hi = (k - 1).div_euclid(2) + i64::from((k - 1).rem_euclid(2) != 0);
    lo..=hi
}

/// `θ(z;q)` minus its `k`-dissection
/// `((q^{k²};q^{k²})/(q;q)) Σ_ℓ (−1)^ℓ q^{ℓ(ℓ−1)/2} z^ℓ θ((−1)^{k−1} z^k q^{k(k−1+2ℓ)/2}; q^{k²})`,
/// each `θ(·; q^{k²})` expanded by its own sum over `(q^{k²};q^{k²})`.
pub fn theta_dissection_residual(k: u64, z_degree: usize, order: usize) -> Rational {
    assert!(k >= 1, "k must be positive");
    let lhs = theta_series(z_degree, order);
    let kk = k as i64;
    let big_q = kk * kk;
    let sign = if kk % 2 == 1 { 1 } else { -1 };
    // widen by k so every z^ℓ-shifted inner term that can land in the window is kept
    let wide = z_degree + k as usize;
    let inv_big = series_inv(&pentagonal_series(big_q as u64, order)).expect("unit constant term");
    let mut rhs = BivariateSeries::zero(wide, order);
    for l in jtpe_range(k) {
        let mut inner = BivariateSeries::zero(wide, order);
        let c = if l.rem_euclid(2) == 0 { 1 } else { -1 };
        add_theta_sum(&mut inner, big_q, sign, kk, kk * (kk - 1 + 2 * l) / 2, l, l * (l - 1) / 2, c);
        rhs = &rhs + &inner.mul_q(&inv_big);
    }
    let prefactor = &pentagonal_series(big_q as u64, order)
        * &series_inv(&pentagonal_series(1, order)).expect("unit constant term");
    lhs.max_abs_diff(&rhs.mul_q(&prefactor))
}

/// `θ(x; q) = ∏_{n≥0} (1 − x q^n)(1 − q^{n+1}/x)` for real `x ≠ 0`, `0 < q < 1`,
/// truncated once `q^n < 2^{−prec−8}`.
fn theta_real(x: &Float, q: &Float, prec: u32) -> Float {
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let mut acc = Float::with_val(prec, 1);
    let mut qn = Float::with_val(prec, 1);
    let inv_x = Float::with_val(prec, x.recip_ref());
    loop {
        acc *= Float::with_val(prec, 1 - Float::with_val(prec, x * &qn));
        qn *= q;
        acc *= Float::with_val(prec, 1 - Float::with_val(prec, &qn * &inv_x));
        if qn < eps {
            return acc;
        }
    }
}

fn check_q(q: &Float) -> Result<()> {
    if q.cmp0() != Some(Ordering::Greater) || *q >= 1 {
        return domain(format!("q must lie in (0, 1), got {q}"));
    }
    Ok(())
}

/// `|D − θ(s q^α; q)·Λ|` with `s = (−1)^k`, where `D` is the central
/// difference `(g(h) − g(−h))/(2h)` of `g(x) = θ(s q^α e^{−x}; q)` and
/// `Λ = Σ_{n≥0} (s q^{n+α}/(1 − s q^{n+α}) − s q^{n+1−α}/(1 − s q^{n+1−α}))`.
pub fn lambert_derivative_check(k: i64, alpha: &Rational, q: &Float, step: &Float, prec: u32) -> Result<Float> {
    if alpha.cmp0() != Ordering::Greater || *alpha >= 1 {
        return domain(format!("α must lie in (0, 1), got {alpha}"));
    }
    check_q(q)?;
    if step.cmp0() != Some(Ordering::Greater) {
        return domain("step must be positive");
    }
    let q = Float::with_val(prec, q);
    let h = Float::with_val(prec, step);
    let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let q_alpha = Float::with_val(prec, Float::with_val(prec, q.ln_ref()) * Float::with_val(prec, alpha)).exp();
    let x0 = Float::with_val(prec, &q_alpha * s);
    let g = |t: &Float| theta_real(&Float::with_val(prec, &x0 * Float::with_val(prec, -t).exp()), &q, prec);
    let diff = Float::with_val(prec, g(&h) - g(&Float::with_val(prec, -&h))) / Float::with_val(prec, &h * 2u32);

    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let mut lambda = Float::new(prec);
    let mut a = Float::with_val(prec, &x0); // s·q^{n+α}
    let mut b = Float::with_val(prec, Float::with_val(prec, &q / &q_alpha) * s); // s·q^{n+1−α}
    while a.clone().abs() >= eps || b.clone().abs() >= eps {
        lambda += Float::with_val(prec, &a / Float::with_val(prec, 1 - &a));
        lambda -= Float::with_val(prec, &b / Float::with_val(prec, 1 - &b));
        a *= &q;
        b *= &q;
    }
    let rhs = theta_real(&x0, &q, prec) * lambda;
    Ok(Float::with_val(prec, diff - rhs).abs())
}

/// `|D − (q;q)_∞²|` where `D` is the central difference of `θ(e^{−x}; q)` at 0.
pub fn theta_derivative_check(q: &Float, step: &Float, prec: u32) -> Result<Float> {
    check_q(q)?;
    let q = Float::with_val(prec, q);
    let h = Float::with_val(prec, step);
    let g = |t: Float| theta_real(&Float::with_val(prec, -t).exp(), &q, prec);
    let diff = Float::with_val(prec, g(h.clone()) - g(Float::with_val(prec, -&h))) / Float::with_val(prec, &h * 2u32);
    // (q;q)_∞ by direct product
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let mut euler = Float::with_val(prec, 1);
    let mut qn = q.clone();
    while qn >= eps {
        euler *= Float::with_val(prec, 1 - &qn);
        qn *= &q;
    }
    Ok(Float::with_val(prec, diff - Float::with_val(prec, euler.square_ref())).abs())
}
