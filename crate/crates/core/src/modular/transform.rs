//! Two-sided numeric check of the modular transformation of `G_p(q)^δ`.
//!
//! For `gcd(h,k) = 1`, `d = gcd(p,k)`, `h·h' ≡ −1 (mod k)` and
//! `(hp/d)·h_d' ≡ −1 (mod k/d)`:
//!
//! ```text
//! G_p(e^{2πih/k − 2πz/k²})^δ
//!   = (p/d)^{δ/2} (ω_{h,k}^{-1} ω_{ph/d,k/d})^δ · exp(δ·E(z)) · Ĝ^δ,
//! Ĝ = f(e^{2πi·d·h_d'/k − 2πd²/(pz)}) / f(e^{2πih'/k − 2π/z})
//! ```
//!
//! with `E(z) = π(d²−p)/(12pz) − (p−1)πz/(12k²)` in general, which equals the
//! displayed `π(d²−3)/(36z) − πz/(6k²)` only when `p = 3`.
//!
//! The congruences carry `−1`, as in the classical Dedekind eta
//! transformation; with `+1` the nomes on the right are conjugated and the
//! identity fails for every `k > 2`.
//!
//! Both sides are evaluated through logarithms of truncated Euler products,
//! `log ∏(1 − x^n) = Σ Log(1 − x^n)`, which is the branch that continues
//! analytically from `x = 0`.

use rug::float::Constant;
use rug::{Float, Integer, Rational};

use super::dedekind::dedekind_sum;
use super::is_prime;
use super::phase::{principal_power, PhaseAngle};
use crate::error::{domain, Result};
use crate::numeric::Complex;
use crate::Variant;

const GUARD_BITS: u32 = 32;

/// The data `(h, k, p, d, h', h_d')` of one transformation instance, with
/// `h·h' ≡ −1 (mod k)` and `(hp/d)·h_d' ≡ −1 (mod k/d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformContext {
    h: i64,
    k: u64,
    p: u64,
    d: u64,
    h_prime: i64,
    h_d_prime: i64,
}

fn inverse_mod(a: i64, m: u64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let inv = Integer::from(a).invert(&Integer::from(m)).ok()?;
    inv.to_i64()
}

impl TransformContext {
    /// `h` is canonicalised to `h mod k`.
    pub fn new(h: i64, k: u64, p: u64) -> Result<Self> {
        if k == 0 {
            return domain("transform: k must be positive");
        }
        if !is_prime(p) {
            return domain(format!("transform: p = {p} is not prime"));
        }
        let h = h.rem_euclid(k as i64);
        let Some(h_prime) = inverse_mod(-h, k) else {
            return domain(format!("transform: gcd({h}, {k}) != 1"));
        };
        let d = Integer::from(p).gcd(&Integer::from(k)).to_u64().unwrap();
        let hp_d = h * (p / d) as i64;
        let h_d_prime = inverse_mod((-hp_d).rem_euclid((k / d) as i64), k / d)
            .expect("hp/d is a unit modulo k/d");
        Ok(Self { h, k, p, d, h_prime, h_d_prime })
    }

    pub fn h(&self) -> i64 {
        self.h
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn h_prime(&self) -> i64 {
        self.h_prime
    }
    pub fn h_d_prime(&self) -> i64 {
        self.h_d_prime
    }

    /// Principal angle of `ω_{h,k}^{-1} ω_{ph/d,k/d}`.
    pub fn multiplier_angle(&self) -> PhaseAngle {
        let hp = self.h * (self.p / self.d) as i64;
        let t = dedekind_sum(hp, self.k / self.d).expect("coprime by construction")
            - dedekind_sum(self.h, self.k).expect("coprime by construction");
        PhaseAngle::from_pi_multiple(&t)
    }
}

/// Truncation policy for the infinite products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    /// Always take at least this many factors.
    pub min_terms: usize,
    /// Never take more than this many factors (`None`: no cap).
    pub max_terms: Option<usize>,
}

impl Truncation {
    /// At least `order` factors, then continue until `|x^n| < 2^{−prec−8}`.
    pub fn adaptive(order: usize) -> Self {
        Self { min_terms: order, max_terms: None }
    }

    /// Exactly the factors `n ≤ order` (fewer if the tail is already negligible).
    pub fn capped(order: usize) -> Self {
        Self { min_terms: 0, max_terms: Some(order) }
    }
}

/// Both sides of the identity and `|LHS − RHS|`.
#[derive(Clone, Debug)]
pub struct TransformSides {
    pub lhs: Complex,
    pub rhs: Complex,
    pub residual: Float,
}

/// `Σ_{n≥1} Log(1 − x^n)` for `|x| < 1`.
fn log_euler(x: &Complex, trunc: Truncation, prec: u32) -> Result<Complex> {
    if x.abs() >= 1 {
        return domain("transform: product nome has modulus >= 1; choose z with larger real part");
    }
    let threshold = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let one = Complex::one(prec);
    let mut acc = Complex::zero(prec);
    let mut xn = x.clone();
    let mut n = 1usize;
    loop {
        if trunc.max_terms.is_some_and(|cap| n > cap) {
            break;
        }
        if n > trunc.min_terms && xn.abs() < threshold {
            break;
        }
        acc = acc.add(&one.sub(&xn).ln());
        xn = xn.mul(x);
        n += 1;
    }
    Ok(acc)
}

/// `exp(2πi·a/b − c)` for rational `a/b` and complex `c`.
fn nome(twist: &Rational, decay: &Complex, prec: u32) -> Complex {
    let pi = Float::with_val(prec, Constant::Pi);
    let angle = Float::with_val(prec, &pi * twist) * 2u32;
    Complex::new(Float::with_val(prec, -&decay.re), Float::with_val(prec, -&decay.im) + angle).exp()
}

/// Evaluates both sides of the transformation at `z` (`Re z > 0`).
pub fn modular_transform_sides(
    ctx: &TransformContext,
    delta: &Rational,
    z: &Complex,
    trunc: Truncation,
    variant: Variant,
    prec: u32,
) -> Result<TransformSides> {
    if z.re.cmp0() != Some(std::cmp::Ordering::Greater) {
        return domain("transform: Re(z) must be positive");
    }
    let wp = prec + GUARD_BITS;
    let z = Complex::new(Float::with_val(wp, &z.re), Float::with_val(wp, &z.im));
    let zinv = z.recip();
    let pi = Float::with_val(wp, Constant::Pi);
    let two_pi = Float::with_val(wp, &pi * 2u32);
    let (h, k, p, d) = (ctx.h, ctx.k, ctx.p, ctx.d);
    let delta_f = Float::with_val(wp, delta);

    // left side: q = e^{2πih/k − 2πz/k²}
    let q = nome(
        &Rational::from((h, k as i64)),
        &z.scale(&Float::with_val(wp, &two_pi / (k * k))),
        wp,
    );
    let qp = {
        let mut acc = Complex::one(wp);
        for _ in 0..p {
            acc = acc.mul(&q);
        }
        acc
    };
    let log_g = log_euler(&q, trunc, wp)?.sub(&log_euler(&qp, trunc, wp)?);
    let lhs = log_g.scale(&delta_f).exp();

    // right side
    let q1 = nome(
        &Rational::from((d as i64 * ctx.h_d_prime, k as i64)),
        &zinv.scale(&(Float::with_val(wp, &two_pi * (d * d)) / p)),
        wp,
    );
    let q2 = nome(&Rational::from((ctx.h_prime, k as i64)), &zinv.scale(&two_pi), wp);
    // log Ĝ = log f(q1) − log f(q2) = −L(q1) + L(q2)
    let log_ghat = log_euler(&q2, trunc, wp)?.sub(&log_euler(&q1, trunc, wp)?);

    let exponent = match variant {
        Variant::ProofGeneral => {
            let a = zinv.scale(&(Float::with_val(wp, &pi * (d as i64 * d as i64 - p as i64)) / (12 * p)));
            let b = z.scale(&(Float::with_val(wp, &pi * (p - 1)) / (12 * k * k)));
            a.sub(&b)
        }
        Variant::AsStated => {
            let a = zinv.scale(&(Float::with_val(wp, &pi * (d as i64 * d as i64 - 3)) / 36u32));
            let b = z.scale(&(Float::with_val(wp, &pi) / (6 * k * k)));
            a.sub(&b)
        }
    };
    let half_log_ratio = Float::with_val(wp, Float::with_val(wp, Rational::from((p, d))).ln()) / 2u32;
    let real_part = Complex::from_real(half_log_ratio).add(&exponent).add(&log_ghat);
    let rhs = principal_power(&ctx.multiplier_angle(), delta, wp).mul(&real_part.scale(&delta_f).exp());

    let residual = Float::with_val(prec, lhs.sub(&rhs).abs());
    Ok(TransformSides { lhs, rhs, residual })
}

/// `|LHS − RHS|` of the transformation with the general exponent, products
/// truncated adaptively with at least `order` factors each.
pub fn verify_modular_transform(
    ctx: &TransformContext,
    delta: &Rational,
    z: &Complex,
    order: usize,
    prec: u32,
) -> Result<Float> {
    Ok(modular_transform_sides(ctx, delta, z, Truncation::adaptive(order), Variant::ProofGeneral, prec)?
        .residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn one() -> Complex {
        Complex::from_real(Float::with_val(P, 1))
    }

    #[test]
    fn context_congruences() {
        let c = TransformContext::new(2, 5, 5).unwrap();
        assert_eq!(c.d(), 5);
        assert_eq!((c.h() * c.h_prime()).rem_euclid(5), 4);
        let c = TransformContext::new(-4, 9, 2).unwrap();
        assert_eq!(c.h(), 5);
        assert_eq!(c.d(), 1);
        assert_eq!((c.h() * c.h_prime()).rem_euclid(9), 8);
        assert_eq!((c.h() * 2 * c.h_d_prime()).rem_euclid(9), 8);
        assert!(TransformContext::new(3, 6, 3).is_err());
        assert!(TransformContext::new(1, 6, 4).is_err());
    }

    #[test]
    fn zero_exponent_gives_zero_residual() {
        let ctx = TransformContext::new(1, 3, 3).unwrap();
        let r = verify_modular_transform(&ctx, &Rational::new(), &one(), 60, P).unwrap();
        assert!(r < 1e-35, "{r}");
    }

    #[test]
    fn identity_cusp_p3() {
        let ctx = TransformContext::new(0, 1, 3).unwrap();
        let r = verify_modular_transform(&ctx, &Rational::from(1), &one(), 60, P).unwrap();
        assert!(r < 1e-20, "{r}");
    }

    #[test]
    fn rejects_left_half_plane() {
        let ctx = TransformContext::new(0, 1, 3).unwrap();
        let z = Complex::from_real(Float::with_val(P, -1));
        assert!(verify_modular_transform(&ctx, &Rational::from(1), &z, 60, P).is_err());
    }

    #[test]
    fn transformation_grid() {
        for (p, h, k) in [(3u64, 0i64, 1u64), (2, 1, 2), (3, 1, 3), (5, 2, 5), (2, 1, 3), (5, 1, 2), (3, 2, 7), (2, 3, 8)] {
            let ctx = TransformContext::new(h, k, p).unwrap();
            for delta in [Rational::from(1), Rational::from((3, 2)), Rational::from(2), Rational::from((1, 3))] {
                let r = verify_modular_transform(&ctx, &delta, &one(), 60, P).unwrap();
                assert!(r < 1e-20, "p={p} h={h} k={k} δ={delta}: {r}");
            }
        }
    }

    #[test]
    fn stated_exponent_matches_at_p3_only() {
        let delta = Rational::from((3, 2));
        for (p, h, k) in [(3u64, 1i64, 3u64), (3, 2, 7), (5, 2, 5)] {
            let ctx = TransformContext::new(h, k, p).unwrap();
            let stated =
                modular_transform_sides(&ctx, &delta, &one(), Truncation::adaptive(60), Variant::AsStated, P)
                    .unwrap();
            if p == 3 {
                assert!(stated.residual < 1e-20);
            } else {
                assert!(stated.residual > 1e-3);
            }
        }
    }

    #[test]
    fn complex_z() {
        let ctx = TransformContext::new(3, 7, 3).unwrap();
        let z = Complex::new(Float::with_val(P, 1.25), Float::with_val(P, -0.5));
        let r = verify_modular_transform(&ctx, &Rational::from((2, 3)), &z, 60, P).unwrap();
        assert!(r < 1e-20, "{r}");
    }

    #[test]
    fn truncation_ladder_is_monotone() {
        let ctx = TransformContext::new(2, 5, 5).unwrap();
        let delta = Rational::from((3, 2));
        let mut last = None::<Float>;
        for order in [4usize, 8, 16, 32, 64, 128, 256, 512] {
            let r = modular_transform_sides(&ctx, &delta, &one(), Truncation::capped(order), Variant::ProofGeneral, P)
                .unwrap()
                .residual;
            if let Some(prev) = &last {
                assert!(r <= *prev, "order {order}: {r} > {prev}");
            }
            last = Some(r);
        }
        assert!(last.unwrap() < 1e-30);
    }
}
