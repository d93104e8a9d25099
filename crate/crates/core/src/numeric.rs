//! Floating-point support on top of MPFR.
//!
//! [`Interval`] carries a lower and an upper endpoint computed with directed
//! rounding, so every true value is enclosed. Inequality verdicts in this crate
//! are of the form `a.hi <= b.lo`, which makes a `true` answer rigorous.
//! [`Complex`] is a plain round-to-nearest complex number used by the modular
//! transformation check, where only a residual magnitude is reported.

use std::cmp::Ordering;
use std::fmt;

use rug::float::{Constant, Round};
use rug::{Float, Rational};

/// Configurable-precision real value.
pub type BigReal = Float;

fn down<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

/// Upper bound on one unit in the last place of `x` at its precision.
pub(crate) fn ulp(x: &Float) -> Float {
    let prec = x.prec();
    match x.get_exp() {
        Some(e) => Float::with_val(prec, Float::i_exp(1, e - prec as i32)),
        None => Float::with_val(prec, Float::i_exp(1, -(8 * prec as i32))),
    }
}

/// Closed interval `[lo, hi]` with MPFR endpoints.
#[derive(Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl Interval {
    /// # Panics
    /// If `lo > hi` or either endpoint is NaN.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        Self { lo: down(prec, v), hi: up(prec, v) }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self { lo: down(prec, r), hi: up(prec, r) }
    }

    pub fn pi(prec: u32) -> Self {
        Self { lo: down(prec, Constant::Pi), hi: up(prec, Constant::Pi) }
    }

    /// Euler–Mascheroni constant.
    pub fn euler_gamma(prec: u32) -> Self {
        Self { lo: down(prec, Constant::Euler), hi: up(prec, Constant::Euler) }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Midpoint, rounded to nearest.
    pub fn mid(&self) -> Float {
        let prec = self.prec();
        let mut m = Float::with_val(prec + 1, &self.lo + &self.hi);
        m /= 2;
        Float::with_val(prec, m)
    }

    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.cmp0() != Some(Ordering::Greater) && self.hi.cmp0() != Some(Ordering::Less)
    }

    /// `Some(+1)` / `Some(-1)` when the sign is certain, `None` otherwise.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.cmp0() == Some(Ordering::Greater) {
            Some(1)
        } else if self.hi.cmp0() == Some(Ordering::Less) {
            Some(-1)
        } else {
            None
        }
    }

    /// Every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &Self) -> Self {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Self { lo, hi }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Self { lo: down(p, &self.lo + &o.lo), hi: up(p, &self.hi + &o.hi) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        Self { lo: down(p, &self.lo - &o.hi), hi: up(p, &self.hi - &o.lo) }
    }

    pub fn neg(&self) -> Self {
        Self { lo: Float::with_val(self.prec(), -&self.hi), hi: Float::with_val(self.prec(), -&self.lo) }
    }

    pub fn abs(&self) -> Self {
        match self.sign() {
            Some(1) => self.clone(),
            Some(_) => self.neg(),
            None => {
                let prec = self.prec();
                let a = Float::with_val(prec, self.lo.abs_ref());
                let b = Float::with_val(prec, self.hi.abs_ref());
                Self { lo: Float::new(prec), hi: if a > b { a } else { b } }
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec().max(o.prec());
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let l = down(p, a * b);
            let h = up(p, a * b);
            if lo.as_ref().map_or(true, |x| l < *x) {
                lo = Some(l);
            }
            if hi.as_ref().map_or(true, |x| h > *x) {
                hi = Some(h);
            }
        }
        Self { lo: lo.unwrap(), hi: hi.unwrap() }
    }

    /// # Panics
    /// If `o` contains zero.
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.contains_zero(), "interval division by an interval containing zero");
        let p = self.prec().max(o.prec());
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let l = down(p, a / b);
            let h = up(p, a / b);
            if lo.as_ref().map_or(true, |x| l < *x) {
                lo = Some(l);
            }
            if hi.as_ref().map_or(true, |x| h > *x) {
                hi = Some(h);
            }
        }
        Self { lo: lo.unwrap(), hi: hi.unwrap() }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r, self.prec()))
    }

    pub fn square(&self) -> Self {
        let a = self.abs();
        a.mul(&a)
    }

    /// # Panics
    /// If the interval lies entirely below zero. A negative lower endpoint
    /// is clamped to zero.
    pub fn sqrt(&self) -> Self {
        assert!(self.hi.cmp0() != Some(Ordering::Less), "sqrt of a negative interval");
        let p = self.prec();
        let mut lo = if self.lo.cmp0() == Some(Ordering::Less) {
            Float::new(p)
        } else {
            self.lo.clone()
        };
        lo.sqrt_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.sqrt_round(Round::Up);
        Self { lo, hi }
    }

    pub fn exp(&self) -> Self {
        let mut lo = self.lo.clone();
        lo.exp_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.exp_round(Round::Up);
        Self { lo, hi }
    }

    /// # Panics
    /// If the interval is not strictly positive.
    pub fn ln(&self) -> Self {
        assert!(self.sign() == Some(1), "ln of a non-positive interval");
        let mut lo = self.lo.clone();
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_round(Round::Up);
        Self { lo, hi }
    }

    /// `self^e = exp(e·ln self)` for a strictly positive base.
    pub fn pow(&self, e: &Self) -> Self {
        self.ln().mul(e).exp()
    }

    pub fn cos(&self) -> Self {
        self.lipschitz_trig(|x| x.cos())
    }

    pub fn sin(&self) -> Self {
        self.lipschitz_trig(|x| x.sin())
    }

    /// Encloses a 1-Lipschitz function bounded by 1 in absolute value:
    /// `f(mid) ± (half width + rounding)`, clipped to `[-1, 1]`.
    fn lipschitz_trig(&self, f: impl Fn(Float) -> Float) -> Self {
        let p = self.prec();
        let mid = self.mid();
        let half = up(p, &self.hi - &mid).max(&up(p, &mid - &self.lo));
        let val = f(mid);
        let rad = up(p, &half + &ulp(&val));
        let one = Float::with_val(p, 1);
        let lo = down(p, &val - &rad).max(&Float::with_val(p, -1));
        let hi = up(p, &val + &rad).min(&one);
        Self { lo, hi }
    }

    /// `cos(π·r)` for exact rational `r`; `r` is reduced modulo 2 exactly
    /// before any rounding happens.
    pub fn cos_pi_rational(r: &Rational, prec: u32) -> Self {
        let t = reduce_mod_two(r);
        Self::pi(prec + 16).mul_rational(&t).cos().round_to(prec)
    }

    pub fn sin_pi_rational(r: &Rational, prec: u32) -> Self {
        let t = reduce_mod_two(r);
        Self::pi(prec + 16).mul_rational(&t).sin().round_to(prec)
    }

    /// Outward re-rounding to a (usually lower) precision.
    pub fn round_to(&self, prec: u32) -> Self {
        Self { lo: down(prec, &self.lo), hi: up(prec, &self.hi) }
    }

    pub fn max(&self, o: &Self) -> Self {
        let lo = if self.lo >= o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi >= o.hi { self.hi.clone() } else { o.hi.clone() };
        Self { lo, hi }
    }
}

/// Reduces `r` to the representative of `r mod 2` in `[-1, 1)`.
pub fn reduce_mod_two(r: &Rational) -> Rational {
    // t = r - 2·floor((r + 1)/2)
    let shifted = Rational::from(r + 1u32) / 2u32;
    let floor = shifted.floor();
    r - floor * 2u32
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_string_radix(10, Some(20)), self.hi.to_string_radix(10, Some(20)))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Complex number with round-to-nearest MPFR components.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

/// Configurable-precision complex value.
pub type BigComplex = Complex;

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn one(prec: u32) -> Self {
        Self { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// `e^{iθ}`.
    pub fn cis(theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        Self { re: c, im: s }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec();
        Self { re: Float::with_val(p, &self.re + &o.re), im: Float::with_val(p, &self.im + &o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec();
        Self { re: Float::with_val(p, &self.re - &o.re), im: Float::with_val(p, &self.im - &o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Self { re, im }
    }

    pub fn scale(&self, x: &Float) -> Self {
        let p = self.prec();
        Self { re: Float::with_val(p, &self.re * x), im: Float::with_val(p, &self.im * x) }
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref());
        Self { re: Float::with_val(p, &self.re / &n), im: -Float::with_val(p, &self.im / &n) }
    }

    pub fn from_real(x: Float) -> Self {
        let p = x.prec();
        Self { re: x, im: Float::new(p) }
    }

    pub fn exp(&self) -> Self {
        let r = Float::with_val(self.prec(), self.re.exp_ref());
        Self::cis(&self.im).scale(&r)
    }

    /// Principal logarithm, argument in `(-π, π]`.
    pub fn ln(&self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, self.abs().ln_ref());
        let im = Float::with_val(p, self.im.atan2_ref(&self.re));
        Self { re, im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    #[test]
    fn rational_enclosure_brackets_value() {
        let i = Interval::from_rational(&Rational::from((1, 3)), P);
        assert!(i.lo() < i.hi());
        let three = Interval::from_int(3, P);
        let one = i.mul(&three);
        assert!(one.contains(&Float::with_val(P, 1)));
    }

    #[test]
    fn pi_encloses() {
        let pi = Interval::pi(P);
        let wide = Float::with_val(4 * P, Constant::Pi);
        assert!(*pi.lo() <= wide && wide <= *pi.hi());
    }

    #[test]
    fn mul_handles_signs() {
        let a = Interval::new(Float::with_val(P, -2), Float::with_val(P, 3));
        let b = Interval::new(Float::with_val(P, -5), Float::with_val(P, 1));
        let c = a.mul(&b);
        assert_eq!(*c.lo(), -15);
        assert_eq!(*c.hi(), 10);
    }

    #[test]
    fn reduce_mod_two_range() {
        for (n, d, en, ed) in [(3, 1, -1, 1), (1, 1, -1, 1), (-1, 1, -1, 1), (5, 2, 1, 2), (-7, 4, 1, 4), (0, 1, 0, 1)] {
            assert_eq!(reduce_mod_two(&Rational::from((n, d))), Rational::from((en, ed)), "{n}/{d}");
        }
    }

    #[test]
    fn cos_of_rational_multiple_of_pi() {
        let c = Interval::cos_pi_rational(&Rational::from((1, 3)), P);
        assert!(c.contains(&Float::with_val(P, 0.5)));
        let z = Interval::cos_pi_rational(&Rational::from((1, 2)), P);
        assert!(z.contains_zero());
        assert!(z.width() < Float::with_val(P, 1e-35));
        let s = Interval::sin_pi_rational(&Rational::from((-13, 6)), P);
        assert!(s.contains(&Float::with_val(P, -0.5)));
    }

    #[test]
    fn exp_ln_roundtrip_encloses() {
        let x = Interval::from_rational(&Rational::from((7, 5)), P);
        let y = x.ln().exp();
        assert!(y.lo() <= x.lo() && x.hi() <= y.hi());
    }

    #[test]
    fn complex_exp_ln() {
        let z = Complex::new(Float::with_val(P, -0.3), Float::with_val(P, 2.5));
        let w = z.exp().ln();
        assert!(Float::with_val(P, &w.re - &z.re).abs() < 1e-30);
        assert!(Float::with_val(P, &w.im - &z.im).abs() < 1e-30);
    }
}
