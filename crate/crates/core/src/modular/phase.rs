use std::fmt;

use rug::{Float, Rational};

use super::dedekind::dedekind_sum;
use crate::error::{domain, Result};
use crate::numeric::{reduce_mod_two, Complex, Interval};

/// Argument of a unit complex number stored as an exact rational multiple of
/// `π`, always reduced into `[−π, π)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhaseAngle {
    theta_over_pi: Rational,
}

impl PhaseAngle {
    /// The angle `π·t`, reduced modulo `2π`.
    pub fn from_pi_multiple(t: &Rational) -> Self {
        Self { theta_over_pi: reduce_mod_two(t) }
    }

    pub fn zero() -> Self {
        Self { theta_over_pi: Rational::new() }
    }

    pub fn theta_over_pi(&self) -> &Rational {
        &self.theta_over_pi
    }

    /// Angle of the product of the two unit numbers.
    pub fn add(&self, other: &Self) -> Self {
        Self::from_pi_multiple(&Rational::from(&self.theta_over_pi + &other.theta_over_pi))
    }

    /// Angle of the conjugate.
    pub fn neg(&self) -> Self {
        Self::from_pi_multiple(&Rational::from(-&self.theta_over_pi))
    }

    /// `δ·θ/π` for the principal power `(e^{iθ})^δ = e^{iδθ}`; not reduced,
    /// since the reduction is only valid for integer `δ`.
    pub fn power_over_pi(&self, delta: &Rational) -> Rational {
        Rational::from(&self.theta_over_pi * delta)
    }

    /// `e^{iθ}` at the requested precision.
    pub fn to_complex(&self, prec: u32) -> Complex {
        principal_power(self, &Rational::from(1), prec)
    }
}

impl fmt::Display for PhaseAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π", self.theta_over_pi)
    }
}

/// `e^{iπ·δ·t}` for the principal angle `π·t` of `phase`.
pub(crate) fn principal_power(phase: &PhaseAngle, delta: &Rational, prec: u32) -> Complex {
    let t = reduce_mod_two(&phase.power_over_pi(delta));
    // exact points of the unit circle
    let exact = [(0, 1, 1, 0), (-1, 1, -1, 0), (1, 2, 0, 1), (-1, 2, 0, -1)];
    for (n, d, re, im) in exact {
        if t == (n, d) {
            return Complex::new(Float::with_val(prec, re), Float::with_val(prec, im));
        }
    }
    let re = Interval::cos_pi_rational(&t, prec).mid();
    let im = Interval::sin_pi_rational(&t, prec).mid();
    Complex::new(re, im)
}

/// Eta multiplier `ω_{h,k} = e^{πi·s(h,k)}`.
pub fn omega(h: i64, k: u64) -> Result<PhaseAngle> {
    Ok(PhaseAngle::from_pi_multiple(&dedekind_sum(h, k)?))
}

/// Principal angle of `ω_{h,k}^{-1} ω_{h,k/p}` for `p | k`:
/// `π·(s(h, k/p) − s(h, k))` reduced into `[−π, π)`.
pub fn phase_ratio_angle(h: i64, k: u64, p: u64) -> Result<PhaseAngle> {
    if p == 0 || k % p != 0 {
        return domain(format!("phase ratio: p = {p} does not divide k = {k}"));
    }
    let h = h.rem_euclid(k as i64);
    let t = dedekind_sum(h, k / p)? - dedekind_sum(h, k)?;
    Ok(PhaseAngle::from_pi_multiple(&t))
}

/// `(ω_{h,k}^{-1} ω_{h,k/p})^δ` on the principal branch. The branch is fixed on
/// the exact angle before `δ` is applied, so no float can flip it.
pub fn phase_ratio_pow(h: i64, k: u64, p: u64, delta: &Rational, prec: u32) -> Result<Complex> {
    let angle = phase_ratio_angle(h, k, p)?;
    Ok(principal_power(&angle, delta, prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(0, 1).unwrap(), PhaseAngle::zero());
        assert_eq!(omega(1, 3).unwrap().theta_over_pi(), &r(1, 18));
        assert_eq!(omega(2, 3).unwrap().theta_over_pi(), &r(-1, 18));
    }

    #[test]
    fn angle_reduction_is_half_open() {
        assert_eq!(PhaseAngle::from_pi_multiple(&r(1, 1)).theta_over_pi(), &r(-1, 1));
        assert_eq!(PhaseAngle::from_pi_multiple(&r(-1, 1)).theta_over_pi(), &r(-1, 1));
        assert_eq!(PhaseAngle::from_pi_multiple(&r(7, 3)).theta_over_pi(), &r(1, 3));
    }

    #[test]
    fn ratio_for_k3() {
        // s(1,1) − s(1,3) = −1/18
        assert_eq!(phase_ratio_angle(1, 3, 3).unwrap().theta_over_pi(), &r(-1, 18));
        assert!(phase_ratio_angle(1, 4, 3).is_err());
    }

    #[test]
    fn zeroth_power_is_one() {
        let z = phase_ratio_pow(1, 6, 3, &Rational::new(), 128).unwrap();
        assert_eq!(z.re, 1);
        assert_eq!(z.im, 0);
    }

    #[test]
    fn integer_power_is_branch_free() {
        let prec = 128;
        for (h, k, p) in [(1i64, 3u64, 3u64), (5, 12, 3), (7, 10, 5), (3, 8, 2)] {
            let base = phase_ratio_pow(h, k, p, &Rational::from(1), prec).unwrap();
            let mut acc = Complex::one(prec);
            for e in 1..=5 {
                acc = acc.mul(&base);
                let direct = phase_ratio_pow(h, k, p, &Rational::from(e), prec).unwrap();
                assert!(direct.sub(&acc).abs() < 1e-35, "({h},{k},{p})^{e}");
            }
        }
    }
}
