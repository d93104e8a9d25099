use rug::{Float, Integer, Rational};

use super::phase::{phase_ratio_angle, PhaseAngle};
use crate::error::{domain, Error, Result};
use crate::numeric::Interval;

/// Enclosures of the real and imaginary parts of `A_k^{(δ)}(n)`.
#[derive(Clone, Debug)]
pub struct KloostermanSum {
    pub re: Interval,
    pub im: Interval,
}

/// Exact phases of the summands of `A_k^{(δ)}(n)`.
///
/// Summand `h` equals `e^{iπ·r_h}` with `r_h = δ·t_h − 2hn/k`, where `π·t_h` is
/// the principal angle of `ω_{h,k}^{-1} ω_{h,k/p}`. The returned angles are
/// reduced into `[−π, π)`, so they depend on `n` only through `n mod k`.
pub fn kloosterman_phases(p: u64, k: u64, delta: &Rational, n: i64) -> Result<Vec<PhaseAngle>> {
    if p == 0 || k == 0 || k % p != 0 {
        return domain(format!("A_k: p = {p} must divide k = {k}"));
    }
    let k_int = Integer::from(k);
    let mut phases = Vec::new();
    for h in 0..k as i64 {
        if Integer::from(h).gcd(&k_int) != 1 {
            continue;
        }
        let base = phase_ratio_angle(h, k, p)?;
        let hn = Integer::from(h) * Integer::from(n);
        let twist = Rational::from((hn * 2u32, k_int.clone()));
        phases.push(PhaseAngle::from_pi_multiple(&(base.power_over_pi(delta) - twist)));
    }
    Ok(phases)
}

/// `A_k^{(δ)}(n) = (1/k) Σ_{0≤h<k, (h,k)=1} (ω_{h,k}^{-1} ω_{h,k/p})^δ e^{−2πihn/k}`
/// as rigorous enclosures of both parts. Terms are summed in increasing `h`.
pub fn kloosterman_sum(p: u64, k: u64, delta: &Rational, n: i64, prec: u32) -> Result<KloostermanSum> {
    let phases = kloosterman_phases(p, k, delta, n)?;
    let mut re = Interval::from_int(0, prec);
    let mut im = Interval::from_int(0, prec);
    for phase in &phases {
        re = re.add(&Interval::cos_pi_rational(phase.theta_over_pi(), prec));
        im = im.add(&Interval::sin_pi_rational(phase.theta_over_pi(), prec));
    }
    let scale = Rational::from((1, k));
    Ok(KloostermanSum { re: re.mul_rational(&scale), im: im.mul_rational(&scale) })
}

/// Real value of `A_k^{(δ)}(n)` at the requested precision.
///
/// The sum is conjugate-symmetric, so its imaginary part must vanish; an
/// enclosure of the imaginary part reaching beyond `2^{−prec/2}` is reported
/// as a numeric error rather than silently dropped.
pub fn kloosterman_a(p: u64, k: u64, delta: &Rational, n: i64, prec: u32) -> Result<Float> {
    let sum = kloosterman_sum(p, k, delta, n, prec)?;
    let floor = Float::with_val(prec, Float::i_exp(1, -((prec / 2) as i32)));
    let im_mag = sum.im.abs();
    if *im_mag.hi() > floor {
        return Err(Error::Numeric(format!(
            "A_{k}^({delta})({n}) has imaginary part {:?} above 2^-{}",
            sum.im,
            prec / 2
        )));
    }
    Ok(sum.re.mid())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::float::Constant;

    const P: u32 = 128;

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        Float::with_val(P, a - b).abs() < tol
    }

    #[test]
    fn a3_is_a_cosine() {
        for (dn, dd) in [(1i64, 1i64), (1, 4), (5, 2), (3, 1)] {
            let delta = Rational::from((dn, dd));
            for n in 0..6 {
                let got = kloosterman_a(3, 3, &delta, n, P).unwrap();
                // (2/3) cos(πδ/18 + 2πn/3)
                let pi = Float::with_val(P, Constant::Pi);
                let arg = Float::with_val(P, &pi * delta.to_f64()) / 18u32
                    + Float::with_val(P, &pi * (2 * n) as f64) / 3u32;
                let expect = Float::with_val(P, arg.cos()) * 2u32 / 3u32;
                // δ passed through f64 above is exact for these dyadic values
                assert!(close(&got, &expect, 1e-30), "δ={delta} n={n}: {got} vs {expect}");
            }
        }
    }

    #[test]
    fn zero_exponent_gives_totient_ratio() {
        for p in [2u64, 3, 5, 7] {
            let got = kloosterman_a(p, p, &Rational::new(), 0, P).unwrap();
            let expect = Float::with_val(P, (p - 1) as f64) / p as f64;
            assert!(close(&got, &expect, 1e-35));
        }
    }

    #[test]
    fn a6_direct_two_terms() {
        // h ∈ {1, 5}: phases from s(h,2) − s(h,6)
        let delta = Rational::from(1);
        for n in 0..6i64 {
            let mut expect = Float::new(P);
            for h in [1i64, 5] {
                let t = super::super::dedekind_sum_direct(h, 2).unwrap()
                    - super::super::dedekind_sum_direct(h, 6).unwrap();
                let arg = t - Rational::from((2 * h * n, 6));
                let pi = Float::with_val(P, Constant::Pi);
                expect += Float::with_val(P, &pi * &arg).cos();
            }
            expect /= 6u32;
            let got = kloosterman_a(3, 6, &delta, n, P).unwrap();
            assert!(close(&got, &expect, 1e-30), "n={n}");
        }
    }

    #[test]
    fn periodic_in_n() {
        let delta = Rational::from((3, 2));
        for k in [3u64, 6, 9, 12] {
            for n in 0..k as i64 {
                assert_eq!(
                    kloosterman_phases(3, k, &delta, n).unwrap(),
                    kloosterman_phases(3, k, &delta, n + k as i64).unwrap()
                );
            }
        }
    }

    #[test]
    fn requires_divisibility() {
        assert!(kloosterman_a(3, 4, &Rational::from(1), 1, P).is_err());
    }
}
