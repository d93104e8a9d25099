use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Rational};

use crate::error::{domain, Result};
use crate::numeric::Interval;

/// Rigorous enclosure of `I_1(x)` for `x ⊆ [0, ∞)`.
///
/// Sums `Σ (x/2)^{2n+1}/(n!(n+1)!)` in interval arithmetic until the next
/// term is below `2^{−prec−8}` of the partial sum *and* the term ratio
/// `(x/2)²/((n+1)(n+2))` has dropped under 1/2; the remaining tail is then at
/// most twice the next term, and that is added to the upper endpoint.
///
/// # Panics
/// If `x` has a negative lower endpoint.
pub fn bessel_i1_interval(x: &Interval) -> Interval {
    assert!(x.lo().cmp0() != Some(Ordering::Less), "I_1 enclosure needs x >= 0");
    let prec = x.prec();
    let half = x.mul_rational(&Rational::from((1, 2)));
    let h2 = half.square();
    let mut term = half;
    let mut sum = term.clone();
    let rel = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8));
    let mut n = 0u64;
    loop {
        let next = term.mul(&h2).mul_rational(&Rational::from((1, (n + 1) * (n + 2))));
        n += 1;
        let ratio_ok = Float::with_val(prec, h2.hi() * 2u32) <= (n + 1) * (n + 2);
        let small = *next.hi() <= Float::with_val(prec, sum.lo() * &rel);
        if ratio_ok && small {
            let tail = Float::with_val_round(prec, next.hi() * 2u32, Round::Up).0;
            let hi = Float::with_val_round(prec, sum.hi() + &tail, Round::Up).0;
            return Interval::new(sum.lo().clone(), hi);
        }
        sum = sum.add(&next);
        term = next;
    }
}

/// `I_1(x)` for `x ≥ 0`, accurate to the working precision (computed with 16
/// guard bits and rounded to nearest).
pub fn bessel_i1(x: &Float, prec: u32) -> Result<Float> {
    if x.cmp0() == Some(Ordering::Less) || x.is_nan() {
        return domain(format!("I_1: argument {x} is negative"));
    }
    let wp = prec + 16;
    let enc = bessel_i1_interval(&Interval::point(Float::with_val(wp, x)));
    Ok(Float::with_val(prec, enc.mid()))
}
