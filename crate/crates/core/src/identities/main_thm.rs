use rug::{Integer, Rational};

use super::classical::{eta, max_abs_diff};
use super::lambert::Lambert;
use crate::series::TruncatedSeries;

/// `(s·q^a; q^step)_∞ = ∏_{j≥0} (1 − s·q^{a+j·step})` for `s = ±1`, `a ≥ 1`.
fn pochhammer(s: i64, a: usize, step: usize, order: usize) -> Vec<Integer> {
    let mut c = vec![Integer::new(); order + 1];
    c[0] = Integer::from(1);
    let mut e = a;
    while e <= order {
        for n in (e..=order).rev() {
            let t = Integer::from(&c[n - e] * s);
            c[n] -= t;
        }
        e += step;
    }
    c
}

fn to_series(c: Vec<Integer>) -> TruncatedSeries {
    TruncatedSeries::from_integers(c)
}

/// Left and right sides of the `(q;q)_∞³` identity for modulus `k`:
///
/// even `k`: `(q;q)³ = Σ_ℓ (−1)^ℓ q^{ℓ(ℓ+1)/2} (−q^a, −q^b, q^{k²}; q^{k²})
///   · (2ℓ+1 − 2k Σ_n (q^{k(kn+α)}/(1+q^{k(kn+α)}) − q^{k(kn+β)}/(1+q^{k(kn+β)})))`
///
/// odd `k`: `(q;q)³ − (−1)^{(k−1)/2} k q^{(k²−1)/8} (q^{k²};q^{k²})³ = Σ_ℓ (−1)^ℓ q^{ℓ(ℓ+1)/2}
///   (q^a, q^b, q^{k²}; q^{k²}) · (2ℓ+1 + 2k Σ_n (… /(1−…) − … /(1−…)))`
///
/// with `α = (k−1−2ℓ)/2`, `β = (k+1+2ℓ)/2`, `a = kα`, `b = kβ`, `0 ≤ ℓ < (k−1)/2`.
pub fn theorem_main_sides(k: u64, order: usize) -> (TruncatedSeries, TruncatedSeries) {
    assert!(k >= 1, "k must be positive");
    let k = k as usize;
    let odd = k % 2 == 1;
    let kk = k * k;
    let mut lhs = eta(&[(1, 3)], order);
    if odd {
        let sign = if ((k - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let corr = eta(&[(kk as u64, 3)], order)
            .shift((kk - 1) / 8)
            .scale(&Rational::from(sign * k as i64));
        lhs = &lhs - &corr;
    }

    let s = if odd { 1 } else { -1 }; // (s q^a; q^{k²}) with s = (−1)^{k−1}
    let mut rhs = TruncatedSeries::zero(order);
    // 2ℓ < k − 1
    for l in (0..).take_while(|l| 2 * l + 1 < k) {
        let a = k * (k - 1 - 2 * l) / 2;
        let b = k * (k + 1 + 2 * l) / 2;
        let triple = &(&to_series(pochhammer(s, a, kk, order)) * &to_series(pochhammer(s, b, kk, order)))
            * &eta(&[(kk as u64, 1)], order);
        // odd: +2k Σ q^x/(1−q^x); even: −2k Σ q^x/(1+q^x)
        let (c, ratio) = if odd { (2 * k as i64, 1) } else { (-2 * k as i64, -1) };
        let bracket = Lambert::new(order)
            .constant(2 * l as i64 + 1)
            .progression(a, kk, c, ratio)
            .progression(b, kk, -c, ratio)
            .finish();
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let term = (&triple * &bracket).shift(l * (l + 1) / 2).scale(&Rational::from(sign));
        rhs = &rhs + &term;
    }
    (lhs, rhs)
}

/// Largest coefficient difference between the two sides (exactly 0 when the
/// identity holds to `order`).
pub fn theorem_main_residual(k: u64, order: usize) -> Rational {
    let (l, r) = theorem_main_sides(k, order);
    max_abs_diff(&l, &r)
}
