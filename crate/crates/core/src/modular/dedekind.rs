use rug::{Integer, Rational};

use crate::error::{domain, Result};

fn check_coprime(h: i64, k: u64) -> Result<()> {
    if k == 0 {
        return domain("dedekind sum: k must be positive");
    }
    if Integer::from(h).gcd(&Integer::from(k)) != 1 {
        return domain(format!("dedekind sum: gcd({h}, {k}) != 1"));
    }
    Ok(())
}

/// Dedekind sum `s(h, k)` by Euclidean descent on the reciprocity law
/// `s(h,k) + s(k,h) = −1/4 + (h/k + k/h + 1/(hk))/12`, `O(log k)` steps.
pub fn dedekind_sum(h: i64, k: u64) -> Result<Rational> {
    check_coprime(h, k)?;
    let mut k = Integer::from(k);
    let mut h = Integer::from(h).div_rem_euc(k.clone()).1;
    let mut acc = Rational::new();
    let mut quarters = 0i64; // accumulated multiples of −1/4
    let mut positive = true;
    // invariant: s(h0, k0) = acc ± s(h, k) with sign given by `positive`
    while h != 0 {
        // (h/k + k/h + 1/(hk))/12 = (h² + k² + 1)/(12hk)
        let num = Integer::from(h.square_ref()) + Integer::from(k.square_ref()) + 1u32;
        let den = Integer::from(&h * &k) * 12u32;
        let term = Rational::from((num, den));
        if positive {
            acc += term;
            quarters += 1;
        } else {
            acc -= term;
            quarters -= 1;
        }
        positive = !positive;
        let r = Integer::from(&k % &h);
        k = std::mem::replace(&mut h, r);
    }
    Ok(acc - Rational::from((quarters, 4)))
}

/// Dedekind sum straight from its definition,
/// `Σ_{1≤j<k} (j/k − 1/2)({jh/k} − 1/2)`, in `O(k)` integer operations.
pub fn dedekind_sum_direct(h: i64, k: u64) -> Result<Rational> {
    check_coprime(h, k)?;
    let k_i = k as i128;
    let h_red = (h as i128).rem_euclid(k_i);
    // |total| < k³, far inside i128 for any k that fits in a u64 loop
    let mut total: i128 = 0;
    let mut r = 0; // j·h mod k, stepped without division
    for j in 1..k_i {
        r += h_red;
        if r >= k_i {
            r -= k_i;
        }
        total += (2 * j - k_i) * (2 * r - k_i);
    }
    let denom = Integer::from(k) * Integer::from(k) * 4u32;
    Ok(Rational::from((Integer::from(total), denom)))
}
