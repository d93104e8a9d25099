use std::collections::BTreeSet;

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::series::borwein_coeffs;

fn require_odd(k: u64) -> Result<()> {
    if k % 2 == 0 {
        return domain(format!("k must be odd, got {k}"));
    }
    Ok(())
}

/// Residues `h ∈ [0, k)` for which `(2ℓ+1)² ≡ 1 + 8h (mod k)` has no
/// solution `ℓ`, i.e. `ℓ(ℓ+1)/2 ≢ h` for every `ℓ`.
pub fn vanishing_classes(k: u64) -> Result<BTreeSet<u64>> {
    require_odd(k)?;
    let hit: BTreeSet<u64> = (0..k).map(|l| ((2 * l + 1) * (2 * l + 1)) % k).collect();
    Ok((0..k).filter(|h| !hit.contains(&((1 + 8 * h) % k))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub k: u64,
    pub order: usize,
    pub classes: Vec<u64>,
    /// Indices in a vanishing class whose coefficient is nonzero.
    pub violations: Vec<usize>,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `c_k^{(3)}(n) = 0` for every `n ≤ order` in a vanishing class.
pub fn vanishing_check(k: u64, order: usize) -> Result<VanishingReport> {
    let classes = vanishing_classes(k)?;
    let violations = if k == 1 {
        Vec::new()
    } else {
        let c = borwein_coeffs(k, &Rational::from(3), order)?;
        (0..=order)
            .filter(|&n| classes.contains(&(n as u64 % k)) && c.coeffs()[n].cmp0().is_ne())
            .collect()
    };
    Ok(VanishingReport { k, order, classes: classes.into_iter().collect(), violations })
}

/// `c_k^{(3)}(kn + (k²−1)/8) ≡ 0 (mod k)` for every such index `≤ order`.
pub fn divisibility_check(k: u64, order: usize) -> Result<bool> {
    Ok(divisibility_violations(k, order)?.is_empty())
}

/// Indices where the divisibility congruence fails.
pub fn divisibility_violations(k: u64, order: usize) -> Result<Vec<usize>> {
    require_odd(k)?;
    if k == 1 {
        return Ok(Vec::new());
    }
    let c = borwein_coeffs(k, &Rational::from(3), order)?;
    let start = ((k * k - 1) / 8) as usize;
    let modulus = Integer::from(k);
    Ok((start..=order)
        .step_by(k as usize)
        .filter(|&n| {
            let v = &c.coeffs()[n];
            assert!(*v.denom() == 1, "integer exponent gives integer coefficients");
            !v.numer().is_divisible(&modulus)
        })
        .collect())
}
