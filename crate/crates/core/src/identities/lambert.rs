//! Lambert series `Σ c·q^a/(1 − s·q^a)` expanded by divisor accumulation:
//! each term contributes `c·s^{j−1}` at every multiple `a·j ≤ N`.

use rug::Integer;

use crate::series::TruncatedSeries;

/// Accumulator of integer coefficients up to a fixed order.
pub(crate) struct Lambert {
    coeffs: Vec<Integer>,
}

impl Lambert {
    pub fn new(order: usize) -> Self {
        Self { coeffs: vec![Integer::new(); order + 1] }
    }

    pub fn constant(mut self, c: i64) -> Self {
        self.coeffs[0] += c;
        self
    }

    /// Adds `c·Σ_{n≥0} q^a/(1 − s·q^a)` over `a = start + step·n`, `s = ±1`.
    pub fn progression(mut self, start: usize, step: usize, c: i64, s: i64) -> Self {
        let order = self.coeffs.len() - 1;
        assert!(start >= 1 && step >= 1);
        let mut a = start;
        while a <= order {
            let mut sign = 1;
            let mut e = a;
            while e <= order {
                self.coeffs[e] += c * sign;
                sign *= s;
                e += a;
            }
            a += step;
        }
        self
    }

    pub fn finish(self) -> TruncatedSeries {
        TruncatedSeries::from_integers(self.coeffs)
    }
}
