//! Dedekind sums, the eta multiplier `ω_{h,k}`, Kloosterman-type sums and the
//! transformation check for `G_p^δ`.

mod dedekind;
mod kloosterman;
mod phase;
mod transform;

pub use dedekind::{dedekind_sum, dedekind_sum_direct};
pub use kloosterman::{kloosterman_a, kloosterman_phases, kloosterman_sum, KloostermanSum};
pub use phase::{omega, phase_ratio_angle, phase_ratio_pow, PhaseAngle};
pub use transform::{
    modular_transform_sides, verify_modular_transform, TransformContext, TransformSides, Truncation,
};

/// Trial division; the moduli here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
