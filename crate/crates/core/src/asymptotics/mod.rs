//! Bessel main term and explicit error bound for the Borwein coefficients,
//! and the `p = 3` growth estimate built on it.

mod bessel;
mod mth;
mod mth1;

pub use bessel::{bessel_i1, bessel_i1_interval};
pub use mth::{
    estimate_report, euler_f_interval, rademacher_main, rademacher_main_interval, theorem_mth_error_bound,
    theorem_mth_error_bound_interval, EstimateReport,
};
pub use mth1::{
    check_mth1_inequality, cosine_dominates, cubic_error_constant, cubic_error_regime, lemma_e_bound,
    lemma_e_bound_interval, lemma_e_direct_sum, mth1_cutoff, mth1_enclosures, mth1_quantities, predicted_sign,
    w_interval, Mth1Enclosures, Mth1Quantities,
};
