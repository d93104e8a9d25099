//! Exact checkers for the theta-function identities, dissections, vanishing
//! and divisibility results, and sign patterns of the Borwein coefficients.

mod classical;
mod congruence;
mod dissection;
mod lambert;
mod main_thm;
mod signs;
mod theta;

pub use classical::{cubic_a, cubic_theta_check, two_squares_check, CubicResiduals};
pub use congruence::{
    divisibility_check, divisibility_violations, vanishing_check, vanishing_classes, VanishingReport,
};
pub use dissection::{conjecture1_components, dissect, interleave, Dissection};
pub use main_thm::{theorem_main_residual, theorem_main_sides};
pub use signs::{
    conjecture1_check, corollary_sign_check, sign_pattern_check, ComponentVerdict, Conjecture1Report,
    CorollaryReport, SignPatternReport,
};
pub use theta::{
    jtpe_range, lambert_derivative_check, theta_derivative_check, theta_dissection_residual, theta_series,
    BivariateSeries,
};

pub(crate) fn ser_rational<S: serde::Serializer>(r: &rug::Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::series::format_rational(r))
}
