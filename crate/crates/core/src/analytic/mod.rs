//! Coverage probabilities and Shannon rates under the Palm law of each
//! epoch kind.

pub mod compare;
pub mod coverage;
pub mod integrals;
pub mod interference;
pub mod rate;

pub use compare::{comparison_suite, scale_invariance, Check, ComparisonReport};
pub use coverage::{coverage, coverage_curve, coverage_with, CoverageOptions, CoverageResult, Method};
pub use integrals::{k_alpha, kappa, l_nu, m_alpha, special_integral, SpecialIntegral};
pub use interference::{interference_laplace_fading, interference_laplace_nofading, tropical_interference_cdf_fading};
pub use rate::{shannon_rate, RateResult};
