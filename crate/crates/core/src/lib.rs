//! Sharp bounds for the Toeplitz determinants `det T_{2,2}` and `det T_{3,1}`
//! over classes of normalized functions `g` with `z g'/g ≺ Phi`, on the unit
//! disk and lifted to the unit ball and polydisc of `C^n`.
//!
//! Every closed-form bound is paired with an independent route to the same
//! number: extremal functions built through the power-series engine, a
//! brute-force scan of the Schwarz–Pick two-jet body, and seeded Monte-Carlo
//! sampling of class members.

pub mod bounds;
pub mod error;
pub mod extremal;
pub mod highdim;
mod par;
pub mod phi;
pub mod sampler;
pub mod series;
pub mod toeplitz;

pub use bounds::{fekete_szego_bound, report, t22_bound, t31_bound, Bound, BoundReport};
pub use error::{Error, Result};
pub use extremal::{certify, extremal_g, ExtremalCertificate};
pub use phi::{condition_t22, condition_t31, subordination_check, Jet2, PhiSpec};
pub use sampler::{
    g_from_schwarz, montecarlo_verify, oracle_sup, sample_words, MonteCarloConfig, SchwarzWord,
    Target, Theorem, VerificationReport,
};
pub use series::Series;
pub use toeplitz::{coeff_jet, det_generic, det_t22, det_t31, CoeffJet};

pub use num_complex::Complex64;
