//! Spatial search by continuous-time quantum walk on Johnson graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`johnson`] builds J(n, k) vertex by vertex. It is the brute-force
//!   oracle every reduced computation is checked against.
//! - [`reduced`] collapses the walk onto the k + 1 distance classes around
//!   the marked vertex, and for k = 3 rotates into the `(d_0, r, r', r'')`
//!   basis.
//! - [`linalg`] holds the Jacobi eigensolver and spectral time evolution.
//! - [`analysis`] finds critical jumping rates, energy gaps and the
//!   two-level effective description of the k = 3 search.
//!
//! All numeric code is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`, which is what the command line
//! front end uses.

pub mod analysis;
pub mod error;
pub mod johnson;
pub mod linalg;
pub mod matrix;
pub mod reduced;
pub mod scalar;

pub use error::{Error, Result};
pub use johnson::{JohnsonParams, DEFAULT_VERTEX_CAP};
pub use matrix::Matrix;
pub use scalar::Real;

pub type Matrix64 = matrix::Matrix<f64>;
pub type SpectralDecomposition64 = linalg::SpectralDecomposition<f64>;
pub type StateVector64 = linalg::StateVector<f64>;
pub type TimeSeries64 = linalg::TimeSeries<f64>;
pub type Propagator64 = linalg::Propagator<f64>;
pub type ReducedModel64 = reduced::ReducedModel<f64>;
pub type BasisChange64 = reduced::BasisChange<f64>;

pub type CriticalGammaResult64 = analysis::CriticalGammaResult<f64>;
pub type PerturbationReport64 = analysis::PerturbationReport<f64>;
pub type EffectiveTwoLevel64 = analysis::EffectiveTwoLevel<f64>;
