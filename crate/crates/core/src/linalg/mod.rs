//! Dense symmetric eigensolver and spectral time evolution.

mod eigen;
mod evolution;

pub use eigen::{eig_sym, SpectralDecomposition, MAX_SWEEPS};
pub use evolution::{
    evolve, overlap_spectrum, success_curve, uniform_grid, Basis, OverlapRecord, Propagator,
    StateVector, TimeSeries,
};
