use crate::error::Result;
use crate::johnson::{full_adjacency, FullGraph, JohnsonParams};
use crate::linalg::{Basis, Propagator, StateVector, TimeSeries};
use crate::matrix::Matrix;
use crate::reduced::{check_gamma, search_hamiltonian};
use crate::scalar::Real;

/// Vertex the brute-force search marks: `{0, 1, ..., k-1}`.
pub const FULL_MARKED_VERTEX: usize = 0;

/// `-γA - |w⟩⟨w|` on the full vertex space.
pub fn full_search_hamiltonian<T: Real>(
    graph: &FullGraph,
    gamma: T,
    marked: usize,
) -> Result<Matrix<T>> {
    check_gamma(gamma)?;
    let mut h = graph.adjacency_matrix::<T>().scale(-gamma);
    h[(marked, marked)] -= T::one();
    Ok(h)
}

/// Success probability of the brute-force walk from the uniform state.
pub fn full_success_curve<T: Real>(
    params: JohnsonParams,
    gamma: T,
    t_max: T,
    steps: usize,
    cap: usize,
) -> Result<TimeSeries<T>> {
    let graph = full_adjacency(params, cap)?;
    let h = full_search_hamiltonian(&graph, gamma, FULL_MARKED_VERTEX)?;
    let psi0 = StateVector::uniform(graph.vertex_count(), Basis::Full)?;
    Propagator::new(&h)?.success_curve(&psi0, FULL_MARKED_VERTEX, t_max, steps)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification<T> {
    /// `max_t |p_full(t) - p_reduced(t)|` over the grid.
    pub max_deviation: T,
    pub full: TimeSeries<T>,
    pub reduced: TimeSeries<T>,
}

/// Runs the search on the full graph and on the reduced model over the
/// same grid and compares the success probabilities.
pub fn run_verification<T: Real>(
    params: JohnsonParams,
    gamma: T,
    t_max: T,
    steps: usize,
    cap: usize,
) -> Result<Verification<T>> {
    let reduced = search_hamiltonian(params, gamma)?.success_curve(t_max, steps)?;
    let full = full_success_curve(params, gamma, t_max, steps, cap)?;
    Ok(Verification {
        max_deviation: full.max_deviation(&reduced),
        full,
        reduced,
    })
}
