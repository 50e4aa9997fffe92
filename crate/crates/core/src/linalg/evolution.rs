//! Time evolution `e^{-iHt}` through a cached eigendecomposition.

use num_complex::Complex;

use super::eigen::{eig_sym, SpectralDecomposition};
use crate::error::{domain, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Which basis a state's amplitudes are expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// One amplitude per graph vertex.
    Full,
    /// Distance classes d_0, ..., d_k around the marked vertex.
    Distance,
    /// The k = 3 basis (d_0, r, r', r'').
    Transformed,
}

/// Unit-norm complex amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amplitudes: Vec<Complex<T>>,
    basis: Basis,
}

impl<T: Real> StateVector<T> {
    pub fn new(amplitudes: Vec<Complex<T>>, basis: Basis) -> Result<Self> {
        let state = Self { amplitudes, basis };
        let norm = state.norm_sqr();
        if !norm.is_finite() || (norm - T::one()).abs() > T::cst(T::NORM_TOLERANCE) {
            return domain(format!("state is not normalized (squared norm {norm})"));
        }
        Ok(state)
    }

    pub fn from_real(amplitudes: &[T], basis: Basis) -> Result<Self> {
        Self::new(
            amplitudes
                .iter()
                .map(|&x| Complex::new(x, T::zero()))
                .collect(),
            basis,
        )
    }

    /// Uniform superposition over `dim` basis states.
    pub fn uniform(dim: usize, basis: Basis) -> Result<Self> {
        if dim == 0 {
            return domain("uniform state needs a nonempty basis");
        }
        let amp = T::one() / T::from_usize(dim).expect("dimension representable").sqrt();
        Self::from_real(&vec![amp; dim], basis)
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(Complex::norm_sqr).sum()
    }

    /// `|⟨i|ψ⟩|²`.
    pub fn probability(&self, i: usize) -> T {
        self.amplitudes[i].norm_sqr()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `⟨φ|ψ⟩` for a real vector `φ`.
    fn project_real(&self, phi: &[T]) -> Complex<T> {
        phi.iter().zip(&self.amplitudes).map(|(&p, a)| a * p).sum()
    }
}

/// Success probabilities on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries<T> {
    pub times: Vec<T>,
    pub probabilities: Vec<T>,
}

impl<T: Real> TimeSeries<T> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// First grid point attaining the maximum probability, as `(t, p)`.
    pub fn peak(&self) -> Option<(T, T)> {
        let mut best: Option<(T, T)> = None;
        for (&t, &p) in self.times.iter().zip(&self.probabilities) {
            if best.is_none_or(|(_, bp)| p > bp) {
                best = Some((t, p));
            }
        }
        best
    }

    /// Largest pointwise difference against another series on the same grid.
    pub fn max_deviation(&self, other: &Self) -> T {
        self.probabilities
            .iter()
            .zip(&other.probabilities)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }
}

/// Grid `t_j = j t_max / (steps - 1)` for `j = 0..steps`, inclusive of both ends.
pub fn uniform_grid<T: Real>(t_max: T, steps: usize) -> Result<Vec<T>> {
    if steps < 2 {
        return domain(format!("time grid needs at least 2 steps, got {steps}"));
    }
    if !t_max.is_finite() || t_max < T::zero() {
        return domain(format!(
            "t_max must be finite and non-negative, got {t_max}"
        ));
    }
    let denom = T::from_usize(steps - 1).expect("step count representable");
    Ok((0..steps)
        .map(|j| t_max * T::from_usize(j).expect("step representable") / denom)
        .collect())
}

/// A Hamiltonian's eigendecomposition, reused across evolution times.
#[derive(Debug, Clone)]
pub struct Propagator<T> {
    spectrum: SpectralDecomposition<T>,
}

impl<T: Real> Propagator<T> {
    pub fn new(hamiltonian: &Matrix<T>) -> Result<Self> {
        Ok(Self {
            spectrum: eig_sym(hamiltonian)?,
        })
    }

    pub fn from_spectrum(spectrum: SpectralDecomposition<T>) -> Self {
        Self { spectrum }
    }

    pub fn spectrum(&self) -> &SpectralDecomposition<T> {
        &self.spectrum
    }

    pub fn dim(&self) -> usize {
        self.spectrum.dim()
    }

    fn check_dim(&self, psi: &StateVector<T>) -> Result<()> {
        if psi.len() != self.dim() {
            return domain(format!(
                "state has {} amplitudes but the Hamiltonian is {}x{}",
                psi.len(),
                self.dim(),
                self.dim()
            ));
        }
        Ok(())
    }

    /// Coefficients `⟨ψ_j|ψ0⟩` in the eigenbasis.
    fn eigen_coefficients(&self, psi0: &StateVector<T>) -> Vec<Complex<T>> {
        (0..self.dim())
            .map(|j| psi0.project_real(&self.spectrum.eigenvector(j)))
            .collect()
    }

    fn phases(&self, t: T) -> impl Iterator<Item = Complex<T>> + '_ {
        self.spectrum
            .eigenvalues()
            .iter()
            .map(move |&e| Complex::from_polar(T::one(), -(e * t)))
    }

    /// `V e^{-iΛt} Vᵀ ψ0`.
    pub fn evolve(&self, psi0: &StateVector<T>, t: T) -> Result<StateVector<T>> {
        self.check_dim(psi0)?;
        if t == T::zero() {
            return Ok(psi0.clone());
        }
        let v = self.spectrum.eigenvectors();
        let rotated: Vec<Complex<T>> = self
            .eigen_coefficients(psi0)
            .into_iter()
            .zip(self.phases(t))
            .map(|(c, ph)| c * ph)
            .collect();
        let amplitudes = (0..self.dim())
            .map(|i| rotated.iter().enumerate().map(|(j, c)| c * v[(i, j)]).sum())
            .collect();
        Ok(StateVector {
            amplitudes,
            basis: psi0.basis,
        })
    }

    /// `|⟨marked|ψ(t)⟩|²` over a uniform grid on `[0, t_max]`.
    pub fn success_curve(
        &self,
        psi0: &StateVector<T>,
        marked: usize,
        t_max: T,
        steps: usize,
    ) -> Result<TimeSeries<T>> {
        self.check_dim(psi0)?;
        if marked >= self.dim() {
            return domain(format!("marked index {marked} out of range"));
        }
        let times = uniform_grid(t_max, steps)?;
        let v = self.spectrum.eigenvectors();
        // Weight of eigenvector j on the marked state times its initial coefficient.
        let weights: Vec<Complex<T>> = self
            .eigen_coefficients(psi0)
            .into_iter()
            .enumerate()
            .map(|(j, c)| c * v[(marked, j)])
            .collect();
        let probabilities = times
            .iter()
            .map(|&t| {
                if t == T::zero() {
                    return psi0.probability(marked);
                }
                weights
                    .iter()
                    .zip(self.phases(t))
                    .map(|(w, ph)| w * ph)
                    .sum::<Complex<T>>()
                    .norm_sqr()
            })
            .collect();
        Ok(TimeSeries {
            times,
            probabilities,
        })
    }

    /// Per-eigenvector `(E_i, |⟨s|ψ_i⟩|², |⟨marked|ψ_i⟩|²)`.
    pub fn overlap_spectrum(
        &self,
        s: &StateVector<T>,
        marked: usize,
    ) -> Result<Vec<OverlapRecord<T>>> {
        self.check_dim(s)?;
        if marked >= self.dim() {
            return domain(format!("marked index {marked} out of range"));
        }
        let v = self.spectrum.eigenvectors();
        Ok(self
            .spectrum
            .eigenvalues()
            .iter()
            .enumerate()
            .map(|(i, &energy)| OverlapRecord {
                index: i,
                energy,
                overlap_s: s.project_real(&self.spectrum.eigenvector(i)).norm_sqr(),
                overlap_w: v[(marked, i)] * v[(marked, i)],
            })
            .collect())
    }
}

/// Overlaps of the start state and the marked state with one eigenvector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapRecord<T> {
    pub index: usize,
    pub energy: T,
    pub overlap_s: T,
    pub overlap_w: T,
}

pub fn evolve<T: Real>(h: &Matrix<T>, psi0: &StateVector<T>, t: T) -> Result<StateVector<T>> {
    Propagator::new(h)?.evolve(psi0, t)
}

pub fn success_curve<T: Real>(
    h: &Matrix<T>,
    psi0: &StateVector<T>,
    marked: usize,
    t_max: T,
    steps: usize,
) -> Result<TimeSeries<T>> {
    Propagator::new(h)?.success_curve(psi0, marked, t_max, steps)
}

pub fn overlap_spectrum<T: Real>(
    h: &Matrix<T>,
    s: &StateVector<T>,
    marked: usize,
) -> Result<Vec<OverlapRecord<T>>> {
    Propagator::new(h)?.overlap_spectrum(s, marked)
}
