use crate::error::{domain, Error, Result};
use crate::johnson::JohnsonParams;
use crate::linalg::Propagator;
use crate::reduced::search_hamiltonian;
use crate::scalar::Real;

/// How a critical jumping rate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMethod {
    /// `1/(3n) + 7/(6n²)`, valid for k = 3.
    FormulaK3,
    /// Bisection on the overlap balance of the two lowest eigenstates.
    Numeric,
}

impl GammaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            GammaMethod::FormulaK3 => "formula_k3",
            GammaMethod::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalGammaResult<T> {
    pub gamma: T,
    pub method: GammaMethod,
    /// `|⟨s|ψ₀⟩|² - |⟨s|ψ₁⟩|²` at `gamma`; zero for the closed form.
    pub residual: T,
}

/// Maximum number of geometric bracket expansions in [`gamma_c_numeric`].
pub const MAX_BRACKET_EXPANSIONS: usize = 10;

const MAX_BISECTIONS: usize = 400;

/// Closed-form critical rate for J(n, 3): `1/(3n) + 7/(6n²)`.
///
/// Accurate to `O(1/n³)`, inside the `o(1/n^{5/2})` precision the search
/// needs for its amplitude to reach one.
pub fn gamma_c_formula_k3<T: Real>(n: usize) -> Result<CriticalGammaResult<T>> {
    if n < 6 {
        return domain(format!("critical rate formula needs n >= 6, got {n}"));
    }
    let nf = T::from_usize(n).expect("n representable");
    Ok(CriticalGammaResult {
        gamma: T::one() / (T::cst(3.0) * nf) + T::cst(7.0) / (T::cst(6.0) * nf * nf),
        method: GammaMethod::FormulaK3,
        residual: T::zero(),
    })
}

/// `|⟨s|ψ₀(γ)⟩|² - |⟨s|ψ₁(γ)⟩|²` on the reduced model.
pub fn overlap_balance<T: Real>(params: JohnsonParams, gamma: T) -> Result<T> {
    let model = search_hamiltonian(params, gamma)?;
    let overlaps = model
        .propagator()?
        .overlap_spectrum(&model.initial_state(), model.marked_index())?;
    Ok(overlaps[0].overlap_s - overlaps[1].overlap_s)
}

/// Critical rate as the root of [`overlap_balance`].
///
/// Bisects on `[1/(2kn), 2/(kn)]`, widening the bracket geometrically (up
/// to [`MAX_BRACKET_EXPANSIONS`] times) if it does not straddle a sign
/// change, and stops once the bracket is narrower than
/// `T::BISECTION_WIDTH` (1e-12 for `f64`).
pub fn gamma_c_numeric<T: Real>(params: JohnsonParams) -> Result<CriticalGammaResult<T>> {
    params.require_reduced()?;
    let kn = T::from_usize(params.k() * params.n()).expect("kn representable");
    let mut lo = T::one() / (T::cst(2.0) * kn);
    let mut hi = T::cst(2.0) / kn;
    let mut f_lo = overlap_balance(params, lo)?;
    let mut f_hi = overlap_balance(params, hi)?;
    let mut expansions = 0;
    while f_lo.signum() == f_hi.signum() {
        if expansions == MAX_BRACKET_EXPANSIONS {
            return Err(Error::Search(format!(
                "no sign change of the overlap balance on [{lo}, {hi}] after {expansions} expansions"
            )));
        }
        expansions += 1;
        lo /= T::cst(2.0);
        hi *= T::cst(2.0);
        f_lo = overlap_balance(params, lo)?;
        f_hi = overlap_balance(params, hi)?;
    }
    if f_lo == T::zero() {
        return Ok(numeric(lo, f_lo));
    }
    if f_hi == T::zero() {
        return Ok(numeric(hi, f_hi));
    }

    let width = T::cst(T::BISECTION_WIDTH);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo < width {
            break;
        }
        let mid = lo + (hi - lo) / T::cst(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = overlap_balance(params, mid)?;
        if f_mid == T::zero() {
            return Ok(numeric(mid, f_mid));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let gamma = lo + (hi - lo) / T::cst(2.0);
    Ok(numeric(gamma, overlap_balance(params, gamma)?))
}

fn numeric<T: Real>(gamma: T, residual: T) -> CriticalGammaResult<T> {
    CriticalGammaResult {
        gamma,
        method: GammaMethod::Numeric,
        residual,
    }
}

/// Critical rate policy used by default: the closed form for k = 3, the
/// numeric search otherwise.
pub fn default_gamma<T: Real>(params: JohnsonParams) -> Result<CriticalGammaResult<T>> {
    if params.k() == 3 && params.n() >= 6 {
        gamma_c_formula_k3(params.n())
    } else {
        gamma_c_numeric(params)
    }
}

/// `E₁ - E₀` of the reduced search Hamiltonian.
pub fn energy_gap<T: Real>(params: JohnsonParams, gamma: T) -> Result<T> {
    let model = search_hamiltonian(params, gamma)?;
    let spectrum = Propagator::new(model.hamiltonian())?;
    Ok(spectrum
        .spectrum()
        .gap()
        .expect("reduced model has at least two states"))
}

/// `π√N / 2` with the exact vertex count `N = C(n, k)`.
pub fn predicted_peak_time<T: Real>(params: JohnsonParams) -> Result<T> {
    params.require_reduced()?;
    Ok(T::PI() * T::from_count(params.vertex_count()).sqrt() / T::cst(2.0))
}
