//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use crate::error::{domain, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Maximum number of full cyclic sweeps before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Components below this magnitude are skipped when fixing eigenvector signs.
const SIGN_THRESHOLD: f64 = 1e-8;

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
///
/// Every eigenvector has its first component of magnitude above `1e-8`
/// non-negative, so repeated runs produce identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition<T> {
    eigenvalues: Vec<T>,
    eigenvectors: Matrix<T>,
    sweeps: usize,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    /// Column `i` pairs with `eigenvalues()[i]`.
    pub fn eigenvectors(&self) -> &Matrix<T> {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, i: usize) -> Vec<T> {
        self.eigenvectors.column(i)
    }

    /// Number of Jacobi sweeps that were needed.
    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// `E_1 - E_0`, or `None` for a 1x1 problem.
    pub fn gap(&self) -> Option<T> {
        (self.dim() >= 2).then(|| self.eigenvalues[1] - self.eigenvalues[0])
    }

    /// `V diag(λ) Vᵀ`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.dim();
        let v = &self.eigenvectors;
        Matrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|l| v[(i, l)] * self.eigenvalues[l] * v[(j, l)])
                .sum()
        })
    }
}

/// Diagonalizes a real symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm falls below
/// `T::EIG_TOLERANCE` times the diagonal norm (1e-13 for `f64`), for at
/// most [`MAX_SWEEPS`] sweeps. Inputs asymmetric beyond
/// `T::SYMMETRY_TOLERANCE` relative are rejected.
pub fn eig_sym<T: Real>(m: &Matrix<T>) -> Result<SpectralDecomposition<T>> {
    if !m.is_square() {
        return domain(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        ));
    }
    if m.as_slice().iter().any(|x| !x.is_finite()) {
        return domain("eigensolver input has non-finite entries");
    }
    let asym = m.asymmetry();
    if asym > T::cst(T::SYMMETRY_TOLERANCE) {
        return domain(format!(
            "matrix is not symmetric (relative asymmetry {:e})",
            asym.as_f64()
        ));
    }

    let n = m.nrows();
    // Working copy, symmetrized. `vt` holds Vᵀ so that rotations touch
    // contiguous rows.
    let half = T::cst(0.5);
    let mut a = Matrix::from_fn(n, n, |i, j| half * (m[(i, j)] + m[(j, i)]));
    let mut vt = Matrix::<T>::identity(n);
    let tol = T::cst(T::EIG_TOLERANCE);
    let hundred = T::cst(100.0);

    let mut sweeps = 0;
    loop {
        let (off, diag) = off_and_diag_norms(&a);
        if off <= tol * diag {
            break;
        }
        if sweeps == MAX_SWEEPS {
            let residual = if diag > T::zero() { off / diag } else { off };
            return Err(Error::Convergence {
                sweeps,
                residual: residual.as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let (app, aqq) = (a[(p, p)], a[(q, q)]);
                // After a few sweeps drop elements that are below rounding of
                // both diagonal entries.
                let g = hundred * apq.abs();
                if sweeps > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = T::zero();
                    a[(q, p)] = T::zero();
                    continue;
                }
                rotate(&mut a, &mut vt, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .partial_cmp(&a[(j, j)])
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<T> = order.iter().map(|&i| a[(i, i)]).collect();
    let threshold = T::cst(SIGN_THRESHOLD);
    let mut eigenvectors = Matrix::from_fn(n, n, |i, j| vt[(order[j], i)]);
    for j in 0..n {
        let flip = (0..n)
            .map(|i| eigenvectors[(i, j)])
            .find(|x| x.abs() > threshold)
            .is_some_and(|x| x < T::zero());
        if flip {
            for i in 0..n {
                eigenvectors[(i, j)] = -eigenvectors[(i, j)];
            }
        }
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        sweeps,
    })
}

fn off_and_diag_norms<T: Real>(a: &Matrix<T>) -> (T, T) {
    let n = a.nrows();
    let mut off = T::zero();
    let mut diag = T::zero();
    for i in 0..n {
        diag += a[(i, i)] * a[(i, i)];
        for j in (i + 1)..n {
            off += a[(i, j)] * a[(i, j)];
        }
    }
    ((off + off).sqrt(), diag.sqrt())
}

/// One Jacobi rotation annihilating `a[p][q]`, accumulated into `vt`.
fn rotate<T: Real>(a: &mut Matrix<T>, vt: &mut Matrix<T>, p: usize, q: usize) {
    let n = a.nrows();
    let apq = a[(p, q)];
    let (app, aqq) = (a[(p, p)], a[(q, q)]);
    let theta = (aqq - app) / (apq + apq);
    let t = if (theta * theta).is_infinite() {
        T::one() / (theta + theta)
    } else {
        theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    a[(p, p)] = app - t * apq;
    a[(q, q)] = aqq + t * apq;
    a[(p, q)] = T::zero();
    a[(q, p)] = T::zero();
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[(p, r)];
        let arq = a[(q, r)];
        let new_p = c * arp - s * arq;
        let new_q = s * arp + c * arq;
        a[(p, r)] = new_p;
        a[(r, p)] = new_p;
        a[(q, r)] = new_q;
        a[(r, q)] = new_q;
    }
    for r in 0..n {
        let vp = vt[(p, r)];
        let vq = vt[(q, r)];
        vt[(p, r)] = c * vp - s * vq;
        vt[(q, r)] = s * vp + c * vq;
    }
}
