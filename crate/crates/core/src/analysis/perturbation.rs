//! Degenerate perturbation theory for J(n, 3) in the `(d_0, r, r', r'')` basis.

use crate::error::{domain, Error, Result};
use crate::johnson::JohnsonParams;
use crate::linalg::eig_sym;
use crate::matrix::Matrix;
use crate::reduced::{check_gamma, search_hamiltonian, transformed_hamiltonian};
use crate::scalar::Real;

const NEWTON_MAX_ITER: usize = 100;
const EIGEN_MATCH: f64 = 1e-8;
const SINGULAR: f64 = 1e-10;

fn check_n(n: usize) -> Result<()> {
    if n < 6 {
        return domain(format!("perturbation analysis needs n >= 6, got {n}"));
    }
    Ok(())
}

fn nf<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("n representable")
}

/// Leading and first-order pieces of the distance-basis Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveSplitting<T> {
    /// `diag(-1, -γn, -2γn, -3γn)`.
    pub h0: Matrix<T>,
    /// The `Θ(√n)` hopping terms.
    pub h1: Matrix<T>,
    /// `⟨d_0|H0 + H1|d_3⟩`.
    pub d0_d3_coupling: T,
}

/// Splits `H` on J(n, 3) by order in `n`.
///
/// The marked state `d_0` and the start state `≈ d_3` have no direct
/// coupling at this order, which is why this splitting cannot explain
/// the search.
pub fn naive_splitting_diagnostic<T: Real>(n: usize, gamma: T) -> Result<NaiveSplitting<T>> {
    check_n(n)?;
    check_gamma(gamma)?;
    let n: T = nf(n);
    let g = -gamma;
    let z = T::zero();
    let h0 = Matrix::from_rows(&[
        [-T::one(), z, z, z],
        [z, g * n, z, z],
        [z, z, g * T::cst(2.0) * n, z],
        [z, z, z, g * T::cst(3.0) * n],
    ]);
    let s01 = g * (T::cst(3.0) * n).sqrt();
    let s12 = g * T::cst(2.0) * (T::cst(2.0) * n).sqrt();
    let s23 = g * T::cst(3.0) * n.sqrt();
    let h1 = Matrix::from_rows(&[
        [z, s01, z, z],
        [s01, z, s12, z],
        [z, s12, z, s23],
        [z, z, s23, z],
    ]);
    let d0_d3_coupling = h0[(0, 3)] + h1[(0, 3)];
    Ok(NaiveSplitting {
        h0,
        h1,
        d0_d3_coupling,
    })
}

/// Leading part `H'^(0)` of the transformed Hamiltonian, keeping the
/// `Θ(n)` and `Θ(√n)` terms.
pub fn leading_hamiltonian<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    check_n(n)?;
    check_gamma(gamma)?;
    let n: T = nf(n);
    let g = -gamma;
    let z = T::zero();
    let s3n = g * (T::cst(3.0) * n).sqrt();
    let s2n = -g * T::cst(2.0) * (T::cst(2.0) * n).sqrt();
    Ok(Matrix::from_rows(&[
        [-T::one(), z, z, s3n],
        [z, g * (T::cst(3.0) * n - T::cst(9.0)), z, z],
        [z, z, g * (T::cst(2.0) * n - T::cst(17.0)), s2n],
        [s3n, z, s2n, g * (n - T::cst(2.0))],
    ]))
}

/// First-order correction `H'^(1)`: the `Θ(1/√n)` terms.
pub fn first_order_correction<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    check_n(n)?;
    check_gamma(gamma)?;
    let n: T = nf(n);
    let g = -gamma;
    let z = T::zero();
    let rn = n.sqrt();
    let e01 = g * T::cst(3.0) * T::cst(6.0).sqrt() / rn;
    let e03 = -g * T::cst(3.0) * T::cst(3.0).sqrt() / (T::cst(2.0) * rn);
    let e23 = g * T::cst(13.0) * T::cst(2.0).sqrt() / rn;
    Ok(Matrix::from_rows(&[
        [z, e01, z, e03],
        [e01, z, z, z],
        [z, z, z, e23],
        [e03, z, e23, z],
    ]))
}

/// The 3×3 block of `H'^(0)` over `(d_0, r', r'')`.
pub fn leading_block<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    let h = leading_hamiltonian(n, gamma)?;
    const IDX: [usize; 3] = [0, 2, 3];
    Ok(Matrix::from_fn(3, 3, |i, j| h[(IDX[i], IDX[j])]))
}

/// Coefficients of `λ³, λ², λ, 1` in `det(B - λI)` for the leading block `B`.
pub fn char_cubic_coeffs<T: Real>(n: usize, gamma: T) -> Result<[T; 4]> {
    check_n(n)?;
    check_gamma(gamma)?;
    let n: T = nf(n);
    let c = T::cst;
    let g = gamma;
    Ok([
        -T::one(),
        -(c(3.0) * g * n - c(19.0) * g + T::one()),
        g * (c(19.0) - c(34.0) * g - c(2.0) * g * n * n + n * (c(32.0) * g - c(3.0))),
        g * g * (c(-34.0) + n * (c(29.0) - c(51.0) * g) + n * n * (c(-2.0) + c(6.0) * g)),
    ])
}

fn cubic_eval<T: Real>(c: &[T; 4], x: T) -> (T, T) {
    let value = ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
    let slope = (T::cst(3.0) * c[0] * x + T::cst(2.0) * c[1]) * x + c[2];
    (value, slope)
}

/// The expansion point `-1 - 1/(2n)` shared by `E_r` and `λ_u` at `γ_c`.
pub fn lambda_u_seed<T: Real>(n: usize) -> T {
    -T::one() - T::one() / (T::cst(2.0) * nf(n))
}

/// Root of the characteristic cubic closest to `-1 - 1/(2n)`.
///
/// Newton from the seed, checked against the block spectrum; if Newton
/// stalls or lands on a different root, the block eigenvalue nearest the
/// seed is returned instead.
pub fn lambda_u<T: Real>(n: usize, gamma: T) -> Result<T> {
    let coeffs = char_cubic_coeffs(n, gamma)?;
    let seed = lambda_u_seed::<T>(n);
    let eigs = eig_sym(&leading_block(n, gamma)?)?;
    let nearest = *eigs
        .eigenvalues()
        .iter()
        .min_by(|a, b| (**a - seed).abs().partial_cmp(&(**b - seed).abs()).unwrap())
        .expect("3×3 block");

    let tol = T::cst(T::NEWTON_TOLERANCE);
    let mut x = seed;
    let mut converged = false;
    for _ in 0..NEWTON_MAX_ITER {
        let (value, slope) = cubic_eval(&coeffs, x);
        if slope == T::zero() || !slope.is_finite() {
            break;
        }
        let step = value / slope;
        x -= step;
        if step.abs() <= tol * x.abs().max(T::one()) {
            converged = true;
            break;
        }
    }
    let agree = T::cst(EIGEN_MATCH) * nearest.abs().max(T::one());
    if converged && x.is_finite() && (x - nearest).abs() <= agree {
        Ok(x)
    } else {
        Ok(nearest)
    }
}

/// Eigenvector `(u_d0, u_r', u_r'')` of the leading block for `lambda`,
/// normalized with `u_d0 > 0`.
pub fn vector_u<T: Real>(n: usize, gamma: T, lambda: T) -> Result<[T; 3]> {
    check_n(n)?;
    check_gamma(gamma)?;
    if gamma == T::zero() {
        return Err(Error::Singular("vector_u divides by gamma".into()));
    }
    let block = leading_block(n, gamma)?;
    let eigs = eig_sym(&block)?;
    let tol = T::cst(EIGEN_MATCH) * lambda.abs().max(T::one());
    if !eigs
        .eigenvalues()
        .iter()
        .any(|&e| (e - lambda).abs() <= tol)
    {
        return domain(format!(
            "{lambda} is not an eigenvalue of the leading block (spectrum {:?})",
            eigs.eigenvalues()
        ));
    }
    let n: T = nf(n);
    let denom = T::cst(2.0) * n - T::cst(17.0) + lambda / gamma;
    if denom.abs() < T::cst(SINGULAR) {
        return Err(Error::Singular(format!("2n - 17 + λ/γ = {denom} vanishes")));
    }
    let u_rpp = -(T::one() + lambda) / (gamma * (T::cst(3.0) * n).sqrt());
    // The block's (r', r'') entry is -2√(2n), so the factor carries √2.
    let u_rp = T::cst(2.0) * (T::cst(2.0) * n).sqrt() / denom * u_rpp;
    let norm = (T::one() + u_rp * u_rp + u_rpp * u_rpp).sqrt();
    Ok([T::one() / norm, u_rp / norm, u_rpp / norm])
}

/// `|u⟩` placed in the four-dimensional `(d_0, r, r', r'')` basis.
pub fn embed_u<T: Real>(u: &[T; 3]) -> [T; 4] {
    [u[0], T::zero(), u[1], u[2]]
}

#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveTwoLevel<T> {
    /// `[[H'_rr, H'_ru], [H'_ur, H'_uu]]` from the full `H'`.
    pub matrix: Matrix<T>,
    pub e_plus: T,
    pub e_minus: T,
    /// `(α_r, α_u)` of the `E_minus` eigenstate.
    pub alpha_minus: (T, T),
    /// `(α_r, α_u)` of the `E_plus` eigenstate.
    pub alpha_plus: (T, T),
}

impl<T: Real> EffectiveTwoLevel<T> {
    pub fn gap(&self) -> T {
        self.e_plus - self.e_minus
    }

    pub fn off_diagonal(&self) -> T {
        self.matrix[(0, 1)]
    }
}

/// Projects the full `H'` onto `span{|r⟩, |u⟩}` and diagonalizes it.
/// `e_plus` is the higher level.
pub fn effective_two_level<T: Real>(n: usize, gamma: T) -> Result<EffectiveTwoLevel<T>> {
    let lambda = lambda_u(n, gamma)?;
    let u = embed_u(&vector_u(n, gamma, lambda)?);
    let h = transformed_hamiltonian(n, gamma)?;
    Ok(two_level_from(&h, &u))
}

fn two_level_from<T: Real>(h: &Matrix<T>, u: &[T; 4]) -> EffectiveTwoLevel<T> {
    let r = [T::zero(), T::one(), T::zero(), T::zero()];
    // H' is symmetric only up to rounding; average the two orderings.
    let ru = (h.quadratic_form(&r, u) + h.quadratic_form(u, &r)) / T::cst(2.0);
    let matrix = Matrix::from_rows(&[[h.quadratic_form(&r, &r), ru], [ru, h.quadratic_form(u, u)]]);
    let eig = eig_sym(&matrix).expect("finite symmetric 2×2");
    let v = eig.eigenvectors();
    EffectiveTwoLevel {
        e_minus: eig.eigenvalues()[0],
        e_plus: eig.eigenvalues()[1],
        alpha_minus: (v[(0, 0)], v[(1, 0)]),
        alpha_plus: (v[(0, 1)], v[(1, 1)]),
        matrix,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationReport<T> {
    pub n: usize,
    pub gamma: T,
    pub cubic_coefficients: [T; 4],
    pub lambda_u: T,
    /// `E_r = -γ(3n - 9)`, the unperturbed energy of `|r⟩`.
    pub e_r: T,
    pub u: [T; 3],
    pub effective_2x2: Matrix<T>,
    pub e_plus: T,
    pub e_minus: T,
    pub predicted_gap: T,
    /// `π / predicted_gap`.
    pub predicted_runtime: T,
}

pub fn perturbation_report<T: Real>(n: usize, gamma: T) -> Result<PerturbationReport<T>> {
    let cubic_coefficients = char_cubic_coeffs(n, gamma)?;
    let lambda = lambda_u(n, gamma)?;
    let u = vector_u(n, gamma, lambda)?;
    let h = transformed_hamiltonian(n, gamma)?;
    let two = two_level_from(&h, &embed_u(&u));
    let gap = two.gap();
    Ok(PerturbationReport {
        n,
        gamma,
        cubic_coefficients,
        lambda_u: lambda,
        e_r: -gamma * (T::cst(3.0) * nf(n) - T::cst(9.0)),
        u,
        effective_2x2: two.matrix,
        e_plus: two.e_plus,
        e_minus: two.e_minus,
        predicted_gap: gap,
        predicted_runtime: T::PI() / gap,
    })
}

/// Exact distance-basis Hamiltonian minus `H0 + H1`.
pub fn naive_residual<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    let split = naive_splitting_diagnostic(n, gamma)?;
    let exact = search_hamiltonian(JohnsonParams::new(n, 3)?, gamma)?;
    Ok(exact.hamiltonian().sub(&split.h0.add(&split.h1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::critical::{energy_gap, gamma_c_formula_k3};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det3(m: &Matrix<f64>) -> f64 {
        m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
            - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
            + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
    }

    /// Recovers the cubic from four samples of `det(B - λI)` by solving the
    /// Vandermonde system.
    fn cubic_by_interpolation(b: &Matrix<f64>) -> [f64; 4] {
        let xs = [-2.0, -1.0, 0.5, 1.5];
        let mut rows: Vec<[f64; 5]> = xs
            .iter()
            .map(|&x| {
                let shifted = b.sub(&Matrix::identity(3).scale(x));
                [x * x * x, x * x, x, 1.0, det3(&shifted)]
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&a, &c| rows[a][col].abs().partial_cmp(&rows[c][col].abs()).unwrap())
                .unwrap();
            rows.swap(col, pivot);
            let pivot_row = rows[col];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != col {
                    let f = row[col] / pivot_row[col];
                    for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                        *x -= f * p;
                    }
                }
            }
        }
        [0, 1, 2, 3].map(|i| rows[i][4] / rows[i][i])
    }

    #[test]
    fn naive_splitting_has_no_d0_d3_edge() {
        for (n, g) in [(6usize, 0.1f64), (100, 0.00345), (1000, 1.0 / 3000.0)] {
            let s = naive_splitting_diagnostic(n, g).unwrap();
            assert_eq!(s.d0_d3_coupling, 0.0);
        }
        let n = 100usize;
        let s = naive_splitting_diagnostic(n, 1.0 / (3.0 * n as f64)).unwrap();
        assert!((s.h0[(0, 0)] + 1.0).abs() < 1e-15);
        assert!((s.h0[(3, 3)] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn naive_residual_is_below_sqrt_n() {
        for n in [100usize, 1000] {
            let g = 1.0 / n as f64;
            let res = naive_residual(n, g).unwrap();
            // Leftover entries are O(γ), against Θ(γ√n) hopping.
            let worst = res.max_abs() / g;
            assert!(worst <= 20.0, "n={n}: {worst}");
            assert!(worst / (n as f64).sqrt() < 2.0);
        }
    }

    #[test]
    fn leading_plus_first_order_tracks_exact() {
        for n in [100usize, 1000] {
            let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
            let exact = transformed_hamiltonian(n, g).unwrap();
            let approx = leading_hamiltonian(n, g)
                .unwrap()
                .add(&first_order_correction(n, g).unwrap());
            // Dropped terms are o(1/√n) inside the -γ prefactor.
            let worst = exact.max_abs_diff(&approx) / g;
            assert!(worst * (n as f64).sqrt() < 10.0, "n={n}: {worst}");
        }
    }

    #[test]
    fn cubic_zero_gamma() {
        let c = char_cubic_coeffs(50, 0.0f64).unwrap();
        assert_eq!(c, [-1.0, -1.0, 0.0, 0.0]);
    }

    #[test]
    fn cubic_matches_determinant() {
        let c = char_cubic_coeffs(100, 0.00345f64).unwrap();
        let fit = cubic_by_interpolation(&leading_block(100, 0.00345).unwrap());
        for i in 0..4 {
            assert!(
                (c[i] - fit[i]).abs() <= 1e-10 * c[i].abs().max(1e-300),
                "{i}: {c:?} {fit:?}"
            );
        }
    }

    #[test]
    fn cubic_matches_determinant_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n: usize = rng.gen_range(6..2000);
            let g: f64 = rng.gen_range(0.1..3.0) / (3.0 * n as f64);
            let c = char_cubic_coeffs(n, g).unwrap();
            let fit = cubic_by_interpolation(&leading_block(n, g).unwrap());
            let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for i in 0..4 {
                assert!(
                    (c[i] - fit[i]).abs() <= 1e-9 * scale,
                    "n={n} g={g} {c:?} {fit:?}"
                );
            }
        }
    }

    #[test]
    fn cubic_roots_are_block_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n: usize = rng.gen_range(6..1500);
            let g: f64 = rng.gen_range(0.3..2.0) / (3.0 * n as f64);
            let eigs = eig_sym(&leading_block(n, g).unwrap()).unwrap();
            let c = char_cubic_coeffs(n, g).unwrap();
            let lu = lambda_u(n, g).unwrap();
            // Deflate the cubic by λ_u and solve the quadratic for the rest.
            let a = c[0];
            let b = c[1] + a * lu;
            let cc = c[2] + b * lu;
            let disc = (b * b - 4.0 * a * cc).max(0.0).sqrt();
            let mut roots = [lu, (-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)];
            roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for (r, e) in roots.iter().zip(eigs.eigenvalues()) {
                assert!(
                    (r - e).abs() <= 1e-9 * e.abs().max(1.0),
                    "n={n} {roots:?} {:?}",
                    eigs.eigenvalues()
                );
            }
        }
    }

    #[test]
    fn lambda_u_expansion() {
        for n in [100usize, 300, 1000, 10_000] {
            let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
            let lu = lambda_u(n, g).unwrap();
            let nf = n as f64;
            assert!((lu + 1.0 + 0.5 / nf).abs() * nf * nf <= 10.0, "n={n}: {lu}");
            let e_r = -g * (3.0 * nf - 9.0);
            // E_r = -1 - 1/(2n) + 21/(2n²) + O(1/n³) at this rate.
            assert!((lu - e_r).abs() * nf * nf <= 25.0);
        }
        let g = gamma_c_formula_k3::<f64>(100).unwrap().gamma;
        let lu = lambda_u(100, g).unwrap();
        assert!((lu + 1.005).abs() < 1e-3);
        let eigs = eig_sym(&leading_block(100, g).unwrap()).unwrap();
        assert!(eigs.eigenvalues().iter().any(|e| (e - lu).abs() < 1e-12));
    }

    #[test]
    fn lambda_u_falls_back_far_from_critical() {
        // Far from γ_c the seed may sit between roots; whatever Newton does,
        // the answer must be the block eigenvalue nearest the seed.
        for g in [1e-5f64, 0.05, 0.2] {
            let n = 50;
            let lu = lambda_u(n, g).unwrap();
            let seed = lambda_u_seed::<f64>(n);
            let eigs = eig_sym(&leading_block(n, g).unwrap()).unwrap();
            let nearest = eigs
                .eigenvalues()
                .iter()
                .copied()
                .min_by(|a, b| (a - seed).abs().partial_cmp(&(b - seed).abs()).unwrap())
                .unwrap();
            assert!((lu - nearest).abs() < 1e-8);
        }
    }

    #[test]
    fn vector_u_is_block_eigenvector() {
        let n = 100;
        let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
        let lu = lambda_u(n, g).unwrap();
        let u = vector_u(n, g, lu).unwrap();
        assert!((u.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
        assert!(u[0] > 0.0);
        let block = leading_block(n, g).unwrap();
        let bu = block.matvec(&u);
        let res: f64 = bu
            .iter()
            .zip(&u)
            .map(|(a, b)| (a - lu * b).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-8, "{res}");

        let eigs = eig_sym(&block).unwrap();
        let idx = eigs
            .eigenvalues()
            .iter()
            .position(|e| (e - lu).abs() < 1e-10)
            .unwrap();
        let v = eigs.eigenvector(idx);
        let sign = v[0].signum();
        for i in 0..3 {
            assert!((u[i] - sign * v[i]).abs() < 1e-8);
        }
    }

    #[test]
    fn vector_u_approaches_marked_state() {
        let mut last = 0.0;
        for n in [100usize, 1000, 10_000] {
            let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
            let u = vector_u(n, g, lambda_u(n, g).unwrap()).unwrap();
            assert!(u[0] > last);
            last = u[0];
        }
        assert!(last > 0.99);
    }

    #[test]
    fn vector_u_rejects_non_eigenvalue() {
        let g = 0.00345;
        assert!(matches!(vector_u(100, g, -1.2f64), Err(Error::Domain(_))));
        assert!(matches!(
            vector_u(100, 0.0f64, -1.0),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn effective_two_level_at_critical_rate() {
        for n in [100usize, 1000] {
            let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
            let two = effective_two_level(n, g).unwrap();
            assert_eq!(two.matrix.asymmetry(), 0.0);
            assert!(two.e_minus <= two.e_plus);
            let nf = n as f64;
            let target = 6f64.sqrt() / nf.powf(1.5);
            assert!(two.off_diagonal() < 0.0);
            assert!((two.off_diagonal().abs() / target - 1.0).abs() < 0.25);
            assert!((two.gap() / (2.0 * target) - 1.0).abs() < 0.25);
            for e in [two.e_plus, two.e_minus] {
                assert!((e + 1.0).abs() < 1.0 / nf);
            }
            let exact = energy_gap(JohnsonParams::new(n, 3).unwrap(), g).unwrap();
            assert!((two.gap() / exact - 1.0).abs() < 0.2);
            // Near-equal mixtures of r and u.
            let (ar, au) = two.alpha_minus;
            assert!((ar.abs() - au.abs()).abs() < 0.3);
            assert!((ar * ar + au * au - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn report_is_consistent() {
        let n = 1000;
        let g = gamma_c_formula_k3::<f64>(n).unwrap().gamma;
        let r = perturbation_report(n, g).unwrap();
        assert_eq!(r.predicted_gap, r.e_plus - r.e_minus);
        assert!(r.e_minus <= r.e_plus);
        assert!((r.predicted_runtime - std::f64::consts::PI / r.predicted_gap).abs() < 1e-9);
        let t = std::f64::consts::FRAC_PI_2 * (1000f64.powi(3) / 6.0).sqrt();
        assert!((r.predicted_runtime / t - 1.0).abs() < 0.05);
        assert!((r.u.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_small_n() {
        assert!(char_cubic_coeffs(5, 0.1f64).is_err());
        assert!(lambda_u(5, 0.1f64).is_err());
        assert!(effective_two_level(5, 0.1f64).is_err());
    }
}
