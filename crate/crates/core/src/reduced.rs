//! The (k+1)-dimensional distance-basis model of search on J(n, k).
//!
//! Basis state `|d_i⟩` is the normalized superposition of all vertices at
//! distance `i` from the marked vertex; the marked vertex is always `|d_0⟩`.
//! Because Johnson graphs are distance-transitive this subspace is invariant
//! under the search Hamiltonian `H = -γA - |w⟩⟨w|`.

use crate::error::{domain, Result};
use crate::johnson::{class_sizes, FullGraph, JohnsonParams};
use crate::linalg::{Basis, Propagator, StateVector, TimeSeries};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Neighbor counts of a distance-transitive graph, per distance class.
///
/// A class-`i` vertex has `c_i` neighbors in class `i - 1`, `a_i` in class
/// `i` and `b_i` in class `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    /// `c_1 ..= c_k`
    pub c: Vec<u64>,
    /// `a_0 ..= a_k`
    pub a: Vec<u64>,
    /// `b_0 .. b_k`
    pub b: Vec<u64>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn down(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `b_i`, with `b_k = 0`.
    pub fn up(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    pub fn column_sum(&self, i: usize) -> u64 {
        self.down(i) + self.a[i] + self.up(i)
    }
}

/// `c_i = i²`, `a_i = i(n - 2i)`, `b_i = (k - i)(n - k - i)`.
pub fn intersection_array(params: JohnsonParams) -> Result<IntersectionArray> {
    params.require_reduced()?;
    let (n, k) = (params.n() as u64, params.k() as u64);
    Ok(IntersectionArray {
        c: (1..=k).map(|i| i * i).collect(),
        a: (0..=k).map(|i| i * (n - 2 * i)).collect(),
        b: (0..k).map(|i| (k - i) * (n - k - i)).collect(),
    })
}

/// Tridiagonal adjacency in the distance basis.
///
/// Diagonal `a_i`; off-diagonal `√(b_i c_{i+1}) = (i+1)√((k-i)(n-k-i))`,
/// the square root taken of the exact integer radicand.
pub fn reduced_adjacency<T: Real>(params: JohnsonParams) -> Result<Matrix<T>> {
    let ia = intersection_array(params)?;
    let dim = params.reduced_dim();
    let mut m = Matrix::zeros(dim, dim);
    for i in 0..dim {
        m[(i, i)] = T::from_u64(ia.a[i]).expect("count representable");
        if i + 1 < dim {
            let radicand = ia.up(i) as u128 * ia.down(i + 1) as u128;
            let x = T::from_count(radicand).sqrt();
            m[(i, i + 1)] = x;
            m[(i + 1, i)] = x;
        }
    }
    Ok(m)
}

/// Search Hamiltonian restricted to the distance basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedModel<T> {
    params: JohnsonParams,
    gamma: T,
    adjacency: Matrix<T>,
    hamiltonian: Matrix<T>,
}

/// Builds `H = -γA - E₀₀` in the distance basis.
///
/// `γ = 0` is accepted and leaves only the oracle term.
pub fn search_hamiltonian<T: Real>(params: JohnsonParams, gamma: T) -> Result<ReducedModel<T>> {
    check_gamma(gamma)?;
    let adjacency = reduced_adjacency::<T>(params)?;
    let mut hamiltonian = adjacency.scale(-gamma);
    hamiltonian[(0, 0)] -= T::one();
    Ok(ReducedModel {
        params,
        gamma,
        adjacency,
        hamiltonian,
    })
}

pub(crate) fn check_gamma<T: Real>(gamma: T) -> Result<()> {
    if !gamma.is_finite() || gamma < T::zero() {
        return domain(format!(
            "jumping rate must be finite and non-negative, got {gamma}"
        ));
    }
    Ok(())
}

impl<T: Real> ReducedModel<T> {
    pub fn params(&self) -> JohnsonParams {
        self.params
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn adjacency(&self) -> &Matrix<T> {
        &self.adjacency
    }

    pub fn hamiltonian(&self) -> &Matrix<T> {
        &self.hamiltonian
    }

    /// Position of `|w⟩ = |d_0⟩`.
    pub fn marked_index(&self) -> usize {
        0
    }

    pub fn initial_state(&self) -> StateVector<T> {
        initial_state(self.params).expect("params validated at construction")
    }

    pub fn propagator(&self) -> Result<Propagator<T>> {
        Propagator::new(&self.hamiltonian)
    }

    pub fn success_curve(&self, t_max: T, steps: usize) -> Result<TimeSeries<T>> {
        self.propagator()?
            .success_curve(&self.initial_state(), self.marked_index(), t_max, steps)
    }
}

/// Equal superposition over all vertices: component `i` is `√|d_i| / √N`.
pub fn initial_state<T: Real>(params: JohnsonParams) -> Result<StateVector<T>> {
    let sizes = class_sizes(params)?;
    let total = T::from_count(params.vertex_count()).sqrt();
    let amps: Vec<T> = sizes
        .iter()
        .map(|&s| T::from_count(s).sqrt() / total)
        .collect();
    StateVector::from_real(&amps, Basis::Distance)
}

/// `N x (k+1)` isometry whose column `i` is the normalized indicator of the
/// vertices at distance `i` from `marked`.
pub fn class_isometry<T: Real>(graph: &FullGraph, marked: usize) -> Matrix<T> {
    let classes = crate::johnson::distance_classes(graph, marked);
    let mut p = Matrix::zeros(graph.vertex_count(), classes.len());
    for (i, class) in classes.iter().enumerate() {
        let w = T::one() / T::from_usize(class.len()).expect("class size").sqrt();
        for &v in class {
            p[(v, i)] = w;
        }
    }
    p
}

/// Orthogonal change of basis from `(d_0, d_1, d_2, d_3)` to
/// `(d_0, r, r', r'')` for J(n, 3).
///
/// `|r⟩` is the uniform superposition over all unmarked vertices. `|r'⟩`
/// lives on `d_2, d_3` only, and `|r''⟩` completes the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisChange<T> {
    pub n: usize,
    /// Columns are `d_0, r, r', r''` in distance-basis coordinates.
    pub t: Matrix<T>,
}

pub fn basis_change_t<T: Real>(n: usize) -> Result<BasisChange<T>> {
    if n < 6 {
        return domain(format!("basis change needs n >= 6, got {n}"));
    }
    let f = |x: f64| T::cst(x);
    let nf = f(n as f64);
    let n2p2 = nf * nf + f(2.0);
    let np4 = nf + f(4.0);
    let nm4 = nf - f(4.0);
    let nm5 = nf - f(5.0);

    let d0 = [T::one(), T::zero(), T::zero(), T::zero()];
    let r_norm = (f(18.0) / n2p2).sqrt();
    let r = [
        T::zero(),
        r_norm,
        r_norm * (nm4 / f(2.0)).sqrt(),
        r_norm * (nm4 * nm5 / f(18.0)).sqrt(),
    ];
    let rp_norm = (f(9.0) / np4).sqrt();
    let rp = [
        T::zero(),
        T::zero(),
        -rp_norm * (nm5 / f(9.0)).sqrt(),
        rp_norm,
    ];
    let sqrt2 = f(2.0).sqrt();
    let rpp_norm = f(9.0) * sqrt2 / (n2p2 * np4).sqrt();
    let rpp = [
        T::zero(),
        rpp_norm * np4 * nm4.sqrt() / (f(9.0) * sqrt2),
        -rpp_norm,
        -rpp_norm * nm5.sqrt() / f(3.0),
    ];
    Ok(BasisChange {
        n,
        t: Matrix::from_columns(&[d0, r, rp, rpp]),
    })
}

impl<T: Real> BasisChange<T> {
    /// `Tᵀ M T`; `T` is orthogonal so this equals `T⁻¹ M T`.
    pub fn conjugate(&self, m: &Matrix<T>) -> Matrix<T> {
        self.t.transpose().matmul(m).matmul(&self.t)
    }

    /// Expresses a distance-basis state in the `(d_0, r, r', r'')` basis.
    pub fn to_transformed(&self, psi: &StateVector<T>) -> Result<StateVector<T>> {
        if psi.basis() != Basis::Distance || psi.len() != 4 {
            return domain("basis change applies to 4-component distance-basis states");
        }
        let amps = (0..4)
            .map(|j| (0..4).map(|i| psi.amplitudes()[i] * self.t[(i, j)]).sum())
            .collect();
        StateVector::new(amps, Basis::Transformed)
    }
}

/// `H' = Tᵀ H T` for J(n, 3) computed numerically.
pub fn transformed_hamiltonian<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    let basis = basis_change_t::<T>(n)?;
    let params = JohnsonParams::new(n, 3)?;
    let model = search_hamiltonian(params, gamma)?;
    Ok(basis.conjugate(model.hamiltonian()))
}

/// `H'` from its closed-form entries, as an independent route to
/// [`transformed_hamiltonian`].
pub fn transformed_hamiltonian_closed_form<T: Real>(n: usize, gamma: T) -> Result<Matrix<T>> {
    if n < 6 {
        return domain(format!("transformed Hamiltonian needs n >= 6, got {n}"));
    }
    check_gamma(gamma)?;
    let f = |x: f64| T::cst(x);
    let nf = f(n as f64);
    let q = nf * nf + f(2.0);
    let sq = q.sqrt();
    let np4 = nf + f(4.0);

    let h01 = f(3.0) * (f(6.0) * (nf - f(3.0))).sqrt() / sq;
    let h03 = (f(3.0) * (nf - f(3.0)) * (nf - f(4.0)) * np4).sqrt() / sq;
    let h11 = f(3.0) * (nf.powi(3) - f(3.0) * nf * nf + f(2.0) * nf - f(12.0)) / q;
    let h13 = -f(3.0) * (f(2.0) * (nf - f(4.0)) * np4).sqrt() / q;
    let h22 = (f(2.0) * nf * nf - f(9.0) * nf - f(32.0)) / np4;
    let h23 = -f(2.0) * (f(2.0) * (nf - f(5.0)) * q).sqrt() / np4;
    let h33 =
        (nf.powi(4) + f(2.0) * nf.powi(3) - f(42.0) * nf * nf + f(22.0) * nf - f(16.0)) / (np4 * q);

    let z = T::zero();
    // The (0,0) entry is -γ(1/γ) = -1, written directly so γ = 0 is allowed.
    let g = -gamma;
    Ok(Matrix::from_rows(&[
        [-T::one(), g * h01, z, g * h03],
        [g * h01, g * h11, z, g * h13],
        [z, z, g * h22, g * h23],
        [g * h03, g * h13, g * h23, g * h33],
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::{full_adjacency, DEFAULT_VERTEX_CAP};
    use crate::linalg::eig_sym;

    fn p(n: usize, k: usize) -> JohnsonParams {
        JohnsonParams::new(n, k).unwrap()
    }

    #[test]
    fn intersection_array_k3() {
        let ia = intersection_array(p(6, 3)).unwrap();
        assert_eq!(ia.c, vec![1, 4, 9]);
        assert_eq!(ia.a, vec![0, 4, 4, 0]);
        assert_eq!(ia.b, vec![9, 4, 1]);
        for n in 6..60u64 {
            let ia = intersection_array(p(n as usize, 3)).unwrap();
            assert_eq!(ia.a, vec![0, n - 2, 2 * (n - 4), 3 * (n - 6)]);
            assert_eq!(ia.b, vec![3 * (n - 3), 2 * (n - 4), n - 5]);
        }
        assert!(intersection_array(p(5, 3)).is_err());
    }

    /// Counts neighbor types of one representative per class on the full graph.
    #[test]
    fn intersection_array_j84_from_brute_force() {
        let params = p(8, 4);
        let g = full_adjacency(params, DEFAULT_VERTEX_CAP).unwrap();
        let ia = intersection_array(params).unwrap();
        let classes = crate::johnson::distance_classes(&g, 0);
        let dist = |v: usize| g.distance(v, 0);
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                let mut counts = [0u64; 3];
                for u in g.neighbors(v) {
                    counts[dist(u) + 1 - i] += 1;
                }
                assert_eq!(counts, [ia.down(i), ia.a[i], ia.up(i)]);
            }
            assert_eq!(ia.column_sum(i), 16);
        }
    }

    #[test]
    fn reduced_adjacency_n6() {
        let a = reduced_adjacency::<f64>(p(6, 3)).unwrap();
        let expected = Matrix::from_rows(&[
            [0.0, 3.0, 0.0, 0.0],
            [3.0, 4.0, 4.0, 0.0],
            [0.0, 4.0, 4.0, 3.0],
            [0.0, 0.0, 3.0, 0.0],
        ]);
        assert_eq!(a, expected);
        for n in [6usize, 11, 100] {
            let a = reduced_adjacency::<f64>(p(n, 3)).unwrap();
            let nf = n as f64;
            assert!((a[(0, 1)] - (3.0 * (nf - 3.0)).sqrt()).abs() < 1e-12);
            assert!((a[(1, 2)] - 2.0 * (2.0 * (nf - 4.0)).sqrt()).abs() < 1e-12);
            assert!((a[(2, 3)] - 3.0 * (nf - 5.0).sqrt()).abs() < 1e-12);
            assert_eq!(a[(0, 2)], 0.0);
        }
    }

    #[test]
    fn off_diagonal_identity_exact() {
        for k in 1..=6usize {
            for n in 2 * k..=40 {
                let ia = intersection_array(p(n, k)).unwrap();
                for i in 0..k {
                    let closed = ((i + 1) * (i + 1) * (k - i) * (n - k - i)) as u64;
                    assert_eq!(ia.up(i) * ia.down(i + 1), closed);
                }
            }
        }
    }

    #[test]
    fn hamiltonian_entries() {
        let gamma: f64 = 0.013;
        let m = search_hamiltonian(p(40, 3), gamma).unwrap();
        assert!((m.hamiltonian()[(0, 0)] + 1.0).abs() < 1e-15);
        assert!((m.hamiltonian()[(1, 1)] + gamma * 38.0).abs() < 1e-15);
        let zero = search_hamiltonian(p(6, 3), 0.0).unwrap();
        let mut e00 = Matrix::zeros(4, 4);
        e00[(0, 0)] = -1.0;
        assert_eq!(zero.hamiltonian(), &e00);
        assert!(search_hamiltonian(p(6, 3), -0.1).is_err());
        assert!(search_hamiltonian(p(6, 3), f64::NAN).is_err());
    }

    #[test]
    fn hamiltonian_spectrum_bounds() {
        // J(7,3) adjacency has spectrum {12, 5, 0, -3} on the distance basis,
        // so -γA lies in [-12γ, 3γ] and the oracle can only push one level
        // down by at most 1 (Weyl). The top level stays positive.
        let gamma = 0.05;
        let params = p(7, 3);
        let adj = eig_sym(&reduced_adjacency::<f64>(params).unwrap()).unwrap();
        for (e, x) in adj.eigenvalues().iter().zip([-3.0, 0.0, 5.0, 12.0]) {
            assert!((e - x).abs() < 1e-12);
        }
        let m = search_hamiltonian(params, gamma).unwrap();
        let eig = eig_sym(m.hamiltonian()).unwrap();
        let ev = eig.eigenvalues();
        assert!(ev
            .iter()
            .all(|&e| e >= -1.0 - 12.0 * gamma - 1e-12 && e <= 3.0 * gamma));
        assert!(ev[..3].iter().all(|&e| e < 0.0));
        assert!(ev[3] > 0.0);
    }

    #[test]
    fn initial_state_values() {
        let s = initial_state::<f64>(p(6, 3)).unwrap();
        let r = 20f64.sqrt();
        for (a, x) in s.amplitudes().iter().zip([1.0, 3.0, 3.0, 1.0]) {
            assert!((a.re - x / r).abs() < 1e-15);
            assert_eq!(a.im, 0.0);
        }
        for (n, k) in [(9, 1), (9, 4), (100, 3), (30, 15)] {
            let s = initial_state::<f64>(p(n, k)).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn degree_eigenvector() {
        for (n, k) in [(6, 3), (13, 5), (40, 6), (8, 1)] {
            let params = p(n, k);
            let a = reduced_adjacency::<f64>(params).unwrap();
            let root: Vec<f64> = class_sizes(params)
                .unwrap()
                .iter()
                .map(|&s| (s as f64).sqrt())
                .collect();
            let out = a.matvec(&root);
            let deg = params.degree() as f64;
            for (o, r) in out.iter().zip(&root) {
                assert!((o - deg * r).abs() <= 1e-9 * deg * r.max(1.0));
            }
        }
    }

    #[test]
    fn quotient_matches_full_graph_j84() {
        let params = p(8, 4);
        let g = full_adjacency(params, DEFAULT_VERTEX_CAP).unwrap();
        let full = g.adjacency_matrix::<f64>();
        let iso = class_isometry::<f64>(&g, 0);
        let projected = iso.transpose().matmul(&full).matmul(&iso);
        let reduced = reduced_adjacency::<f64>(params).unwrap();
        assert!(projected.max_abs_diff(&reduced) < 1e-12);
    }

    #[test]
    fn basis_change_orthogonal() {
        for n in [6, 7, 10, 100, 1000] {
            let t = basis_change_t::<f64>(n).unwrap().t;
            let tt = t.transpose().matmul(&t);
            assert!(tt.max_abs_diff(&Matrix::identity(4)) < 1e-12);
            assert_eq!(t[(0, 2)], 0.0);
            assert_eq!(t[(1, 2)], 0.0);
        }
        assert!(basis_change_t::<f64>(5).is_err());
    }

    #[test]
    fn r_column_at_n100() {
        let t = basis_change_t::<f64>(100).unwrap().t;
        // √|d_i| / √(N - 1) with |d| = (1, 291, 13968, 147440), N - 1 = 161699.
        let sizes = class_sizes(p(100, 3)).unwrap();
        assert_eq!(sizes, vec![1, 291, 13968, 147440]);
        let denom = 161_699f64.sqrt();
        let expected = [0.0, 291f64.sqrt(), 13968f64.sqrt(), 147_440f64.sqrt()];
        for i in 0..4 {
            assert!((t[(i, 1)] - expected[i] / denom).abs() < 1e-14);
        }
    }

    #[test]
    fn start_state_in_new_basis() {
        let n = 100;
        let basis = basis_change_t::<f64>(n).unwrap();
        let s = initial_state::<f64>(p(n, 3)).unwrap();
        let st = basis.to_transformed(&s).unwrap();
        let big_n = 161_700f64;
        // |s⟩ = (|w⟩ + √(N-1)|r⟩)/√N.
        assert!((st.amplitudes()[0].re - 1.0 / big_n.sqrt()).abs() < 1e-14);
        assert!((st.amplitudes()[1].re - ((big_n - 1.0) / big_n).sqrt()).abs() < 1e-14);
        assert!(st.amplitudes()[2].norm() < 1e-14);
        assert!(st.amplitudes()[3].norm() < 1e-14);
    }

    #[test]
    fn transformed_hamiltonian_routes_agree() {
        for n in [6, 10, 100, 1000] {
            for gamma in [0.0f64, 0.00345, 0.1] {
                let numeric = transformed_hamiltonian(n, gamma).unwrap();
                let closed = transformed_hamiltonian_closed_form(n, gamma).unwrap();
                let scale = numeric.max_abs().max(1.0);
                assert!(
                    numeric.max_abs_diff(&closed) <= 1e-12 * scale,
                    "n={n} γ={gamma}"
                );
                assert!(numeric[(0, 2)].abs() < 1e-13);
            }
        }
        let h = transformed_hamiltonian_closed_form(50, 0.01f64).unwrap();
        let expected = -0.01 * 3.0 * (6.0f64 * 47.0).sqrt() / 2502f64.sqrt();
        assert!((h[(0, 1)] - expected).abs() < 1e-15);
    }
}
