//! Johnson graphs J(n, k): vertices are the k-subsets of n symbols, two
//! vertices adjacent when their subsets share exactly k - 1 symbols.
//!
//! This is the brute-force side of the crate. It builds the whole graph
//! so the reduced distance-basis model can be checked against it.

use std::collections::VecDeque;

use crate::error::{domain, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Real;

/// Default upper bound on vertices for any full-graph construction.
pub const DEFAULT_VERTEX_CAP: usize = 4000;

/// Exact binomial coefficient C(n, k).
///
/// Uses the multiplicative recurrence on the smaller of `k` and `n - k`,
/// splitting each step through a gcd so no intermediate exceeds the final
/// value. Overflow therefore only happens when C(n, k) itself does not fit.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return domain(format!("binomial C({n}, {k}) needs k <= n"));
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        let m = n as u128 - k as u128 + i;
        // acc * m is divisible by i, and acc / g is coprime to i / g.
        let g = gcd(acc, i);
        acc = (acc / g)
            .checked_mul(m / (i / g))
            .ok_or_else(|| Error::Domain(format!("binomial C({n}, {k}) exceeds exact range")))?;
    }
    Ok(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The pair (n, k) naming a Johnson graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JohnsonParams {
    n: usize,
    k: usize,
}

impl JohnsonParams {
    /// Requires `1 <= k < n`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return domain(format!("J({n}, {k}) needs 1 <= k < n"));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// N = C(n, k).
    pub fn vertex_count(&self) -> u128 {
        binomial(self.n as u64, self.k as u64).expect("validated params")
    }

    /// Regular degree k(n - k).
    pub fn degree(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Graph diameter min(k, n - k).
    pub fn diameter(&self) -> usize {
        self.k.min(self.n - self.k)
    }

    /// Reduced-model consumers need `n >= 2k` so that the distance basis has
    /// exactly `k + 1` states.
    pub fn require_reduced(&self) -> Result<()> {
        if self.n < 2 * self.k {
            return domain(format!(
                "J({}, {}) needs n >= 2k for a {}-state distance basis",
                self.n,
                self.k,
                self.k + 1
            ));
        }
        Ok(())
    }

    /// Dimension of the distance basis, `k + 1`.
    pub fn reduced_dim(&self) -> usize {
        self.k + 1
    }
}

/// A vertex: its lexicographic rank and its sorted subset of symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexId {
    pub index: usize,
    pub subset: Vec<usize>,
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn enumerate_vertices(params: JohnsonParams) -> Vec<VertexId> {
    let (n, k) = (params.n, params.k);
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexId {
            index: out.len(),
            subset: cur.clone(),
        });
        // Rightmost position that can still move right.
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Lexicographic rank of a sorted k-subset, or `None` if it is not one.
pub fn rank_subset(params: JohnsonParams, subset: &[usize]) -> Option<usize> {
    let (n, k) = (params.n, params.k);
    if subset.len() != k || subset.windows(2).any(|w| w[0] >= w[1]) || subset[k - 1] >= n {
        return None;
    }
    let mut rank: u128 = 0;
    let mut prev = 0;
    for (pos, &s) in subset.iter().enumerate() {
        // Count the subsets that agree so far but put a smaller symbol here.
        for smaller in prev..s {
            rank += binomial((n - smaller - 1) as u64, (k - pos - 1) as u64).ok()?;
        }
        prev = s + 1;
    }
    usize::try_from(rank).ok()
}

/// Number of shared symbols between two sorted subsets.
pub fn overlap(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// The full vertex-level Johnson graph with a dense 0/1 adjacency matrix.
#[derive(Debug, Clone)]
pub struct FullGraph {
    params: JohnsonParams,
    vertices: Vec<VertexId>,
    adjacency: Vec<u8>,
}

/// Builds J(n, k) vertex by vertex. Fails when C(n, k) exceeds `cap`.
pub fn full_adjacency(params: JohnsonParams, cap: usize) -> Result<FullGraph> {
    let requested = params.vertex_count();
    if requested > cap as u128 {
        return Err(Error::Resource { requested, cap });
    }
    let vertices = enumerate_vertices(params);
    let n_vert = vertices.len();
    let k = params.k;
    let mut adjacency = vec![0u8; n_vert * n_vert];
    for u in 0..n_vert {
        for v in (u + 1)..n_vert {
            if overlap(&vertices[u].subset, &vertices[v].subset) + 1 == k {
                adjacency[u * n_vert + v] = 1;
                adjacency[v * n_vert + u] = 1;
            }
        }
    }
    Ok(FullGraph {
        params,
        vertices,
        adjacency,
    })
}

impl FullGraph {
    pub fn params(&self) -> JohnsonParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.vertices.len() + v] == 1
    }

    /// Row `u` of the 0/1 adjacency matrix.
    pub fn adjacency_row(&self, u: usize) -> &[u8] {
        let n = self.vertices.len();
        &self.adjacency[u * n..(u + 1) * n]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency_row(u)
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == 1)
            .map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency_row(u).iter().map(|&a| a as usize).sum()
    }

    /// Adjacency as a real matrix.
    pub fn adjacency_matrix<T: Real>(&self) -> Matrix<T> {
        let n = self.vertices.len();
        Matrix::from_fn(n, n, |i, j| {
            if self.adjacency[i * n + j] == 1 {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// Graph distance `k - |S(u) ∩ S(v)|`.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.params.k - overlap(&self.vertices[u].subset, &self.vertices[v].subset)
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Vertices grouped by distance from `w`; entry `i` holds the indices at
/// distance `i`. There are `min(k, n - k) + 1` classes.
pub fn distance_classes(graph: &FullGraph, w: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); graph.params.diameter() + 1];
    for v in 0..graph.vertex_count() {
        classes[graph.distance(v, w)].push(v);
    }
    #[cfg(debug_assertions)]
    {
        let bfs = graph.bfs_distances(w);
        for (d, class) in classes.iter().enumerate() {
            for &v in class {
                debug_assert_eq!(bfs[v], d, "overlap distance disagrees with traversal");
            }
        }
    }
    classes
}

/// |d_i| = C(k, i) C(n - k, i) for i = 0..=k.
pub fn class_sizes(params: JohnsonParams) -> Result<Vec<u128>> {
    params.require_reduced()?;
    let (n, k) = (params.n as u64, params.k as u64);
    (0..=k)
        .map(|i| Ok(binomial(k, i)? * binomial(n - k, i)?))
        .collect()
}
