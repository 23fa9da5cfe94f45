//! Spectral radius and Perron vector of connected graphs.
//!
//! The dominant eigenpair is computed by power iteration on `A + I`.
//! The shift matters: trees are bipartite, so the adjacency spectrum is
//! symmetric about zero and raw power iteration on `A` oscillates
//! between the two extreme eigenvectors. Adding the identity makes the
//! top eigenvalue strictly dominant while leaving the eigenvectors
//! unchanged.
//!
//! All summations run in fixed vertex-index order, so repeated runs are
//! bit-identical.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A real-valued function on the vertices of a graph.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexFunction(Vec<f64>);

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Self {
        VertexFunction(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for VertexFunction {
    fn from(values: Vec<f64>) -> Self {
        VertexFunction(values)
    }
}

impl Index<usize> for VertexFunction {
    type Output = f64;
    fn index(&self, v: usize) -> &f64 {
        &self.0[v]
    }
}

/// Converged dominant eigenpair of an adjacency matrix.
#[derive(Clone, Debug)]
pub struct PerronResult {
    /// Spectral radius of the graph.
    pub lambda: f64,
    /// Positive eigenvector with unit Euclidean norm.
    pub f: VertexFunction,
    /// Max-norm of `A f - lambda f` at convergence.
    pub residual: f64,
    /// Power-iteration steps performed.
    pub iterations: usize,
}

/// Default convergence tolerance for [`perron`].
pub const DEFAULT_TOL: f64 = 1e-12;

/// Default iteration cap for [`perron`]; generous for desk-scale graphs.
pub fn default_max_iter(n: usize) -> usize {
    100 * n + 10_000
}

/// Sum of `f` over the neighbors of `v`; applying this to every vertex
/// realizes the matrix-vector product `(A f)(v)`.
pub fn neighbor_sum(g: &Graph, f: &VertexFunction, v: usize) -> Result<f64> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::LengthMismatch {
            got: f.len(),
            expected: n,
        });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    Ok(g.neighbors(v).iter().map(|&u| f[u]).sum())
}

/// Rayleigh quotient of the adjacency matrix at `f`, computed in the
/// edge-sum form `2 * sum_{uv in E} f(u) f(v) / sum_v f(v)^2`.
pub fn rayleigh_quotient(g: &Graph, f: &VertexFunction) -> Result<f64> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::LengthMismatch {
            got: f.len(),
            expected: n,
        });
    }
    let norm2: f64 = f.values().iter().map(|x| x * x).sum();
    if norm2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut edge_sum = 0.0;
    for u in 0..n {
        for &v in g.neighbors(u) {
            if u < v {
                edge_sum += f[u] * f[v];
            }
        }
    }
    Ok(2.0 * edge_sum / norm2)
}

/// Computes the spectral radius and Perron vector of a connected graph
/// by power iteration on `A + I` from the all-ones vector. Convergence
/// requires both successive Rayleigh quotients to agree within `tol` and
/// the eigen-residual to drop below `tol`.
pub fn perron(g: &Graph, tol: f64, max_iter: usize) -> Result<PerronResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    if n == 1 {
        // K1 has adjacency spectrum {0}; returned exactly.
        return Ok(PerronResult {
            lambda: 0.0,
            f: VertexFunction(vec![1.0]),
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut f = vec![(n as f64).sqrt().recip(); n];
    let mut y = vec![0.0; n];
    let mut lambda_prev = f64::NAN;
    let mut residual = f64::INFINITY;
    for iter in 1..=max_iter {
        for v in 0..n {
            y[v] = g.neighbors(v).iter().map(|&u| f[u]).sum();
        }
        let lambda: f64 = (0..n).map(|v| f[v] * y[v]).sum();
        residual = (0..n)
            .map(|v| (y[v] - lambda * f[v]).abs())
            .fold(0.0, f64::max);
        if (lambda - lambda_prev).abs() < tol && residual < tol {
            return Ok(PerronResult {
                lambda,
                f: VertexFunction(f),
                residual,
                iterations: iter,
            });
        }
        lambda_prev = lambda;
        // shifted step: f <- normalize((A + I) f)
        let mut norm2 = 0.0;
        for v in 0..n {
            y[v] += f[v];
            norm2 += y[v] * y[v];
        }
        let scale = norm2.sqrt().recip();
        for v in 0..n {
            f[v] = y[v] * scale;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual,
    })
}

const PENDANT_TOL: f64 = 1e-6;

/// Checks two facts about a converged Perron vector: for every edge `uv`
/// with `v` pendant and `u` not, `f(u)/f(v)` equals the spectral radius
/// and `f(u) > f(v)`; and across all vertex pairs the order of `f`
/// matches the order of the neighbor sums.
pub fn pendant_relation_check(g: &Graph, result: &PerronResult) -> bool {
    let n = g.vertex_count();
    let f = &result.f;
    if f.len() != n {
        return false;
    }
    for v in 0..n {
        if g.degree(v) != 1 {
            continue;
        }
        let u = g.neighbors(v)[0];
        if g.degree(u) == 1 {
            continue;
        }
        if (result.lambda - f[u] / f[v]).abs() >= PENDANT_TOL || f[u] <= f[v] {
            return false;
        }
    }
    let sums: Vec<f64> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&u| f[u]).sum())
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let df = f[u] - f[v];
            let ds = sums[u] - sums[v];
            if df > PENDANT_TOL && ds < -PENDANT_TOL {
                return false;
            }
            if df < -PENDANT_TOL && ds > PENDANT_TOL {
                return false;
            }
        }
    }
    true
}
