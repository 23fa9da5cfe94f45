//! Shared fixtures: the published example graphs with their reported
//! eigendata, and an independent dense eigensolver used as the oracle
//! for every spectral assertion.

use nalgebra::DMatrix;
use specmax::graph::{DegreeSequence, Graph};

pub fn seq(v: &[usize]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

/// Two graphs with degree sequence (4,4,3,3,2,1,1) that both carry
/// degree-monotone breadth-first orderings; only the second maximizes
/// the spectral radius.
pub fn fig1_left() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (3, 6)],
    )
    .unwrap()
}

pub fn fig1_right() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 3), (4, 6)],
    )
    .unwrap()
}

pub const FIG1_LEFT_LAMBDA: f64 = 3.0918;
pub const FIG1_LEFT_F: [f64; 7] = [0.5291, 0.5291, 0.3823, 0.3823, 0.3423, 0.1236, 0.1236];
pub const FIG1_RIGHT_LAMBDA: f64 = 3.1732;
pub const FIG1_RIGHT_F: [f64; 7] = [0.5068, 0.5023, 0.4643, 0.4643, 0.1773, 0.1583, 0.0559];

/// The maximizing tree with degree sequence (4^2, 3^4, 2^3, 1^10).
pub fn fig2_tree() -> Graph {
    Graph::from_edges(
        19,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
            (3, 10), (3, 11), (4, 12), (4, 13), (5, 14), (5, 15), (6, 16), (7, 17), (8, 18),
        ],
    )
    .unwrap()
}

pub fn fig2_sequence() -> DegreeSequence {
    seq(&[4, 4, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1])
}

/// Two trees with degree sequence (3,3,3,2,2,1^5): the first minimizes
/// the spectral radius, the second is breadth-first with increasing
/// degrees yet does not.
pub fn fig3_left() -> Graph {
    Graph::from_edges(
        10,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (3, 5), (4, 6), (4, 7), (5, 8), (5, 9)],
    )
    .unwrap()
}

pub fn fig3_right() -> Graph {
    Graph::from_edges(
        10,
        &[(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 8), (4, 9)],
    )
    .unwrap()
}

pub fn fig3_sequence() -> DegreeSequence {
    seq(&[3, 3, 3, 2, 2, 1, 1, 1, 1, 1])
}

pub const FIG3_MIN_LAMBDA: f64 = 2.1010;
pub const FIG3_RIGHT_LAMBDA: f64 = 2.1067;

/// Independent oracle: largest adjacency eigenvalue by dense symmetric
/// eigendecomposition.
pub fn dense_lambda(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a.symmetric_eigen()
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Independent oracle: positive unit eigenvector for the largest
/// adjacency eigenvalue.
pub fn dense_perron_vector(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    let eig = a.symmetric_eigen();
    let (idx, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, &l)| {
            if l > acc.1 {
                (i, l)
            } else {
                acc
            }
        });
    let col = eig.eigenvectors.column(idx);
    let sign = if col.sum() < 0.0 { -1.0 } else { 1.0 };
    col.iter().map(|x| x * sign).collect()
}
