//! Extremal spectral radius over graphs with a prescribed degree sequence.
//!
//! Given a non-increasing degree sequence, this crate constructs and
//! certifies the connected graphs and trees whose adjacency matrix has
//! the largest top eigenvalue among all connected realizations:
//!
//! - [`bfd`] builds the unique maximizing tree for a tree sequence in
//!   linear time and checks breadth-first orderings with decreasing
//!   degrees against the Perron vector;
//! - [`spectral`] computes the spectral radius and Perron vector by
//!   shifted power iteration;
//! - [`transforms`] implements degree-preserving switching and shifting
//!   moves, non-maximality certificates, and a hill climb over a
//!   connected degree class;
//! - [`majorization`] orders degree sequences by prefix-sum dominance
//!   and builds the elementary chains along which the maximal spectral
//!   radius strictly grows;
//! - [`oracle`] enumerates whole realization classes at desk scale and
//!   runs the certification sweeps;
//! - [`graph`], [`canon`], and [`io`] provide the shared graph type,
//!   canonical forms for isomorphism tests, and edge-list/graph6 I/O.

pub mod bfd;
pub mod canon;
pub mod error;
pub mod graph;
pub mod io;
pub mod majorization;
pub mod oracle;
pub mod spectral;
pub mod transforms;

pub use bfd::{construct_bfd_tree, find_bfd_ordering, spider, BfdOrdering, BfdVerdict};
pub use canon::{canonical_form, is_isomorphic, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};
pub use spectral::{perron, PerronResult, VertexFunction};
