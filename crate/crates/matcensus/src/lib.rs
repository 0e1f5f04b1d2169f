//! Exact-arithmetic census engine for graph matrix invariants.
//!
//! The library computes twenty integer matrices associated with a simple
//! connected graph (adjacency, Laplacian, distance, transmission variants,
//! and their walk lifts), their characteristic polynomials and Smith normal
//! forms — all over arbitrary-precision integers — and censuses streams of
//! non-isomorphic graphs by one invariant or a joint pair of invariants.
//!
//! Modules:
//! - [`graph`]: graphs, the graph6 codec, distances, degrees, transmissions
//! - [`matrix`]: the twenty matrix kinds, characteristic polynomials, SNF
//! - [`invariant`]: canonical byte signatures for spectrum/SNF parameters
//! - [`census`]: streaming censuses, mate classes, pairwise tables
//! - [`gen`]: built-in exhaustive generators (connected graphs, free trees)
//! - [`verify`]: cross-algorithm consistency checks used by the CLI

pub mod census;
pub mod gen;
pub mod graph;
pub mod invariant;
pub mod matrix;
pub mod verify;

pub use graph::{all_pairs_distances, encode_graph6, is_connected, parse_graph6, vertex_stats};
pub use graph::{DistanceMatrix, Graph, GraphError, VertexStats};
pub use invariant::{joint_signature, signature, InvariantKind, JointParam, ParamKey};
pub use matrix::{build_matrix, char_poly, char_poly_oracle, cokernel_decomposition, snf};
pub use matrix::{BaseKind, CharPoly, IntMatrix, MatrixError, MatrixKind, SnfResult};
