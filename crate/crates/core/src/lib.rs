//! Zero forcing as a priori sensor placement.
//!
//! Pick a vertex set `S` of a graph *before* a matrix `A` with that sparsity
//! pattern is known. Whenever `A x = 0`, the entries `x_S` then determine all of
//! `x` by back-substitution along forcing steps. Measurement error in `x_S`
//! grows along the way. This crate computes the combinatorial quantities that
//! bound that growth, exactly, and checks the bounds numerically:
//!
//! - [`graph`]: simple undirected graphs, the edge-list format and the built-in
//!   families.
//! - [`forcing`]: the color change rule, zero forcing sets, propagation time and
//!   forcing chains.
//! - [`poly`]: exact polynomials in `t` with big-integer coefficients, the
//!   eventual-dominance order, and linear forms in per-sensor error symbols.
//! - [`errorvec`]: error polynomial vectors `q` and variance polynomial vectors `V`.
//! - [`matrices`]: pattern matrices, the row-support spread `κ′`, witness matrices
//!   and the worst-case constructions.
//! - [`reconstruct`]: back-solve reconstruction and the bound/variance harnesses.
//! - [`cli`]: the `zfs` command-line surface.
//!
//! ```
//! use zforcing::{errorvec, forcing, graph::Graph};
//!
//! // P_4 seen from one end.
//! let g = Graph::path(4);
//! let s = [1].into_iter().collect();
//! assert_eq!(forcing::propagation_time(&g, &s).unwrap(), 3);
//!
//! let (q, _chain) = errorvec::error_vector_of_set(&g, &s).unwrap();
//! assert_eq!(q.get(4).to_string(), "t^3+2t^2");
//! ```
//!
//! Vertex labels are 1-based everywhere in the public API.

#![forbid(unsafe_code)]

pub mod cli;
pub mod error;
pub mod errorvec;
pub mod forcing;
pub mod gf2;
pub mod graph;
pub mod matrices;
pub mod poly;
pub mod reconstruct;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use poly::{AlphaForm, Poly};
