//! Exact-arithmetic spanning-tree and spanning-forest correlation toolkit
//! for weighted multigraphs.
//!
//! The crate computes weighted spanning-tree family weights two independent
//! ways (brute-force enumeration and the weighted matrix-tree determinant),
//! verifies the Rayleigh monotonicity inequality together with its
//! important-forest square identity and per-monomial counting equation,
//! checks the Rayleigh condition on explicit matroid basis lists, samples
//! weighted random spanning trees, and probes the spanning-forest
//! negative-correlation conjecture on small multigraphs.
//!
//! All arithmetic is exact rational arithmetic; every verdict the library
//! reports is an equality or inequality of exact values, never a tolerance
//! check against floating point.

pub mod catalog;
pub mod error;
pub mod forests;
pub mod graph;
pub mod matroid;
pub mod rational;
pub mod rayleigh;
pub mod rng;
pub mod sampler;
pub mod trees;

mod dsu;
mod linalg;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{parse_graph, Edge, EdgeId, EdgeSet, GraphFile, GraphFileEdge, Multigraph};
pub use rational::Rational;
