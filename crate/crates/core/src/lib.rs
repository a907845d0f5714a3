//! Domination and packing numbers of graphs.
//!
//! The crate computes the domination number γ, the packing number ρ, their
//! X-relativized variants and the common fractional value γ_f = ρ_f, and
//! provides constructive domination/packing pairs for trees, strongly
//! chordal, chordal bipartite and homogeneously orderable graphs. The planar
//! module turns the triangulation and discharging steps of the planar
//! `γ ≤ 7ρ` argument into checks that run on generated instances.

pub mod classes;
pub mod construct;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lp;
pub mod planar;
pub mod rational;
pub mod solvers;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, Multigraph};
pub use vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 512;
