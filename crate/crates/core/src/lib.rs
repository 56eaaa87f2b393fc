//! Workbench for finite quantum-logic hypergraphs: 3-uniform context
//! hypergraphs, their two-valued states and partition-logic representations,
//! pseudocontext detection with exact rational certificates, and faithful
//! orthogonal representations (FORs) by unit vectors in R^3, including the
//! analytic cone/rotation constructions and their eigenvalue bounds.

pub mod fixtures;
pub mod geometry;
pub mod hypergraph;
pub mod numfmt;
pub mod pseudo;
pub mod states;

mod fixture_data;

pub use hypergraph::VertexId;
