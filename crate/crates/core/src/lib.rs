//! Clustered graph coloring at desk scale.
//!
//! The crate bundles the combinatorial toolkit around clustered coloring of
//! graphs with excluded subgraphs and minors: list-assignment transformations,
//! tree decompositions and layerings, tangles and vortices, lower-bound graph
//! families, and exact solvers. Every exponential routine is capped and
//! refuses oversized inputs with [`Error::Size`].

pub mod containment;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod lists;
pub mod separation;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Color, ColorSet, Coloring, Edge, Graph, Vertex, VertexSet};
