//! Clustered coloring solvers: exhaustive backtracking, dynamic programming
//! over tree decompositions, the bipartite block coloring and side merging.

pub mod block;
pub mod brute;
pub mod dp;
pub mod merge;
pub mod nice;

pub use block::*;
pub use brute::*;
pub use dp::*;
pub use merge::*;
pub use nice::*;
