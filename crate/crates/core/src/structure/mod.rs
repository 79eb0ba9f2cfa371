//! Structural vocabulary: tree decompositions, layerings, tangles, vortices,
//! segregations and locations.

pub mod decomposition;

pub use decomposition::*;
pub mod layering;

pub use layering::*;
pub mod segregation;
pub mod tangle;
pub mod vortex;

pub use segregation::*;
pub use tangle::*;
pub use vortex::*;
