//! The list-assignment calculus: axioms, progress, growth, enlargement,
//! side restriction, layer compatibility and boundedness.

pub mod assignment;
pub mod bounded;
pub mod layered;
pub mod progress;
pub mod random;
pub mod side;

pub use assignment::*;
pub use bounded::*;
pub use layered::*;
pub use progress::*;
pub use random::*;
pub use side::*;
