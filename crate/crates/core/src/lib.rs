//! Finite real algebraic curves: bounds on the number of real points,
//! patchworking constructions, and exact certification of real point counts.

pub mod bounds;
pub mod certify;
pub mod dessins;
pub mod error;
pub mod geom;
pub(crate) mod linalg;
pub mod patchwork;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
