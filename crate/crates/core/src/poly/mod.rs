//! Exact sparse bivariate polynomials, Viro families and interval enclosures.

mod interval;
mod sparse;
pub mod univariate;
mod viro;

pub use interval::{eval_interval, symmetric_unit, Interval, IntervalBox};
pub use sparse::SparseBivariate;
pub use viro::{ViroPolynomial, ViroTerm};
