//! Lattice polygons and their regular subdivisions.

pub mod construct;
pub mod io;
pub mod lower_hull;
pub mod lp;
mod polygon;
pub mod subdivision;

pub use construct::{exact_subdivision, tile_with_cubic_triangle, TILING_BOUNDARY_CONSTANT};
pub use polygon::*;
pub use subdivision::{check_regular, AffineFn, AxisSegment, Cell, CellTag, RegularityReport, Subdivision};
