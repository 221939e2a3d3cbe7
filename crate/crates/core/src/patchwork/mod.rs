//! Gluing polynomials on the cells of a regular subdivision, and the count
//! of solitary nodes the glued curve inherits.

mod assemble;
mod block;
mod construction;
pub mod realize;

pub use assemble::{assemble_viro, predicted_ledger, square_pull_count, Axis, AxisRecord, NodeLedger};
pub use block::{
    canonical_edge, cubic_block, edge_polynomial, reflected_block, segment_pattern, Block, BoundaryPoint, EdgeData,
    NodeKind, PointClass, Position, Quadrant, Singular,
};
pub use construction::{exact_construction, toric_construction, Construction};
