use thiserror::Error;

use crate::geom::LatticePoint;

/// Errors raised by the geometry, polynomial and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("cells do not tile the parent polygon: {0}")]
    NotATiling(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("zero polynomial has no Newton polygon")]
    ZeroPolynomial,
    #[error("t = {0} must be positive")]
    NonPositiveT(String),
    #[error("t = {t} is not a {degree}-th power of a rational")]
    NotAPower { t: String, degree: u32 },
    #[error("edge {from:?}-{to:?}: block coefficients disagree at {at:?}")]
    EdgeMismatch {
        from: LatticePoint,
        to: LatticePoint,
        at: LatticePoint,
    },
    #[error("fat point of odd multiplicity {multiplicity} on edge {from:?}-{to:?}")]
    OddFatPoint {
        from: LatticePoint,
        to: LatticePoint,
        multiplicity: u32,
    },
    #[error("fat point on edge {from:?}-{to:?}: quadrants of local branches disagree")]
    QuadrantMismatch { from: LatticePoint, to: LatticePoint },
    #[error("vertex {0:?} of the subdivision carries a zero coefficient")]
    ZeroVertexCoefficient(LatticePoint),
    #[error("subdivision is not regular: {0}")]
    Irregular(String),
    #[error("block does not match its cell: {0}")]
    BlockMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("no t in the schedule gave the predicted count: {0}")]
    ScheduleExhausted(String),
    #[error("serialization: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
