use thiserror::Error;

use crate::com::AxiomWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground-set size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index {index} out of range for ground set of size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("ground set of size {0} exceeds the supported maximum of {max}", max = crate::sign::MAX_GROUND_SET)]
    GroundSetTooLarge(usize),

    #[error("signed set is not disjoint: coordinate {0} is both + and -")]
    NotDisjoint(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a tope")]
    NotATope(String),

    #[error("element {0} is a coloop")]
    Coloop(usize),

    #[error("input is not a COM: {0}")]
    NotCom(AxiomWitness),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("point is not in the open region")]
    PointOutsideRegion,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),
}
