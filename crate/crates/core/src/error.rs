use thiserror::Error;

use crate::lattice::{BasisTag, FormClass};
use crate::reduction::ReductionTrace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A reduction that ended on the boundary facet `c_i = 0`, i.e. the class of a
/// blow-down rather than a form on the original manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneration {
    pub end: FormClass,
    pub trace: ReductionTrace,
    /// 1-based indices of the exceptional classes with zero area.
    pub blown_down: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(BasisTag, BasisTag),

    #[error("wrong basis: expected {expected}, got {got}")]
    WrongBasis { expected: &'static str, got: BasisTag },

    #[error("coefficient vector has length {got}, basis {basis} needs {expected}")]
    Dimension {
        basis: BasisTag,
        expected: usize,
        got: usize,
    },

    #[error("{class} has square {square}, not -2")]
    NotARoot { class: String, square: i64 },

    #[error("reduction failed: {0}")]
    NotReducible(String),

    #[error("form degenerates to a blow-down along E{:?}", .0.blown_down)]
    Degenerate(Box<Degeneration>),

    #[error("expected k = {expected}, got k = {got}")]
    WrongK { expected: usize, got: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("form {0} is not reduced")]
    NotReduced(String),

    #[error("form {0} is not normalized")]
    NotNormalized(String),

    #[error("cannot normalize {0}: reference area is zero")]
    ZeroArea(String),

    #[error("unrecognized Dynkin diagram: {0}")]
    UnrecognizedDiagram(String),

    #[error("not a simple system: {0}")]
    NotSimpleSystem(String),

    #[error("label set is not admissible: {0}")]
    NotAdmissible(String),

    #[error("form {0} is not balanced")]
    NotBalanced(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}
