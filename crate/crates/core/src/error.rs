use thiserror::Error;

/// Errors raised while constructing or combining the combinatorial objects of
/// this crate. All positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Tamari diagram condition (i) fails at position {index}: {value} > {bound}")]
    DiagramBound { index: usize, value: usize, bound: usize },

    #[error("Tamari diagram condition (ii) fails at (i={i}, j={j})")]
    DiagramNesting { i: usize, j: usize },

    #[error("dual Tamari diagram condition (i) fails at position {index}: {value} > {bound}")]
    DualDiagramBound { index: usize, value: usize, bound: usize },

    #[error("dual Tamari diagram condition (ii) fails at (i={i}, j={j})")]
    DualDiagramNesting { i: usize, j: usize },

    #[error("diagrams are not compatible at (i={i}, j={j})")]
    Incompatible { i: usize, j: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("size {size} is too small, at least {min} is required")]
    SizeTooSmall { size: usize, min: usize },

    #[error("({k}, {l}) is not a rotation edge: node {k} is not the left child of node {l}")]
    InvalidRotationEdge { k: usize, l: usize },

    #[error("position {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("relation is not reflexive at x{index}")]
    NotReflexive { index: usize },

    #[error("relation is not antisymmetric: x{a} and x{b} are related both ways")]
    NotAntisymmetric { a: usize, b: usize },

    #[error("relation is not transitive: x{a} < x{b} < x{c} but not x{a} < x{c}")]
    NotTransitive { a: usize, b: usize, c: usize },

    #[error("interval-poset property (i) fails at (i={i}, j={j}, k={k})")]
    IntervalPosetDecreasing { i: usize, j: usize, k: usize },

    #[error("interval-poset property (ii) fails at (i={i}, j={j}, k={k})")]
    IntervalPosetIncreasing { i: usize, j: usize, k: usize },

    #[error("the lower tree is not below the upper tree in the Tamari order")]
    NotAnInterval,

    #[error("elements are not comparable")]
    NotComparable,

    #[error("not a cover relation")]
    NotACover,

    #[error("component {index} is already zero")]
    ComponentAlreadyZero { index: usize },

    #[error("coordinate is not synchronized")]
    NotSynchronized,

    #[error("coordinate is not minimal-cellular")]
    NotMinimalCellular,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
