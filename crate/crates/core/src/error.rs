use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The part list is not a weakly decreasing sequence of positive integers.
    #[error("invalid partition: parts {0:?} are not weakly decreasing")]
    InvalidPartition(Vec<usize>),

    /// A cell reference fell outside the Young diagram.
    #[error("cell ({row},{col}) lies outside the shape {shape}")]
    CellOutOfShape {
        row: usize,
        col: usize,
        shape: String,
    },

    /// Dominance comparison between partitions of different sizes.
    #[error("dominance order is defined only for equal sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    /// `n` and the fixed-point count `r` do not describe an involution class.
    #[error("empty conjugacy class: n={n}, fixed points r={r}")]
    EmptyClass { n: usize, r: usize },

    /// The gap bound excludes the single-row and single-column shapes
    /// and requires size at least 6.
    #[error("gap bound does not apply to {0}")]
    GapBoundNotApplicable(String),

    /// The traversal was asked to step off its terminal shape.
    #[error("shape {0} is terminal; no further step exists")]
    TerminalShape(String),

    /// Polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    NotDivisible,

    /// A filling is not a standard Young tableau.
    #[error("invalid standard tableau: {0}")]
    InvalidTableau(String),

    /// A word is not a permutation of 1..=n.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The tableaux of a pair have different shapes.
    #[error("tableau shapes differ: {0} vs {1}")]
    ShapeMismatch(String, String),

    /// Text input could not be parsed.
    #[error("parse error: unexpected token `{0}`")]
    Parse(String),
}
