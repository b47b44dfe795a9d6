//! Structured errors shared across the crate.
//!
//! The inverse map is assembled from operations whose preconditions encode
//! combinatorial invariants. Violations are reported as typed errors rather
//! than panics so that a broken invariant upstream surfaces as data.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence of parts is not weakly decreasing.
    #[error("not a partition: parts {0:?} are not weakly decreasing")]
    InvalidPartition(Vec<usize>),

    /// An inner shape escapes its outer shape, or row data does not match a
    /// declared skew shape.
    #[error("invalid skew data: {0}")]
    InvalidShape(String),

    /// A filling violates semistandardness where it is required.
    #[error("not semistandard: {0}")]
    NotSemistandard(String),

    /// A column violates the strictly-increasing or symplectic condition.
    #[error("not a symplectic column: {0:?}")]
    NotSymplectic(Vec<usize>),

    /// Literal column prepend would break semistandardness: the new column
    /// does not dominate the existing first column. Signals that the
    /// inverse-map invariant was broken upstream.
    #[error("dominance violation at row {row}: new column entry {value} > existing {existing}")]
    DominanceViolation {
        row: usize,
        value: usize,
        existing: usize,
    },

    /// A reverse extraction was asked to start at a cell that is not a
    /// removable corner of the intermediate shape.
    #[error("cell ({row}, {col}) is not a removable corner")]
    NotACorner { row: usize, col: usize },

    /// The target length passed to the inverse reduction fails its parity or
    /// bound preconditions.
    #[error(
        "invalid expansion target: column of length {len} to length {target} in alphabet [1, {bound}]"
    )]
    InvalidTarget {
        len: usize,
        target: usize,
        bound: usize,
    },

    /// The expansion budget cannot be distributed: the pair (column, target
    /// length) lies outside the image of the reduction map.
    #[error("expansion gap cannot be filled: ({column:?}, length {target}) has no preimage")]
    NegativeGap { column: Vec<usize>, target: usize },

    /// A tableau claimed to be LR-Sundaram fails a defining condition.
    #[error("malformed LR-Sundaram tableau: {0}")]
    MalformedLrs(String),

    /// A filling claimed to be a recording tableau fails a defining condition.
    #[error("malformed recording tableau: {0}")]
    MalformedRecording(String),

    /// A recording tableau's inner shape disagrees with the tableau it is
    /// paired with.
    #[error("shape mismatch: recording tableau expects inner shape {expected:?}, got {found:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    /// A null-slack specialization was invoked on a recording tableau with a
    /// nonzero slack entry.
    #[error("recording tableau has nonzero slack at strip {strip}")]
    NonzeroSlack { strip: usize },

    /// No audit table covers the requested shape, or the table failed its
    /// coverage check.
    #[error("no usable audit table for the requested tableau: {0}")]
    NotFound(String),
}
