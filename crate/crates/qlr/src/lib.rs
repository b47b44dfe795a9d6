//! Tableau combinatorics around the type AII quantum Littlewood-Richardson
//! correspondence.
//!
//! The library provides:
//!
//! - partitions, skew shapes, semistandard tableaux and their reading words
//!   ([`partition`], [`tableau`]);
//! - Schensted column insertion, the Pieri column product, and reverse column
//!   insertion driven by a row-index vector ([`insertion`]);
//! - the removal set and reduction of a column to a symplectic column, plus
//!   the explicit inverse expansion ([`reduction`]);
//! - LR-Sundaram tableaux, their recording tableaux and strip chains, the
//!   relabeling bijection and the orthogonal symmetry map ([`recording`]);
//! - slack numbers, slack row-index vectors and incidence matrices of a
//!   recording tableau ([`slack`]);
//! - the inverse of the quantum LR map built from the pieces above
//!   ([`inverse`]);
//! - k-weights and generation of k-highest/lowest weight tableaux
//!   ([`kweight`]);
//! - brute-force enumerators and a bijectivity audit used as ground truth at
//!   desk scale ([`oracle`]).

pub mod error;
pub mod insertion;
pub mod inverse;
pub mod kweight;
pub mod oracle;
pub mod partition;
pub mod recording;
pub mod reduction;
pub mod slack;
pub mod tableau;

pub use error::Error;
pub use insertion::{column_insert, pieri_product, prepend_column, reverse_extract, BumpExtraction};
pub use inverse::{inverse_null_slack, inverse_one_strip, lr_aii_inverse, lr_aii_inverse_traced};
pub use kweight::{
    classify_n2, extremal_symplectic, generate_khw_set, k_weight, khw_vertical_strip,
    uv_sequences, Extremal, KWeight, N2Class,
};
pub use oracle::{
    audit_bijection, enumerate_spt, enumerate_sst, forward_by_unwinding, AuditReport, AuditSet,
};
pub use partition::{is_vertical_strip, Partition, SkewShape};
pub use recording::{
    enumerate_rec, is_lrs, is_recording, LrsTableau, RecordingTableau, StripChain,
};
pub use reduction::{partner, reduce, reduce_inverse, removals, SymplecticColumn};
pub use slack::{admissible_slacks, slack_profile, validate_slack, SlackProfile, StripSlack};
pub use tableau::{is_yamanouchi, yamanouchi_tableau, SkewTableau, Word};

/// Convenience alias for results carrying a library [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
