use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("{what}: n = {n} is out of range (requires {requires})")]
    OutOfRange {
        what: &'static str,
        n: u64,
        requires: &'static str,
    },

    /// A custom exponent rule produced a negative value.
    #[error("exponent rule returned a negative value at n = {n}")]
    NegativeAlpha { n: u64 },

    /// A custom exponent rule has no value at the requested index.
    #[error("exponent rule provides no value at n = {n} (only {provided} terms)")]
    MissingAlpha { n: u64, provided: usize },

    /// The exponential-sum evaluation is capped; large rows belong to `compute_row`.
    #[error(
        "oracle_row: n_max = {n_max} exceeds the enumeration cap {cap}; use compute_row instead"
    )]
    OracleCap { n_max: u64, cap: u64 },

    /// Partition-product enumeration is capped.
    #[error("product_spectrum: n = {n} exceeds the enumeration bound {cap}")]
    SpectrumCap { n: u64, cap: u64 },

    /// A coefficient row does not reach the requested index.
    #[error("coefficient row covers 0..={have} but index {need} is required")]
    RowTooShort { have: usize, need: usize },

    /// A coefficient row was computed for a different exponent sequence.
    #[error("coefficient row was computed for {found}, expected {expected}")]
    RowSequenceMismatch { expected: String, found: String },

    /// A persisted row file failed validation.
    #[error("row file is malformed: {reason}")]
    RowFile { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
