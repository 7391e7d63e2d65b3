//! Crate-wide error type.
//!
//! Anything that indicates a malformed input (wrong arity, an element fed
//! to a carrier it does not belong to, invalid comparator parameters, ...)
//! is an `Error`. Outcomes of checks — pass, fail, vacuous — are *data*,
//! reported through the types in [`crate::hypotheses`], never errors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A tuple or argument list had the wrong number of entries.
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// An element was used with a carrier it cannot belong to
    /// (e.g. a real number in a finite label space, or an out-of-range index).
    #[error("element {element} does not fit the {space} carrier")]
    CarrierMismatch { space: String, element: String },

    /// Comparators are defined on nonnegative reals only.
    #[error("comparator input must be nonnegative, got {value}")]
    NegativeComparatorInput { value: f64 },

    /// The comparator kind has no published right-hand side at this arity.
    #[error("comparator kind `{kind}` is not admitted at arity {arity}")]
    ComparatorArity { kind: &'static str, arity: usize },

    /// Comparator parameters outside their admissible region.
    #[error("invalid comparator: {0}")]
    InvalidComparator(String),

    /// An iterate left the range of g: the value produced by the mapping has
    /// no g-preimage (within `epsilon`) to continue the iteration from.
    #[error("coordinate {coordinate}: value {value} has no g-preimage within {epsilon:e}")]
    RangeInclusion {
        coordinate: usize,
        value: String,
        epsilon: f64,
    },

    /// Exhaustive enumeration was asked to walk a domain that is too large.
    #[error("enumeration domain of size {size} exceeds the guard {guard}; use a smaller carrier")]
    EnumerationGuard { size: u128, guard: u128 },

    /// Structurally invalid problem or operation input.
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
