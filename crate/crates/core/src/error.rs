use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the library.
///
/// Contract violations (bad preconditions) use [`Error::InvalidArgument`];
/// the remaining variants signal that an input, while well-formed, cannot
/// correspond to any proper homogeneous ideal or cannot be certified.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A coefficient vector has a nonzero entry at shift s >= 0, so it is
    /// not the Hilbert-series numerator of a proper ideal.
    #[error("improper coefficient vector: c_{shift} = {value} (must vanish for shift >= 0)")]
    ImproperCoefficients { shift: i64, value: BigInt },

    /// The generator-count recursion produced a negative value; the input
    /// is not the extended Hilbert function of a proper homogeneous ideal.
    #[error("negative generator count a_{degree} = {count}")]
    NegativeGeneratorCount { degree: usize, count: BigInt },

    #[error("enumeration budget exceeded: degree slice holds {size} monomials, budget is {budget}")]
    EnumerationBudgetExceeded { size: BigInt, budget: u64 },

    /// Explicit lex construction found more forced monomials than the target
    /// dimension allows.
    #[error("infeasible dimension in degree {degree}: target {target}, forced {forced}")]
    InfeasibleDimension {
        degree: usize,
        target: BigInt,
        forced: BigInt,
    },

    #[error("lex approximation did not stabilize: {0}")]
    NotStabilized(String),

    /// `fit` could not solve for a coefficient: no sample at the degree that
    /// isolates it.
    #[error("underdetermined sample set: no sample at degree {degree} for shift {shift}")]
    Underdetermined { shift: i64, degree: i64 },

    /// `fit` solved the triangular system but a sample disagrees with the
    /// solved vector.
    #[error("samples inconsistent with an LCBC function on the requested shift range: at (N={n}, t={t}) expected {expected}, got {actual}")]
    InconsistentSamples {
        n: i64,
        t: i64,
        expected: BigInt,
        actual: BigInt,
    },

    #[error("requested precision not achievable: {0}")]
    PrecisionNotAchievable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
