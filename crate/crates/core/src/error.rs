use thiserror::Error;

/// Errors surfaced by the library.
///
/// Hard invariant violations (`CountMismatch`, `MinimalLengthTie`,
/// `UnequalPairMultiplicity`) are kept distinct from ordinary input errors:
/// they would falsify a verified counting identity and must never be
/// silently absorbed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,

    #[error("measures live on different groups")]
    GroupMismatch,

    #[error("enumeration invariant violated: expected {expected} elements, found {found}")]
    CountMismatch { expected: u64, found: u64 },

    #[error("tie among minimal-length stabilizer elements at point {0}")]
    MinimalLengthTie(String),

    #[error("conjugate factor pair with unequal multiplicities in {0}")]
    UnequalPairMultiplicity(String),

    #[error("element outside the shuffle support")]
    OutsideSupport,

    #[error("root is not in the extended simple system")]
    NotASimpleRoot,

    #[error("config error: {0}")]
    Config(String),
}
