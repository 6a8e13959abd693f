use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    /// A character in word text is neither a generator nor an inverse.
    #[error("unknown symbol at position {position}")]
    UnknownSymbol { position: usize },
    /// An inverse letter appeared where a monoid word was expected.
    #[error("inverse letter at position {position} in monoid word")]
    NegativeLetterInMonoid { position: usize },
    /// Two words (or a word and a weight table) belong to different alphabets.
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    /// Alphabet construction rejected the requested rank or names.
    #[error("invalid alphabet: {reason}")]
    InvalidAlphabet { reason: &'static str },
    /// A weight was non-positive or non-finite.
    #[error("weights must be positive and finite")]
    InvalidWeights,
    /// A configured safety limit would be exceeded.
    #[error("{what} limit exceeded (requested {requested}, limit {limit})")]
    LimitExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    /// A length function was evaluated outside its domain.
    #[error("word of length {len} outside domain of radius {radius}")]
    DomainExceeded { len: usize, radius: usize },
    /// A quaternion was not of unit norm.
    #[error("quaternion is not normalized")]
    NotNormalized,
    /// The generator angle is too large for the requested ball radius.
    #[error("generator angle too large for radius")]
    EpsilonTooLarge,
    /// A defect constant must be non-negative.
    #[error("defect bound must be non-negative")]
    NegativeDefect,
    /// A Brooks pattern must be a non-trivial reduced word.
    #[error("Brooks pattern must be non-empty")]
    EmptyPattern,
    /// The conjugacy witnesses handed to the splitting check do not verify.
    #[error("conjugacy witness does not verify")]
    ConjugacyWitnessInvalid,
    /// The base length failed its homogeneity spot-check.
    #[error("base length failed homogeneity spot-check")]
    NotHomogeneous,
    /// Vector dimensions disagree.
    #[error("dimension mismatch")]
    DimensionMismatch,
    /// Integer arithmetic overflowed (e.g. clearing rational denominators).
    #[error("integer overflow")]
    Overflow,
    /// A non-empty sample or pair list was required.
    #[error("empty sample")]
    EmptySample,
}
