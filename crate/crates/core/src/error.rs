use thiserror::Error;

/// Errors raised by construction, Apéry computations, and the
/// dilatation/contraction operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    /// `from_generators` was given an empty list.
    #[error("generator list is empty")]
    EmptyGenerators,
    /// The generators have a common divisor, so the complement is infinite.
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(i64),
    /// The described set is all of the natural numbers, which is excluded.
    #[error("the semigroup would be all of N")]
    IsAllOfN,
    /// A generator or gap was zero or negative.
    #[error("{0} is not a positive integer")]
    NonPositiveElement(i64),
    /// A claimed gap is the sum of two members, so no semigroup has
    /// exactly this gap set.
    #[error("complement is not additively closed: members {s1} + {s2} land in the gap set")]
    NotAdditivelyClosed { s1: i64, s2: i64 },
    /// An Apéry modulus (or similar argument) must be a member.
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    /// An Apéry modulus must be positive.
    #[error("Apery modulus must be positive")]
    ZeroModulus,
    /// Dilatation shifts must be nonnegative elements of M - 2M.
    #[error("shift {0} is not a nonnegative element of M - 2M")]
    ShiftNotInDomain(i64),
    /// Closed-form dilatation data additionally needs the shift inside S.
    #[error("shift {0} is not a positive member of the semigroup")]
    ShiftNotInSemigroup(i64),
    /// No semigroup dilates by this shift to the given one.
    #[error("no semigroup contracts by {0} to this one")]
    NotContractible(i64),
    /// Contraction shifts can never exceed the multiplicity.
    #[error("shift {shift} exceeds the multiplicity {multiplicity}")]
    ShiftTooLarge { shift: i64, multiplicity: i64 },
    /// Two-generator helpers need coprime parameters 2 <= n < m.
    #[error("invalid two-generator parameters: {0}")]
    BadParameters(&'static str),
    /// The value has no representation x*n + y*m with x, y >= 0.
    #[error("{0} is not representable in the given semigroup")]
    NotRepresentable(i64),
    /// A semigroup literal failed to parse.
    #[error("invalid semigroup literal: {0}")]
    InvalidLiteral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
