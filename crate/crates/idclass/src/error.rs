use thiserror::Error;

/// Errors surfaced by semigroup, ideal and monoid operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The generators have a common divisor greater than one, so the
    /// complement of the generated monoid in the naturals is infinite.
    #[error("generators have gcd {gcd} > 1 and do not generate a numerical semigroup")]
    NotNumerical { gcd: u64 },

    /// An Apéry set was requested with respect to an element that is zero or
    /// does not belong to the semigroup.
    #[error("{0} is not a non-zero element of the semigroup")]
    NotMember(u64),

    /// The operation is undefined when the semigroup is all of the
    /// non-negative integers (no gaps, no Frobenius number).
    #[error("operation is undefined for the semigroup of all non-negative integers")]
    EmptyForNaturals,

    /// A candidate Apéry tuple does not satisfy the residue preconditions
    /// (entry 0 must be 0 and entry i must be congruent to i mod m).
    #[error("apery tuple entry {index} violates the residue precondition")]
    BadResidues { index: usize },

    /// Two ideals of different parent semigroups were combined.
    #[error("ideals belong to different parent semigroups")]
    ParentMismatch,

    /// The ideal is the whole set of non-negative integers and has no
    /// non-negative gaps, so it has no Frobenius number.
    #[error("the ideal has no gaps")]
    NoGaps,

    /// An operation that needs the addition table was called before the
    /// table was built.
    #[error("the addition table has not been built")]
    TableMissing,
}
