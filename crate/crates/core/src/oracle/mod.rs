//! Independent checks by exact algebra: Gröbner bases, radical membership
//! through an extra variable, point searches over finite fields, and
//! polynomial identities.

mod groebner;
mod identity;
mod membership;

pub use groebner::{groebner, GroebnerBasis, GroebnerDefect, MonomialOrder, OrderKind};
pub use identity::{verify_identity, Identity};
pub use membership::{
    compare_radicals, point_counterexample, radical_equal, radical_member, MembershipVerdict, PointSearch,
    RadicalComparison, MAX_EXHAUSTIVE_POINTS, MAX_EXHAUSTIVE_VARS,
};

use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("polynomials from different rings")]
    RingMismatch,
    #[error("variable ranking is not a permutation of the ring's variables")]
    BadRanking,
    #[error("radical membership needs a ring without parameter variables; specialize them first")]
    ParametersUnsupported,
    #[error("exhaustive point search needs a finite field")]
    InfiniteField,
    #[error("exhaustive point search supports at most 12 variables, got {0}")]
    TooManyVariables(usize),
    #[error("exhaustive point search would visit more than 2^24 points")]
    TooManyPoints,
    #[error("clearing factor must be nonzero")]
    ZeroClearingFactor,
    #[error(transparent)]
    Ring(#[from] RingError),
}
