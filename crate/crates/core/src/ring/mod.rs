//! Exact arithmetic: coefficient fields, squarefree monomials as bit sets, and
//! multivariate polynomials with a small text syntax.

mod field;
mod parse;
mod poly;
mod varset;

pub use field::{FieldSpec, Gf4, Scalar};
pub use parse::{
    format_ring_header, parse_field, parse_monomial, parse_polynomial, parse_ring_header, ParseError,
    ParseErrorKind,
};
pub use poly::{ArithOp, Exponents, Polynomial, Ring, RingSpec, Term};
pub use varset::{SquarefreeMonomial, VarSet, MAX_VARS};

pub(crate) use poly::same_ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("{0} variables requested, at most 64 are supported")]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("variable index {index} outside a ring with {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("{0} is not a prime below 65536")]
    InvalidModulus(u32),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("no canonical map from {from} to {to}")]
    NoFieldMap { from: FieldSpec, to: FieldSpec },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
}
