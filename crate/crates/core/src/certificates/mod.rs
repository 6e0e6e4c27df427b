//! Radical-generation certificates for sets of squarefree monomials.
//!
//! Three criteria are implemented, each producing candidate generators
//! `q_0, .., q_r` (sums of the monomials in each part) whose radical equals
//! the radical of the monomial ideal:
//!
//! * [`SvCertificate`]: layered parts where every product of two distinct
//!   members of a part is divisible by a member of an earlier part;
//! * [`Prop1Certificate`]: five monomials `p0, p11, p12, p21, p22` with
//!   `p0 | p11*p22`, `p21 | p11*p12` and `p12 | p21*p22`;
//! * [`GsvCertificate`]: parts on which the variable-cancellation procedure
//!   succeeds along every branch (see [`check_gsv`]). Both other criteria
//!   convert into this one.

pub(crate) mod gsv;
mod prop1;
mod sv;

pub use gsv::{check_gsv, check_gsv_with, GsvCertificate, GsvOptions};
pub use prop1::{check_prop1, prop1_to_gsv, Prop1Certificate};
pub use sv::{check_sv, sv_to_gsv, SvCertificate};

use std::fmt;

use crate::ring::{Polynomial, Ring, RingError, SquarefreeMonomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate has no parts")]
    NoParts,
    #[error("the first part must have exactly one element, it has {0}")]
    FirstPartNotSingleton(usize),
    #[error("{0} appears in a part but is not a generator")]
    NotAGenerator(String),
    #[error("generator {0} is not covered by any part")]
    UncoveredGenerator(String),
    #[error("the unit monomial cannot be a generator")]
    UnitGenerator,
    #[error("exponents must be at least 1")]
    ZeroExponent,
    #[error("{0} listed twice in part {1} with different exponents")]
    ConflictingExponent(String, usize),
    #[error("{0} generators, at most 64 are supported")]
    TooManyGenerators(usize),
    #[error("conversion needs all exponents equal to 1")]
    ExponentsNotOne,
    #[error("certificate rejected: {0}")]
    Rejected(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Outcome of checking a certificate.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub accepted: bool,
    /// The candidate generators `q_i`, one per part, when accepted.
    pub emitted: Vec<Polynomial>,
    /// Why the certificate was rejected.
    pub trace: Option<ProcedureTrace>,
    /// Procedure states visited (zero for the non-procedural criteria).
    pub explored_states: usize,
}

impl CheckResult {
    pub(crate) fn accept(emitted: Vec<Polynomial>, explored_states: usize) -> Self {
        CheckResult {
            accepted: true,
            emitted,
            trace: None,
            explored_states,
        }
    }

    pub(crate) fn violated(detail: String) -> Self {
        CheckResult {
            accepted: false,
            emitted: Vec::new(),
            trace: Some(ProcedureTrace {
                steps: Vec::new(),
                failure: FailureReason::ConditionViolated(detail),
            }),
            explored_states: 0,
        }
    }
}

/// One round of the cancellation procedure: part `part` had the single
/// remaining element `tracked`, variable `variable` (zero-based) was chosen
/// and `cancelled` are the generators removed in that round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub part: usize,
    pub tracked: SquarefreeMonomial,
    pub variable: usize,
    pub cancelled: Vec<SquarefreeMonomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// Generators remain but no part has exactly one of them left.
    NoSingletonPart { remaining: Vec<SquarefreeMonomial> },
    /// A non-procedural criterion failed; the text names the violation.
    ConditionViolated(String),
}

/// The branch of the procedure that got stuck, replayable with
/// [`GsvCertificate::replay`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcedureTrace {
    pub steps: Vec<TraceStep>,
    pub failure: FailureReason,
}

impl fmt::Display for ProcedureTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let cancelled: Vec<String> = s.cancelled.iter().map(|m| m.to_string()).collect();
            writeln!(
                f,
                "part {}: {} -> pick x{}, cancel {}",
                s.part,
                s.tracked,
                s.variable + 1,
                cancelled.join(", ")
            )?;
        }
        match &self.failure {
            FailureReason::NoSingletonPart { remaining } => {
                let r: Vec<String> = remaining.iter().map(|m| m.to_string()).collect();
                write!(f, "stuck: no part has exactly one of {} left", r.join(", "))
            }
            FailureReason::ConditionViolated(d) => write!(f, "violated: {d}"),
        }
    }
}

/// A certificate of any of the three kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Sv(SvCertificate),
    Prop1(Ring, Prop1Certificate),
    Gsv(GsvCertificate),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Sv(_) => "sv",
            Certificate::Prop1(..) => "prop1",
            Certificate::Gsv(_) => "gsv",
        }
    }

    pub fn ring(&self) -> &Ring {
        match self {
            Certificate::Sv(c) => c.ring(),
            Certificate::Prop1(r, _) => r,
            Certificate::Gsv(c) => c.ring(),
        }
    }

    pub fn check(&self) -> Result<CheckResult, CertificateError> {
        match self {
            Certificate::Sv(c) => Ok(check_sv(c)),
            Certificate::Prop1(r, c) => check_prop1(c, r),
            Certificate::Gsv(c) => Ok(check_gsv(c)),
        }
    }

    pub fn to_gsv(&self) -> Result<GsvCertificate, CertificateError> {
        match self {
            Certificate::Sv(c) => sv_to_gsv(c),
            Certificate::Prop1(r, c) => prop1_to_gsv(c, r),
            Certificate::Gsv(c) => Ok(c.clone()),
        }
    }

    /// The generators the certificate speaks about.
    pub fn generators(&self) -> Vec<SquarefreeMonomial> {
        match self {
            Certificate::Sv(c) => c.generators(),
            Certificate::Prop1(_, c) => {
                let mut g = c.monomials().to_vec();
                g.sort();
                g.dedup();
                g
            }
            Certificate::Gsv(c) => c.generators().to_vec(),
        }
    }
}
