use crate::ring::{same_ring, Polynomial, Ring};

use super::OracleError;

/// Exact equality of two polynomials of one ring.
pub fn verify_identity(lhs: &Polynomial, rhs: &Polynomial) -> Result<bool, OracleError> {
    if !same_ring(lhs.ring(), rhs.ring()) {
        return Err(OracleError::RingMismatch);
    }
    Ok(lhs == rhs)
}

/// A polynomial identity `clear * lhs = rhs`.
///
/// An identity whose right side carries a denominator `d` (a unit where the
/// identity is meant to hold) is stored with `clear = d` and the right side
/// multiplied out, so no division is needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub clear: Option<Polynomial>,
}

impl Identity {
    pub fn new(name: &str, lhs: Polynomial, rhs: Polynomial, clear: Option<Polynomial>) -> Result<Self, OracleError> {
        let ring = lhs.ring();
        if !same_ring(ring, rhs.ring()) || clear.as_ref().is_some_and(|c| !same_ring(ring, c.ring())) {
            return Err(OracleError::RingMismatch);
        }
        if clear.as_ref().is_some_and(Polynomial::is_zero) {
            return Err(OracleError::ZeroClearingFactor);
        }
        Ok(Identity {
            name: name.to_string(),
            lhs,
            rhs,
            clear,
        })
    }

    pub fn ring(&self) -> &Ring {
        self.lhs.ring()
    }

    /// `clear * lhs - rhs`, zero exactly when the identity holds.
    pub fn defect(&self) -> Polynomial {
        let lhs = match &self.clear {
            Some(c) => c * &self.lhs,
            None => self.lhs.clone(),
        };
        &lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.defect().is_zero()
    }
}
