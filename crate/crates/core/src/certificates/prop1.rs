use crate::ring::{Exponents, Polynomial, Ring, SquarefreeMonomial};

use super::{CertificateError, CheckResult, GsvCertificate};

/// Five monomials with `p0 | p11*p22`, `p21 | p11*p12` and `p12 | p21*p22`;
/// then `(p0, p11 + p12, p21 + p22)` generates all five up to radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prop1Certificate {
    pub p0: SquarefreeMonomial,
    pub p11: SquarefreeMonomial,
    pub p12: SquarefreeMonomial,
    pub p21: SquarefreeMonomial,
    pub p22: SquarefreeMonomial,
}

impl Prop1Certificate {
    pub fn new(
        p0: SquarefreeMonomial,
        p11: SquarefreeMonomial,
        p12: SquarefreeMonomial,
        p21: SquarefreeMonomial,
        p22: SquarefreeMonomial,
    ) -> Self {
        Prop1Certificate { p0, p11, p12, p21, p22 }
    }

    pub fn monomials(&self) -> [SquarefreeMonomial; 5] {
        [self.p0, self.p11, self.p12, self.p21, self.p22]
    }

    fn check_ring(&self, ring: &Ring) -> Result<(), CertificateError> {
        for m in self.monomials() {
            if m.is_one() {
                return Err(CertificateError::UnitGenerator);
            }
            ring.check_monomial(m)?;
        }
        Ok(())
    }

    /// Names of the violated divisibility hypotheses.
    fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let checks = [
            (self.p0, self.p11, self.p22, "p0 does not divide p11*p22"),
            (self.p21, self.p11, self.p12, "p21 does not divide p11*p12"),
            (self.p12, self.p21, self.p22, "p12 does not divide p21*p22"),
        ];
        for (d, a, b, msg) in checks {
            if !d.divides_product(a, b) {
                v.push(format!("{msg} ({d} vs {a}*{b})"));
            }
        }
        v
    }

    /// The cube identity behind the criterion, instantiated:
    /// with `p11*p22 = a*p0` and `p11*p12 = b*p21`,
    /// `p11^3 = p11^2*p1 - b*p11*p2 + b*a*p0`.
    /// Returns `(lhs, rhs)`, or `None` when the hypotheses fail.
    pub fn cube_identity(&self, ring: &Ring) -> Result<Option<(Polynomial, Polynomial)>, CertificateError> {
        self.check_ring(ring)?;
        if !self.violations().is_empty() {
            return Ok(None);
        }
        let n = ring.total_vars();
        let exps = |m: SquarefreeMonomial| {
            let mut v = vec![0u32; n];
            for i in m.support().iter() {
                v[i] = 1;
            }
            Exponents::from_vec(v)
        };
        let one = ring.field().one();
        let quotient = |x: SquarefreeMonomial, y: SquarefreeMonomial, d: SquarefreeMonomial| {
            let e = exps(d).quotient_of(&exps(x).mul(&exps(y))).expect("divisibility checked");
            Polynomial::monomial(ring, e, one.clone())
        };
        let a = quotient(self.p11, self.p22, self.p0);
        let b = quotient(self.p11, self.p12, self.p21);
        let p = |m| Polynomial::from_sqf(ring, m).expect("checked");
        let (p0, p11) = (p(self.p0), p(self.p11));
        let p1 = &p11 + &p(self.p12);
        let p2 = &p(self.p21) + &p(self.p22);
        let lhs = p11.pow(3);
        let rhs = &(&(&p11.pow(2) * &p1) - &(&(&b * &p11) * &p2)) + &(&(&b * &a) * &p0);
        Ok(Some((lhs, rhs)))
    }
}

pub fn check_prop1(cert: &Prop1Certificate, ring: &Ring) -> Result<CheckResult, CertificateError> {
    cert.check_ring(ring)?;
    let v = cert.violations();
    if !v.is_empty() {
        return Ok(CheckResult::violated(v.join("; ")));
    }
    let p = |m| Polynomial::from_sqf(ring, m).expect("checked");
    let emitted = vec![
        p(cert.p0),
        &p(cert.p11) + &p(cert.p12),
        &p(cert.p21) + &p(cert.p22),
    ];
    Ok(CheckResult::accept(emitted, 0))
}

/// `S_0 = {p0}, S_1 = {p11, p12}, S_2 = {p21, p22}`.
pub fn prop1_to_gsv(cert: &Prop1Certificate, ring: &Ring) -> Result<GsvCertificate, CertificateError> {
    let r = check_prop1(cert, ring)?;
    if !r.accepted {
        return Err(CertificateError::Rejected(r.trace.map(|t| t.to_string()).unwrap_or_default()));
    }
    GsvCertificate::from_parts(
        ring,
        vec![vec![cert.p0], vec![cert.p11, cert.p12], vec![cert.p21, cert.p22]],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::check_gsv;
    use crate::ring::{FieldSpec, RingSpec};

    fn m(labels: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_labels(labels.iter().copied())
    }

    fn pentagon() -> Prop1Certificate {
        Prop1Certificate::new(m(&[1, 3]), m(&[1, 4]), m(&[2, 5]), m(&[2, 4]), m(&[3, 5]))
    }

    #[test]
    fn pentagon_accepted_and_converts() {
        let ring = RingSpec::new(5, FieldSpec::Rational).unwrap();
        let r = check_prop1(&pentagon(), &ring).unwrap();
        assert!(r.accepted);
        let s: Vec<String> = r.emitted.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, ["x1*x3", "x1*x4 + x2*x5", "x2*x4 + x3*x5"]);
        assert!(check_gsv(&prop1_to_gsv(&pentagon(), &ring).unwrap()).accepted);
    }

    #[test]
    fn violated_hypothesis() {
        let ring = RingSpec::new(6, FieldSpec::Rational).unwrap();
        let c = Prop1Certificate::new(m(&[1, 2]), m(&[3, 4]), m(&[5, 6]), m(&[3, 5]), m(&[4, 6]));
        let r = check_prop1(&c, &ring).unwrap();
        assert!(!r.accepted);
        assert!(prop1_to_gsv(&c, &ring).is_err());
        assert!(c.cube_identity(&ring).unwrap().is_none());
    }

    #[test]
    fn degenerate_all_equal() {
        let ring = RingSpec::new(1, FieldSpec::Rational).unwrap();
        let x = m(&[1]);
        let c = Prop1Certificate::new(x, x, x, x, x);
        assert!(check_prop1(&c, &ring).unwrap().accepted);
        let g = prop1_to_gsv(&c, &ring).unwrap();
        assert_eq!(g.generators(), &[x]);
        assert!(check_gsv(&g).accepted);
    }

    #[test]
    fn cube_identity_holds() {
        let ring = RingSpec::new(5, FieldSpec::Rational).unwrap();
        let (lhs, rhs) = pentagon().cube_identity(&ring).unwrap().unwrap();
        assert_eq!(lhs.to_string(), "x1^3*x4^3");
        assert_eq!(lhs, rhs);
    }
}
