use crate::ring::{Polynomial, Ring, SquarefreeMonomial};

use super::{check_gsv, CertificateError, CheckResult, GsvCertificate};

/// Layered parts `P_0, .., P_r` with an exponent `e(p) >= 1` for every
/// occurrence; the candidates are `q_i = sum of p^e(p) over P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvCertificate {
    ring: Ring,
    parts: Vec<Vec<(SquarefreeMonomial, u32)>>,
}

impl SvCertificate {
    pub fn new(ring: &Ring, parts: Vec<Vec<(SquarefreeMonomial, u32)>>) -> Result<Self, CertificateError> {
        if parts.is_empty() {
            return Err(CertificateError::NoParts);
        }
        let mut normalized = Vec::with_capacity(parts.len());
        for (i, mut part) in parts.into_iter().enumerate() {
            part.sort();
            for w in part.windows(2) {
                if w[0].0 == w[1].0 && w[0].1 != w[1].1 {
                    return Err(CertificateError::ConflictingExponent(ring.format_monomial(w[0].0), i));
                }
            }
            part.dedup();
            for &(m, e) in &part {
                if m.is_one() {
                    return Err(CertificateError::UnitGenerator);
                }
                if e == 0 {
                    return Err(CertificateError::ZeroExponent);
                }
                ring.check_monomial(m)?;
            }
            normalized.push(part);
        }
        if normalized[0].len() != 1 {
            return Err(CertificateError::FirstPartNotSingleton(normalized[0].len()));
        }
        Ok(SvCertificate {
            ring: ring.clone(),
            parts: normalized,
        })
    }

    /// All exponents equal to one.
    pub fn with_unit_exponents(ring: &Ring, parts: Vec<Vec<SquarefreeMonomial>>) -> Result<Self, CertificateError> {
        Self::new(ring, parts.into_iter().map(|p| p.into_iter().map(|m| (m, 1)).collect()).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn parts(&self) -> &[Vec<(SquarefreeMonomial, u32)>] {
        &self.parts
    }

    /// The set `P`, the union of all parts.
    pub fn generators(&self) -> Vec<SquarefreeMonomial> {
        let mut g: Vec<SquarefreeMonomial> = self.parts.iter().flatten().map(|&(m, _)| m).collect();
        g.sort();
        g.dedup();
        g
    }

    pub fn candidates(&self) -> Vec<Polynomial> {
        self.parts
            .iter()
            .map(|p| Polynomial::sum_of_monomials(&self.ring, p.iter().copied()).expect("parts belong to the ring"))
            .collect()
    }
}

/// Accepts iff for every part `P_i`, `i > 0`, and distinct `p, p''` in it,
/// some `p'` in `P_0 .. P_{i-1}` divides `p * p''`.
pub fn check_sv(cert: &SvCertificate) -> CheckResult {
    for (i, part) in cert.parts.iter().enumerate().skip(1) {
        for (a_idx, &(a, _)) in part.iter().enumerate() {
            for &(b, _) in &part[a_idx + 1..] {
                let covered = cert.parts[..i]
                    .iter()
                    .flatten()
                    .any(|&(p, _)| p.divides_product(a, b));
                if !covered {
                    let fmt = |m| cert.ring.format_monomial(m);
                    return CheckResult::violated(format!(
                        "part {i}: no element of parts 0..{} divides the product of {} and {}",
                        i - 1,
                        fmt(a),
                        fmt(b)
                    ));
                }
            }
        }
    }
    CheckResult::accept(cert.candidates(), 0)
}

/// Reads an accepted certificate with unit exponents as a cancellation
/// certificate with the same parts.
pub fn sv_to_gsv(cert: &SvCertificate) -> Result<GsvCertificate, CertificateError> {
    if cert.parts.iter().flatten().any(|&(_, e)| e != 1) {
        return Err(CertificateError::ExponentsNotOne);
    }
    let result = check_sv(cert);
    if !result.accepted {
        return Err(CertificateError::Rejected(result.trace.map(|t| t.to_string()).unwrap_or_default()));
    }
    let gsv = GsvCertificate::from_parts(
        &cert.ring,
        cert.parts.iter().map(|p| p.iter().map(|&(m, _)| m).collect()).collect(),
    )?;
    debug_assert!(check_gsv(&gsv).accepted);
    Ok(gsv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, RingSpec};

    fn m(labels: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_labels(labels.iter().copied())
    }

    fn ring(n: usize) -> Ring {
        RingSpec::new(n, FieldSpec::Rational).unwrap()
    }

    #[test]
    fn two_layer_accepted() {
        let c = SvCertificate::with_unit_exponents(&ring(6), vec![vec![m(&[2, 6])], vec![m(&[2, 4]), m(&[3, 6])]])
            .unwrap();
        let r = check_sv(&c);
        assert!(r.accepted);
        assert_eq!(r.emitted[1].to_string(), "x2*x4 + x3*x6");
        assert!(check_gsv(&sv_to_gsv(&c).unwrap()).accepted);
    }

    #[test]
    fn pentagon_grouping_rejected() {
        let c = SvCertificate::with_unit_exponents(
            &ring(5),
            vec![vec![m(&[1, 3])], vec![m(&[1, 4]), m(&[2, 5])], vec![m(&[2, 4]), m(&[3, 5])]],
        )
        .unwrap();
        let r = check_sv(&c);
        assert!(!r.accepted);
        let text = r.trace.unwrap().to_string();
        assert!(text.contains("product of x1*x4 and x2*x5"), "{text}");
        assert!(matches!(sv_to_gsv(&c), Err(CertificateError::Rejected(_))));
    }

    #[test]
    fn exponents_shape_candidates() {
        let c = SvCertificate::new(&ring(2), vec![vec![(m(&[1, 2]), 3)]]).unwrap();
        let r = check_sv(&c);
        assert!(r.accepted);
        assert_eq!(r.emitted[0].to_string(), "x1^3*x2^3");
        assert_eq!(sv_to_gsv(&c), Err(CertificateError::ExponentsNotOne));
        assert_eq!(SvCertificate::new(&ring(2), vec![vec![(m(&[1]), 0)]]), Err(CertificateError::ZeroExponent));
    }
}
