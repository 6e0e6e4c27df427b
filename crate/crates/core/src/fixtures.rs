//! Built-in example ideals with their candidate generators, certificates and
//! polynomial identities, all generated from formulas.

use std::fmt;
use std::str::FromStr;

use crate::certificates::{Certificate, CertificateError, GsvCertificate, Prop1Certificate};
use crate::combinatorics::{
    build_im, build_ngon, im_block, stanley_reisner_ideal, CombinatoricsError, MonomialIdeal, SimplicialComplex,
};
use crate::oracle::{Identity, OracleError};
use crate::ring::{parse_polynomial, FieldSpec, ParseError, Polynomial, Ring, RingSpec, Scalar, SquarefreeMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    /// The pentagon.
    Example1,
    /// The pentagon with the extra edges `{5,6}` and `{2,6}`.
    Example2,
    /// The family `I_m`, `m >= 1`.
    Im(usize),
    /// The pentagon with vertex 6 joined to 4 and 5; candidates for
    /// characteristic other than two.
    Example4Char0,
    /// The same ideal with candidates for characteristic two, with a
    /// parameter `t` outside `{0, 1}`.
    Example4Char2,
    Hexagon,
    /// The hexagon with the chord `{2,5}`.
    PentagonChord,
    /// The hexagon with the edges `{2,5}`, `{2,6}` and `{1,5}`.
    HexagonAugmented,
    /// A pentagon and a square sharing the edge `{4,5}`.
    OctagonBridged,
    /// The boundary of an `N`-gon, `N >= 4`.
    Ngon(usize),
}

pub const FIXTURE_NAMES: &[&str] = &[
    "example1",
    "example2",
    "im",
    "example4_char0",
    "example4_char2",
    "hexagon",
    "pentagon_chord",
    "hexagon_augmented",
    "octagon_bridged",
    "ngon",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("fixture `{0}` needs a parameter: {1}")]
    MissingParameter(&'static str, &'static str),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl FixtureId {
    /// Resolves a fixture name; `im` takes `m` and `ngon` takes `n`.
    pub fn resolve(name: &str, m: Option<usize>, n: Option<usize>) -> Result<Self, FixtureError> {
        Ok(match name {
            "example1" => FixtureId::Example1,
            "example2" => FixtureId::Example2,
            "im" => FixtureId::Im(m.ok_or(FixtureError::MissingParameter("im", "--m"))?),
            "example4_char0" => FixtureId::Example4Char0,
            "example4_char2" => FixtureId::Example4Char2,
            "hexagon" => FixtureId::Hexagon,
            "pentagon_chord" => FixtureId::PentagonChord,
            "hexagon_augmented" => FixtureId::HexagonAugmented,
            "octagon_bridged" => FixtureId::OctagonBridged,
            "ngon" => FixtureId::Ngon(n.ok_or(FixtureError::MissingParameter("ngon", "--n"))?),
            other => return Err(FixtureError::Unknown(other.to_string())),
        })
    }

    /// Every parameter-free fixture plus `im(1..=4)` and `ngon(4..=7)`.
    pub fn catalog() -> Vec<FixtureId> {
        use FixtureId::*;
        let mut v = vec![Example1, Example2];
        v.extend((1..=4).map(Im));
        v.extend([Example4Char0, Example4Char2, Hexagon, PentagonChord, HexagonAugmented, OctagonBridged]);
        v.extend((4..=7).map(Ngon));
        v
    }

    pub fn summary(&self) -> String {
        match self {
            FixtureId::Example1 => "pentagon; five-element criterion, ara 3".into(),
            FixtureId::Example2 => "pentagon with vertex 6 joined to 2 and 5; two identities".into(),
            FixtureId::Im(m) => format!("I_{m} in {} variables; ara {}", 3 * m + 3, 2 * m + 1),
            FixtureId::Example4Char0 => "pentagon with vertex 6 joined to 4 and 5; candidates for char != 2".into(),
            FixtureId::Example4Char2 => "pentagon with vertex 6 joined to 4 and 5; candidates for char 2, parameter t".into(),
            FixtureId::Hexagon => "hexagon; four-part cancellation certificate".into(),
            FixtureId::PentagonChord => "hexagon with chord {2,5}".into(),
            FixtureId::HexagonAugmented => "hexagon with edges {2,5}, {2,6}, {1,5}; cubic generators".into(),
            FixtureId::OctagonBridged => "pentagon and square sharing {4,5}; six-part certificate".into(),
            FixtureId::Ngon(n) => format!("boundary of the {n}-gon"),
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Example1 => f.write_str("example1"),
            FixtureId::Example2 => f.write_str("example2"),
            FixtureId::Im(m) => write!(f, "im({m})"),
            FixtureId::Example4Char0 => f.write_str("example4_char0"),
            FixtureId::Example4Char2 => f.write_str("example4_char2"),
            FixtureId::Hexagon => f.write_str("hexagon"),
            FixtureId::PentagonChord => f.write_str("pentagon_chord"),
            FixtureId::HexagonAugmented => f.write_str("hexagon_augmented"),
            FixtureId::OctagonBridged => f.write_str("octagon_bridged"),
            FixtureId::Ngon(n) => write!(f, "ngon({n})"),
        }
    }
}

/// Accepts the names printed by `Display`, e.g. `im(2)` or `ngon(7)`.
impl FromStr for FixtureId {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, FixtureError> {
        if let Some((name, rest)) = s.split_once('(') {
            let k: usize = rest
                .strip_suffix(')')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| FixtureError::Unknown(s.to_string()))?;
            return match name {
                "im" => Ok(FixtureId::Im(k)),
                "ngon" => Ok(FixtureId::Ngon(k)),
                _ => Err(FixtureError::Unknown(s.to_string())),
            };
        }
        Self::resolve(s, None, None)
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub id: FixtureId,
    pub ring: Ring,
    pub complex: Option<SimplicialComplex>,
    pub ideal: MonomialIdeal,
    /// Polynomials generating the ideal up to radical.
    pub candidates: Option<Vec<Polynomial>>,
    pub certificate: Option<Certificate>,
    pub identities: Vec<Identity>,
}

impl Fixture {
    /// The certificate as a cancellation certificate, when there is one.
    pub fn gsv_certificate(&self) -> Option<GsvCertificate> {
        self.certificate.as_ref().and_then(|c| c.to_gsv().ok())
    }

    /// The ideal and candidates over another field; parameters are
    /// replaced by `params` (one value per parameter, in `field`).
    pub fn specialized(&self, field: FieldSpec, params: &[Scalar]) -> Result<(MonomialIdeal, Vec<Polynomial>), FixtureError> {
        let plain = RingSpec::with_names(self.ring.var_names().to_vec(), field, Vec::new()).map_err(CombinatoricsError::from)?;
        let ideal = MonomialIdeal::new(&plain, self.ideal.generators().iter().copied())?;
        let candidates = match &self.candidates {
            Some(c) => c
                .iter()
                .map(|p| p.specialize_params(params, &plain))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CombinatoricsError::from)?,
            None => Vec::new(),
        };
        Ok((ideal, candidates))
    }
}

fn m(labels: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::from_labels(labels.iter().copied())
}

fn ms(list: &[&[usize]]) -> Vec<SquarefreeMonomial> {
    list.iter().map(|l| m(l)).collect()
}

fn parts(list: &[&[&[usize]]]) -> Vec<Vec<SquarefreeMonomial>> {
    list.iter().map(|p| ms(p)).collect()
}

fn polys(ring: &Ring, src: &[&str]) -> Result<Vec<Polynomial>, FixtureError> {
    Ok(src.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<_, _>>()?)
}

fn sums(ring: &Ring, parts: &[Vec<SquarefreeMonomial>]) -> Result<Vec<Polynomial>, FixtureError> {
    parts
        .iter()
        .map(|p| Polynomial::sum_of_monomials(ring, p.iter().map(|&g| (g, 1))))
        .collect::<Result<_, _>>()
        .map_err(|e| CombinatoricsError::from(e).into())
}

fn identity(ring: &Ring, name: &str, lhs: &str, rhs: &str, clear: Option<&str>) -> Result<Identity, FixtureError> {
    let clear = clear.map(|c| parse_polynomial(c, ring)).transpose()?;
    Ok(Identity::new(name, parse_polynomial(lhs, ring)?, parse_polynomial(rhs, ring)?, clear)?)
}

fn cube_identity(ring: &Ring, name: &str, cert: &Prop1Certificate) -> Result<Identity, FixtureError> {
    let (lhs, rhs) = cert
        .cube_identity(ring)?
        .ok_or_else(|| CertificateError::Rejected(name.to_string()))?;
    Ok(Identity::new(name, lhs, rhs, None)?)
}

fn from_complex(n: usize, faces: &[&[usize]], field: FieldSpec) -> Result<(SimplicialComplex, MonomialIdeal), FixtureError> {
    let complex = SimplicialComplex::new(n, faces.iter().map(|f| f.iter().copied()))?;
    let ideal = stanley_reisner_ideal(&complex, field)?;
    Ok((complex, ideal))
}

fn gsv_fixture(
    id: FixtureId,
    n: usize,
    faces: &[&[usize]],
    cert_parts: &[&[&[usize]]],
) -> Result<Fixture, FixtureError> {
    let (complex, ideal) = from_complex(n, faces, FieldSpec::Rational)?;
    let ring = ideal.ring().clone();
    let p = parts(cert_parts);
    let candidates = sums(&ring, &p)?;
    let cert = GsvCertificate::new(&ring, ideal.generators().to_vec(), p)?;
    Ok(Fixture {
        id,
        ring,
        complex: Some(complex),
        ideal,
        candidates: Some(candidates),
        certificate: Some(Certificate::Gsv(cert)),
        identities: Vec::new(),
    })
}

const PENTAGON: &[&[usize]] = &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 1]];
const HEXAGON: &[&[usize]] = &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 1]];

fn with_extra(base: &[&'static [usize]], extra: &[&'static [usize]]) -> Vec<&'static [usize]> {
    base.iter().chain(extra).copied().collect()
}

pub fn fixture(id: FixtureId) -> Result<Fixture, FixtureError> {
    match id {
        FixtureId::Example1 => {
            let (complex, ideal) = from_complex(5, PENTAGON, FieldSpec::Rational)?;
            let ring = ideal.ring().clone();
            let cert = Prop1Certificate::new(m(&[1, 3]), m(&[1, 4]), m(&[2, 5]), m(&[2, 4]), m(&[3, 5]));
            Ok(Fixture {
                id,
                candidates: Some(polys(&ring, &["x1*x3", "x1*x4 + x2*x5", "x2*x4 + x3*x5"])?),
                identities: vec![cube_identity(&ring, "x1^3*x4^3 from the five-element criterion", &cert)?],
                certificate: Some(Certificate::Prop1(ring.clone(), cert)),
                ring,
                complex: Some(complex),
                ideal,
            })
        }
        FixtureId::Example2 => {
            let faces = with_extra(PENTAGON, &[&[5, 6], &[2, 6]]);
            let mut f = gsv_fixture(
                id,
                6,
                &faces,
                &[&[&[1, 6]], &[&[3, 5]], &[&[1, 3], &[2, 4], &[3, 6]], &[&[1, 4], &[2, 5], &[4, 6]]],
            )?;
            let r = &f.ring;
            f.identities = vec![
                identity(
                    r,
                    "x1^3*x3^3",
                    "x1^3*x3^3",
                    "x3^2*(x2*x4 - x1*x3)*x1*x6 + x1*x2^2*x3*x3*x5 + x1^2*x3^2*(x1*x3 + x2*x4 + x3*x6) \
                     - x1*x2*x3^2*(x1*x4 + x2*x5 + x4*x6)",
                    None,
                )?,
                identity(
                    r,
                    "x1^2*x4^2",
                    "x1^2*x4^2",
                    "(x3*x5 - x4^2)*x1*x6 + x1^2*x3*x5 - x1*x5*(x1*x3 + x2*x4 + x3*x6) \
                     + x1*x4*(x1*x4 + x2*x5 + x4*x6)",
                    None,
                )?,
            ];
            Ok(f)
        }
        FixtureId::Im(k) => {
            let fam = build_im(k, FieldSpec::Rational)?;
            let ring = fam.ideal.ring().clone();
            let mut identities = Vec::new();
            for n in 1..=k {
                let [s, t, u, v] = im_block(n);
                let p0 = if n == 1 { m(&[1, 2]) } else { im_block(n - 1)[2] };
                let cert = Prop1Certificate::new(p0, s, t, u, v);
                identities.push(cube_identity(&ring, &format!("block {n} cube identity"), &cert)?);
            }
            let cert = GsvCertificate::new(&ring, fam.ideal.generators().to_vec(), fam.parts.clone())?;
            Ok(Fixture {
                id,
                ring,
                complex: None,
                ideal: fam.ideal,
                candidates: Some(fam.candidates),
                certificate: Some(Certificate::Gsv(cert)),
                identities,
            })
        }
        FixtureId::Example4Char0 | FixtureId::Example4Char2 => example4(id),
        FixtureId::Hexagon => gsv_fixture(
            id,
            6,
            HEXAGON,
            &[&[&[3, 6]], &[&[1, 4], &[2, 5]], &[&[1, 3], &[2, 4], &[3, 5]], &[&[1, 5], &[2, 6], &[4, 6]]],
        ),
        FixtureId::PentagonChord => gsv_fixture(
            id,
            6,
            &with_extra(HEXAGON, &[&[2, 5]]),
            &[&[&[1, 4]], &[&[3, 6]], &[&[1, 3], &[1, 5], &[2, 4]], &[&[2, 6], &[3, 5], &[4, 6]]],
        ),
        FixtureId::HexagonAugmented => gsv_fixture(
            id,
            6,
            &with_extra(HEXAGON, &[&[2, 5], &[2, 6], &[1, 5]]),
            &[
                &[&[1, 4]],
                &[&[3, 6]],
                &[&[1, 3], &[2, 4], &[1, 2, 5]],
                &[&[3, 5], &[4, 6], &[1, 2, 6], &[1, 5, 6], &[2, 5, 6]],
            ],
        ),
        FixtureId::OctagonBridged => gsv_fixture(
            id,
            8,
            &with_extra(PENTAGON, &[&[5, 6], &[6, 7], &[7, 8], &[8, 4]]),
            &[
                &[&[3, 6]],
                &[&[1, 8], &[2, 7]],
                &[&[1, 3], &[2, 8], &[3, 7]],
                &[&[1, 7], &[2, 6], &[6, 8]],
                &[&[1, 4], &[2, 5], &[3, 8], &[4, 7], &[5, 8]],
                &[&[1, 6], &[2, 4], &[3, 5], &[4, 6], &[5, 7]],
            ],
        ),
        FixtureId::Ngon(n) => {
            let complex = build_ngon(n)?;
            let ideal = stanley_reisner_ideal(&complex, FieldSpec::Rational)?;
            let ring = ideal.ring().clone();
            let (candidates, certificate) = match n {
                4 => {
                    let p = parts(&[&[&[1, 3]], &[&[2, 4]]]);
                    let c = GsvCertificate::new(&ring, ideal.generators().to_vec(), p.clone())?;
                    (Some(sums(&ring, &p)?), Some(Certificate::Gsv(c)))
                }
                5 => {
                    let e = fixture(FixtureId::Example1)?;
                    (e.candidates, e.certificate)
                }
                6 => {
                    let h = fixture(FixtureId::Hexagon)?;
                    (h.candidates, h.certificate)
                }
                _ => (None, None),
            };
            Ok(Fixture {
                id,
                ring,
                complex: Some(complex),
                ideal,
                candidates,
                certificate,
                identities: Vec::new(),
            })
        }
    }
}

fn example4(id: FixtureId) -> Result<Fixture, FixtureError> {
    let faces = with_extra(PENTAGON, &[&[4, 6], &[5, 6]]);
    let char2 = id == FixtureId::Example4Char2;
    let ring = if char2 {
        RingSpec::with_params(6, FieldSpec::prime(2).map_err(CombinatoricsError::from)?, &["t"])
            .map_err(CombinatoricsError::from)?
    } else {
        RingSpec::new(6, FieldSpec::Rational).map_err(CombinatoricsError::from)?
    };
    let (complex, sr) = from_complex(6, &faces, ring.field())?;
    let ideal = MonomialIdeal::new(&ring, sr.generators().iter().copied())?;
    let (candidates, identities) = if char2 {
        let c = polys(
            &ring,
            &["x1*x4 + x3*x5", "x1*x3 + x2*x6 + x4*x5*x6", "x1*x6 + t*x2*x5", "x2*x4 + x3*x6"],
        )?;
        let ids = vec![
            identity(
                &ring,
                "x4^2*x5^2*x6^3",
                "x4^2*x5^2*x6^3",
                "(x6^4 - t*x1*x2*x3 - t*x2^2*x6)*(x1*x4 + x3*x5) \
                 + (t + 1)*x6*(x4*x5*x6 - x1*x3)*(x1*x3 + x2*x6 + x4*x5*x6) \
                 + (x1*x3^2 + x2*x3*x6 - x4*x6^3)*(x1*x6 + t*x2*x5) \
                 + (t*x1^2*x3 + t*x1*x2*x6 - x5*x6^3)*(x2*x4 + x3*x6)",
                Some("t + 1"),
            )?,
            identity(
                &ring,
                "x3^2*x5^2",
                "x3^2*x5^2",
                "((t + 1)*x3*x5 - x6^2)*(x1*x4 + x3*x5) - (t + 1)*x4*x5*(x1*x3 + x2*x6) \
                 + x4*x6*(x1*x6 + t*x2*x5) + x5*x6*(x2*x4 + x3*x6)",
                Some("t + 1"),
            )?,
        ];
        (c, ids)
    } else {
        let c = polys(
            &ring,
            &["x1*x4 + x3*x5", "x1*x3 + x2*x6 + x4*x5*x6", "x1*x6 + x2*x5", "x2*x4 + x3*x6"],
        )?;
        let ids = vec![
            identity(
                &ring,
                "x4^2*x5^2*x6^2",
                "x4^2*x5^2*x6^2",
                "1/2*x6*(x6^2 - x1*x4)*(x1*x4 + x3*x5) + x4*x5*x6*(x1*x3 + x2*x6 + x4*x5*x6) \
                 + 1/2*x4*(x1*x4 - x6^2)*(x1*x6 + x2*x5) - 1/2*x5*(x1*x4 + x6^2)*(x2*x4 + x3*x6)",
                None,
            )?,
            identity(
                &ring,
                "x3^2*x5^2",
                "x3^2*x5^2",
                "(x3*x5 - 1/2*x6^2)*(x1*x4 + x3*x5) - x4*x5*(x1*x3 + x2*x6) \
                 + 1/2*x4*x6*(x1*x6 + x2*x5) + 1/2*x5*x6*(x2*x4 + x3*x6)",
                None,
            )?,
        ];
        (c, ids)
    };
    Ok(Fixture {
        id,
        ring,
        complex: Some(complex),
        ideal,
        candidates: Some(candidates),
        certificate: None,
        identities,
    })
}
