use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::MonomialIdeal;
use crate::ring::{same_ring, FieldSpec, Polynomial, Ring, RingSpec, Scalar, SquarefreeMonomial};

use super::groebner::{groebner, MonomialOrder};
use super::OracleError;

/// Whether a monomial lies in the radical of an ideal, with a point
/// separating them when one was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    /// A point where every element of the ideal vanishes and the monomial
    /// does not; only ever present for non-members.
    pub witness: Option<Vec<Scalar>>,
}

fn check_inputs(m: SquarefreeMonomial, j: &[Polynomial], ring: &Ring) -> Result<(), OracleError> {
    if j.iter().any(|p| !same_ring(p.ring(), ring)) {
        return Err(OracleError::RingMismatch);
    }
    ring.check_monomial(m)?;
    Ok(())
}

/// Decides `m ∈ √J` by checking whether `J + (1 - y*m)` is the unit ideal
/// in the ring with one extra variable `y`.
///
/// Rings with parameter variables are rejected: specialize the parameters
/// first. For non-members a small point search over `{0, 1}` (and `-1`
/// outside characteristic two) looks for a witness.
pub fn radical_member(m: SquarefreeMonomial, j: &[Polynomial], ring: &Ring) -> Result<MembershipVerdict, OracleError> {
    check_inputs(m, j, ring)?;
    if ring.num_params() > 0 {
        return Err(OracleError::ParametersUnsupported);
    }
    let mut names = ring.var_names().to_vec();
    let fresh = (0..)
        .map(|k| if k == 0 { "y".to_string() } else { format!("y{k}") })
        .find(|n| !names.contains(n))
        .expect("some name is free");
    names.push(fresh);
    let ext = RingSpec::with_names(names, ring.field(), Vec::new())?;
    let y = Polynomial::var(&ext, ring.num_vars());
    let mut gens: Vec<Polynomial> = j.iter().map(|p| p.embed(&ext)).collect();
    let mp = Polynomial::from_sqf(&ext, m)?;
    gens.push(&Polynomial::one(&ext) - &(&y * &mp));
    let basis = groebner(&gens, &ext, &MonomialOrder::degrevlex())?;
    let member = basis.is_unit();
    let witness = if member { None } else { small_witness(m, j, ring)? };
    Ok(MembershipVerdict { member, witness })
}

const SMALL_POINT_CAP: u64 = 1 << 16;

fn small_witness(m: SquarefreeMonomial, j: &[Polynomial], ring: &Ring) -> Result<Option<Vec<Scalar>>, OracleError> {
    let field = ring.field();
    let mut values = vec![field.zero(), field.one()];
    if field.characteristic() != 2 {
        values.push(field.from_int(-1));
    }
    let n = ring.total_vars();
    let total = (values.len() as u64).checked_pow(n as u32).filter(|&t| t <= SMALL_POINT_CAP);
    let Some(total) = total else {
        return Ok(None);
    };
    let mp = Polynomial::from_sqf(ring, m)?;
    Ok((0..total).into_par_iter().find_map_first(|i| {
        let point = decode(i, &values, n);
        separates(&point, &mp, j).then_some(point)
    }))
}

/// Point number `i`, with the first coordinate as the least significant digit.
fn decode(mut i: u64, values: &[Scalar], n: usize) -> Vec<Scalar> {
    let q = values.len() as u64;
    (0..n)
        .map(|_| {
            let d = (i % q) as usize;
            i /= q;
            values[d].clone()
        })
        .collect()
}

fn separates(point: &[Scalar], m: &Polynomial, j: &[Polynomial]) -> bool {
    !m.eval(point).expect("point fits the ring").is_zero()
        && j.iter().all(|p| p.eval(point).expect("point fits the ring").is_zero())
}

/// Detailed comparison of a monomial ideal with the radical of `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalComparison {
    /// Generators of the monomial ideal outside `√J`, with their verdicts.
    pub not_in_radical: Vec<(SquarefreeMonomial, MembershipVerdict)>,
    /// `(index into J, term)` for terms of `J` outside the monomial ideal.
    pub stray_terms: Vec<(usize, String)>,
}

impl RadicalComparison {
    pub fn equal(&self) -> bool {
        self.not_in_radical.is_empty() && self.stray_terms.is_empty()
    }
}

/// `√I = √J` for a squarefree monomial ideal `I`: every generator of `I`
/// lies in `√J`, and every term of every element of `J` lies in `I` (for a
/// monomial ideal, `J ⊆ I` holds exactly when it holds term by term).
/// Membership queries run in parallel.
pub fn compare_radicals(ideal: &MonomialIdeal, j: &[Polynomial]) -> Result<RadicalComparison, OracleError> {
    let ring = ideal.ring();
    if j.iter().any(|p| !same_ring(p.ring(), ring)) {
        return Err(OracleError::RingMismatch);
    }
    let mut stray_terms = Vec::new();
    for (k, p) in j.iter().enumerate() {
        for (e, _) in p.sorted_terms() {
            let inside = ideal
                .generators()
                .iter()
                .any(|g| g.support().iter().all(|v| e.as_slice()[v] > 0));
            if !inside {
                let term = Polynomial::monomial(ring, e.clone(), ring.field().one());
                stray_terms.push((k, term.to_string()));
            }
        }
    }
    let verdicts: Vec<(SquarefreeMonomial, MembershipVerdict)> = ideal
        .generators()
        .par_iter()
        .map(|&g| radical_member(g, j, ring).map(|v| (g, v)))
        .collect::<Result<_, _>>()?;
    Ok(RadicalComparison {
        not_in_radical: verdicts.into_iter().filter(|(_, v)| !v.member).collect(),
        stray_terms,
    })
}

pub fn radical_equal(ideal: &MonomialIdeal, j: &[Polynomial]) -> Result<bool, OracleError> {
    Ok(compare_radicals(ideal, j)?.equal())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointSearch {
    /// Every point of `F^n`; needs a finite field and `n <= 12`.
    Exhaustive,
    /// Uniformly random points from a seeded generator; over the rationals
    /// coordinates are drawn from `-3..=3`.
    Sampled { samples: u64, seed: u64 },
}

pub const MAX_EXHAUSTIVE_VARS: usize = 12;
pub const MAX_EXHAUSTIVE_POINTS: u64 = 1 << 24;

/// Looks for a point over `field` where all of `J` vanishes but `m` does not.
///
/// Finding one proves `m ∉ √J`. Finding none, even exhaustively, proves
/// nothing about the algebraic closure. Coefficients of `J` are mapped into
/// `field`; parameter variables are treated as coordinates.
pub fn point_counterexample(
    m: SquarefreeMonomial,
    j: &[Polynomial],
    ring: &Ring,
    field: FieldSpec,
    mode: PointSearch,
) -> Result<Option<Vec<Scalar>>, OracleError> {
    check_inputs(m, j, ring)?;
    let target = ring.with_field(field)?;
    let j: Vec<Polynomial> = j.iter().map(|p| p.to_ring(&target)).collect::<Result<_, _>>()?;
    let mp = Polynomial::from_sqf(&target, m)?;
    let n = target.total_vars();
    match mode {
        PointSearch::Exhaustive => {
            let values = field.elements().ok_or(OracleError::InfiniteField)?;
            if n > MAX_EXHAUSTIVE_VARS {
                return Err(OracleError::TooManyVariables(n));
            }
            let total = (values.len() as u64)
                .checked_pow(n as u32)
                .filter(|&t| t <= MAX_EXHAUSTIVE_POINTS)
                .ok_or(OracleError::TooManyPoints)?;
            Ok((0..total).into_par_iter().find_map_first(|i| {
                let point = decode(i, &values, n);
                separates(&point, &mp, &j).then_some(point)
            }))
        }
        PointSearch::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let values = field.elements();
            for _ in 0..samples {
                let point: Vec<Scalar> = (0..n)
                    .map(|_| match &values {
                        Some(v) => v[rng.gen_range(0..v.len())].clone(),
                        None => field.from_int(rng.gen_range(-3..=3)),
                    })
                    .collect();
                if separates(&point, &mp, &j) {
                    return Ok(Some(point));
                }
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn m(labels: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_labels(labels.iter().copied())
    }

    fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()
    }

    const PENTAGON_J: &[&str] = &["x1*x3", "x1*x4 + x2*x5", "x2*x4 + x3*x5"];

    #[test]
    fn membership() {
        let ring = RingSpec::new(5, FieldSpec::Rational).unwrap();
        let j = polys(&ring, PENTAGON_J);
        assert!(radical_member(m(&[1, 4]), &j, &ring).unwrap().member);
        let solo = polys(&ring, &["x1*x3"]);
        assert!(radical_member(m(&[1, 3]), &solo, &ring).unwrap().member);
        let v = radical_member(m(&[1, 2]), &solo, &ring).unwrap();
        assert!(!v.member);
        let one = ring.field().one();
        let zero = ring.field().zero();
        assert_eq!(v.witness, Some(vec![one.clone(), one, zero.clone(), zero.clone(), zero]));
    }

    #[test]
    fn comparisons() {
        let ring = RingSpec::new(5, FieldSpec::Rational).unwrap();
        let pent = [m(&[1, 3]), m(&[1, 4]), m(&[2, 4]), m(&[2, 5]), m(&[3, 5])];
        let ideal = MonomialIdeal::new(&ring, pent).unwrap();
        assert!(radical_equal(&ideal, &polys(&ring, PENTAGON_J)).unwrap());
        let small = MonomialIdeal::new(&ring, [m(&[1, 3])]).unwrap();
        let c = compare_radicals(&small, &polys(&ring, &["x1*x4"])).unwrap();
        assert!(!c.equal());
        assert_eq!(c.stray_terms, vec![(0, "x1*x4".to_string())]);
        assert_eq!(c.not_in_radical.len(), 1);
    }

    #[test]
    fn parameters_rejected() {
        let ring = RingSpec::with_params(2, FieldSpec::prime(2).unwrap(), &["t"]).unwrap();
        let j = polys(&ring, &["t*x1"]);
        assert_eq!(radical_member(m(&[1]), &j, &ring), Err(OracleError::ParametersUnsupported));
    }

    #[test]
    fn point_search() {
        let ring = RingSpec::new(5, FieldSpec::Rational).unwrap();
        let gf2 = FieldSpec::prime(2).unwrap();
        let p = point_counterexample(m(&[1, 2]), &polys(&ring, &["x1*x3"]), &ring, gf2, PointSearch::Exhaustive)
            .unwrap()
            .unwrap();
        let bits: Vec<String> = p.iter().map(|s| s.to_string()).collect();
        assert_eq!(bits, ["1", "1", "0", "0", "0"]);
        let x1 = polys(&ring, &["x1"]);
        for f in [gf2, FieldSpec::prime(3).unwrap(), FieldSpec::Gf4] {
            assert_eq!(point_counterexample(m(&[1]), &x1, &ring, f, PointSearch::Exhaustive).unwrap(), None);
        }
        let gf3 = FieldSpec::prime(3).unwrap();
        let j = polys(&ring, PENTAGON_J);
        assert_eq!(point_counterexample(m(&[1, 4]), &j, &ring, gf3, PointSearch::Exhaustive).unwrap(), None);
        assert_eq!(
            point_counterexample(m(&[1]), &x1, &ring, FieldSpec::Rational, PointSearch::Exhaustive),
            Err(OracleError::InfiniteField)
        );
        let sampled = PointSearch::Sampled { samples: 200, seed: 1 };
        assert!(point_counterexample(m(&[1, 2]), &polys(&ring, &["x1*x3"]), &ring, FieldSpec::Rational, sampled)
            .unwrap()
            .is_some());
    }
}
