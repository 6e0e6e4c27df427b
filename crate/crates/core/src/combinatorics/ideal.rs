use std::fmt;

use crate::ring::{FieldSpec, Polynomial, Ring, RingSpec, SquarefreeMonomial, VarSet};

use super::complex::SimplicialComplex;
use super::transversal::minimal_transversals;
use super::CombinatoricsError;

/// An ideal generated by squarefree monomials, generators kept sorted
/// (degree, then lexicographic) and free of duplicates.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    generators: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    pub fn new<I>(ring: &Ring, generators: I) -> Result<Self, CombinatoricsError>
    where
        I: IntoIterator<Item = SquarefreeMonomial>,
    {
        let mut gens: Vec<SquarefreeMonomial> = generators.into_iter().collect();
        for &g in &gens {
            ring.check_monomial(g)?;
        }
        gens.sort();
        gens.dedup();
        Ok(MonomialIdeal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether no generator divides another.
    pub fn is_minimal(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            !a.is_one()
                && self
                    .generators
                    .iter()
                    .enumerate()
                    .all(|(j, b)| i == j || !a.divides(*b))
        })
    }

    /// Divisibility-minimal generating set of the same ideal.
    pub fn minimalize(&self) -> Result<MonomialIdeal, CombinatoricsError> {
        if self.generators.iter().any(|g| g.is_one()) {
            return Err(CombinatoricsError::UnitIdeal);
        }
        // sorted by degree, so a divisor always precedes its multiples
        let mut kept: Vec<SquarefreeMonomial> = Vec::new();
        for &g in &self.generators {
            if !kept.iter().any(|k| k.divides(g)) {
                kept.push(g);
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            generators: kept,
        })
    }

    pub fn contains_monomial(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Generators as polynomials of the ring.
    pub fn generator_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|&g| Polynomial::from_sqf(&self.ring, g).expect("generators belong to the ring"))
            .collect()
    }

    /// Minimal primes: the minimal vertex covers of the generator supports,
    /// sorted lexicographically. The zero ideal yields an empty list, as does
    /// an ideal containing the unit.
    pub fn minimal_primes(&self) -> Vec<MinimalPrime> {
        if self.generators.is_empty() {
            return Vec::new();
        }
        let edges: Vec<VarSet> = self.generators.iter().map(|g| g.support()).collect();
        minimal_transversals(&edges, true)
            .into_iter()
            .map(|vars| MinimalPrime { vars })
            .collect()
    }

    pub fn height_report(&self) -> Result<HeightReport, CombinatoricsError> {
        if self.generators.iter().any(|g| g.is_one()) {
            return Err(CombinatoricsError::UnitIdeal);
        }
        let primes = self.minimal_primes();
        let height = primes.iter().map(MinimalPrime::height).min().unwrap_or(0);
        let big_height = primes.iter().map(MinimalPrime::height).max().unwrap_or(0);
        Ok(HeightReport {
            height,
            big_height,
            pure: height == big_height,
            minimal_primes: primes,
        })
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{:?}", self.generators)
    }
}

/// `(g1, g2, ...)` with the ring's variable names.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|&g| self.ring.format_monomial(g))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A minimal prime `(x_i : i in vars)` of a squarefree monomial ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinimalPrime {
    pub vars: VarSet,
}

impl MinimalPrime {
    pub fn height(&self) -> usize {
        self.vars.len()
    }
}

impl fmt::Display for MinimalPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", names.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    pub height: usize,
    pub big_height: usize,
    pub pure: bool,
    pub minimal_primes: Vec<MinimalPrime>,
}

/// The Stanley–Reisner ideal: generated by the minimal non-faces.
///
/// A vertex set is a non-face exactly when it meets the complement of every
/// facet, so the minimal non-faces are the minimal transversals of the facet
/// complements.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex, field: FieldSpec) -> Result<MonomialIdeal, CombinatoricsError> {
    let n = complex.num_vertices();
    let ring = RingSpec::new(n, field)?;
    let all = VarSet::full(n);
    let complements: Vec<VarSet> = complex.facets().iter().map(|f| all.difference(*f)).collect();
    let gens = minimal_transversals(&complements, true)
        .into_iter()
        .map(SquarefreeMonomial::new);
    MonomialIdeal::new(&ring, gens)
}
