#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use ararank::certificates::{GsvCertificate, SvCertificate};
use ararank::ring::{FieldSpec, Ring, RingSpec, SquarefreeMonomial, VarSet};

pub fn qq(n: usize) -> Ring {
    RingSpec::new(n, FieldSpec::Rational).unwrap()
}

pub fn mono(labels: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::from_labels(labels.iter().copied())
}

/// A nonunit squarefree monomial of degree `1..=max_degree` in `n` variables.
pub fn random_monomial(rng: &mut impl Rng, n: usize, max_degree: usize) -> SquarefreeMonomial {
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let d = rng.gen_range(1..=max_degree.min(n));
    SquarefreeMonomial::new(VarSet::from_indices(vars[..d].iter().copied()))
}

/// Distinct monomials with no one dividing another.
pub fn random_antichain(rng: &mut impl Rng, n: usize, count: usize, max_degree: usize) -> Vec<SquarefreeMonomial> {
    let mut gens: Vec<SquarefreeMonomial> = Vec::new();
    for _ in 0..count * 20 {
        if gens.len() == count {
            break;
        }
        let g = random_monomial(rng, n, max_degree);
        if gens.iter().all(|h| !h.divides(g) && !g.divides(*h)) {
            gens.push(g);
        }
    }
    gens
}

/// Parts built so that every pair inside a later part is covered: each
/// later part picks an earlier element `a` as anchor, and its `k`-th member
/// contains all of `a` except possibly its `k`-th variable, plus random
/// extras. Two members then miss different variables of `a`, so `a`
/// divides their product.
pub fn constructive_sv(rng: &mut impl Rng, n: usize) -> SvCertificate {
    let ring = qq(n);
    let mut parts = vec![vec![random_monomial(rng, n, 3)]];
    for _ in 0..rng.gen_range(1..=4) {
        let earlier: Vec<SquarefreeMonomial> = parts.iter().flatten().copied().collect();
        let anchor = earlier[rng.gen_range(0..earlier.len())];
        let mut vars: Vec<usize> = anchor.support().iter().collect();
        vars.shuffle(rng);
        let mut part = Vec::new();
        for k in 0..rng.gen_range(1..=3) {
            let mut s = anchor.support();
            if k < vars.len() && rng.gen_bool(0.6) {
                s = s.without(vars[k]);
            }
            for v in 0..n {
                if rng.gen_bool(0.2) {
                    s = s.with(v);
                }
            }
            if s.is_empty() {
                s = s.with(rng.gen_range(0..n));
            }
            part.push(SquarefreeMonomial::new(s));
        }
        parts.push(part);
    }
    SvCertificate::with_unit_exponents(&ring, parts).unwrap()
}

/// A random grouping of a random antichain in at most `n` variables with
/// at most `max_gens` generators; parts overlap now and then.
pub fn random_grouping(rng: &mut impl Rng, n: usize, max_gens: usize) -> GsvCertificate {
    let ring = qq(n);
    loop {
        let count = rng.gen_range(1..=max_gens);
        let mut gens = random_antichain(rng, n, count, 3);
        if gens.is_empty() {
            continue;
        }
        gens.shuffle(rng);
        let k = if gens.len() == 1 { 1 } else { rng.gen_range(2..=gens.len()) };
        let mut parts: Vec<Vec<SquarefreeMonomial>> = vec![Vec::new(); k];
        parts[0].push(gens[0]);
        for &g in &gens[1..] {
            parts[rng.gen_range(1..k)].push(g);
            if rng.gen_bool(0.1) {
                parts[rng.gen_range(1..k)].push(g);
            }
        }
        parts.retain(|p| !p.is_empty());
        return GsvCertificate::new(&ring, gens, parts).unwrap();
    }
}

/// Minimal vertex covers of `edges` by checking every subset of `0..n`.
pub fn brute_force_covers(edges: &[VarSet], n: usize) -> Vec<VarSet> {
    let covers: Vec<VarSet> = (0u64..1 << n)
        .map(|bits| VarSet::from_indices((0..n).filter(|i| bits >> i & 1 == 1)))
        .filter(|s| edges.iter().all(|e| e.intersects(*s)))
        .collect();
    let mut minimal: Vec<VarSet> = covers
        .iter()
        .copied()
        .filter(|s| !covers.iter().any(|t| t != s && t.is_subset(*s)))
        .collect();
    minimal.sort_by(|a, b| a.lex_cmp(*b));
    minimal
}
