use std::cmp::Ordering;
use std::fmt;

use crate::ring::{same_ring, Exponents, Polynomial, Ring, Scalar};

use super::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

/// A monomial order, optionally applied after ranking the variables:
/// `ranking[0]` is the variable treated as largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            ranking: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            ranking: None,
        }
    }

    /// `ranking` must be a permutation of `0..n`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Result<Self, OracleError> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || std::mem::replace(&mut seen[v], true) {
                return Err(OracleError::BadRanking);
            }
        }
        Ok(MonomialOrder {
            kind,
            ranking: Some(ranking),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> Option<&[usize]> {
        self.ranking.as_deref()
    }

    fn check_ring(&self, ring: &Ring) -> Result<(), OracleError> {
        match &self.ranking {
            Some(r) if r.len() != ring.total_vars() => Err(OracleError::BadRanking),
            _ => Ok(()),
        }
    }

    pub fn cmp(&self, a: &Exponents, b: &Exponents) -> Ordering {
        let (a, b) = (a.as_slice(), b.as_slice());
        let n = a.len();
        let at = |v: &[u32], i: usize| match &self.ranking {
            Some(r) => v[r[i]],
            None => v[i],
        };
        match self.kind {
            OrderKind::Lex => (0..n).map(|i| at(a, i).cmp(&at(b, i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal),
            OrderKind::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    (0..n)
                        .rev()
                        .map(|i| at(b, i).cmp(&at(a, i)))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
            }
        }
    }
}

impl MonomialOrder {
    /// A vector whose lexicographic order agrees with this monomial order.
    fn key(&self, e: &Exponents) -> Vec<i64> {
        let e = e.as_slice();
        let at = |i: usize| match &self.ranking {
            Some(r) => e[r[i]] as i64,
            None => e[i] as i64,
        };
        match self.kind {
            OrderKind::Lex => (0..e.len()).map(at).collect(),
            OrderKind::DegRevLex => std::iter::once(e.iter().map(|&x| x as i64).sum())
                .chain((0..e.len()).rev().map(|i| -at(i)))
                .collect(),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::Lex => "lex",
        };
        match &self.ranking {
            None => f.write_str(name),
            Some(r) => {
                let r: Vec<String> = r.iter().map(|i| i.to_string()).collect();
                write!(f, "{name}[{}]", r.join(","))
            }
        }
    }
}

/// Terms in increasing order, so the leading term is the last one.
#[derive(Clone, Debug)]
struct Sorted(Vec<(Exponents, Scalar)>);

impl Sorted {
    fn new(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut t: Vec<(Exponents, Scalar)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sorted(t)
    }

    fn lead(&self) -> Option<&(Exponents, Scalar)> {
        self.0.last()
    }

    fn lm(&self) -> &Exponents {
        &self.0.last().expect("nonzero").0
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.0.last() {
            if !c.is_one() {
                let inv = c.inv().expect("nonzero leading coefficient");
                for t in &mut self.0 {
                    t.1 = &t.1 * &inv;
                }
            }
        }
        self
    }

    fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.0.iter().cloned())
    }
}

/// `f - c * x^e * g`, both inputs sorted increasingly.
fn sub_scaled(f: &[(Exponents, Scalar)], c: &Scalar, e: &Exponents, g: &Sorted, order: &MonomialOrder) -> Vec<(Exponents, Scalar)> {
    let mut out = Vec::with_capacity(f.len() + g.0.len());
    let mut i = 0;
    for (ge, gc) in &g.0 {
        let ge = ge.mul(e);
        let gc = -&(gc * c);
        while i < f.len() && order.cmp(&f[i].0, &ge).is_lt() {
            out.push(f[i].clone());
            i += 1;
        }
        if i < f.len() && f[i].0 == ge {
            let s = &f[i].1 + &gc;
            i += 1;
            if !s.is_zero() {
                out.push((ge, s));
            }
        } else {
            out.push((ge, gc));
        }
    }
    out.extend_from_slice(&f[i..]);
    out
}

fn lcm(a: &Exponents, b: &Exponents) -> Exponents {
    Exponents::from_vec(a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| *x.max(y)).collect())
}

fn coprime(a: &Exponents, b: &Exponents) -> bool {
    a.as_slice().iter().zip(b.as_slice()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full normal form of `f` modulo monic `basis`.
fn normal_form(f: Sorted, basis: &[&Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = f.0;
    let mut rem = Vec::new();
    while let Some((le, lc)) = p.last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&le)) {
            Some(g) => {
                let q = g.lm().quotient_of(&le).expect("divides");
                p = sub_scaled(&p, &lc, &q, g, order);
                debug_assert!(p.last().map_or(true, |(e, _)| order.cmp(e, &le).is_lt()));
            }
            None => {
                p.pop();
                rem.push((le, lc));
            }
        }
    }
    rem.reverse();
    Sorted(rem)
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = lcm(f.lm(), g.lm());
    let qf = f.lm().quotient_of(&l).expect("lcm");
    let qg = g.lm().quotient_of(&l).expect("lcm");
    let one = f.lead().expect("nonzero").1.field().one();
    let fx: Vec<(Exponents, Scalar)> = f.0.iter().map(|(e, c)| (e.mul(&qf), c.clone())).collect();
    Sorted(sub_scaled(&fx, &one, &qg, g, order))
}

/// A reduced Gröbner basis: monic, no leading monomial divides another, and
/// no term of an element is divisible by another element's leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Sorted>,
}

/// An S-polynomial or an input that fails to reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerDefect {
    pub description: String,
    pub remainder: Polynomial,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn refs(&self) -> Vec<&Sorted> {
        self.basis.iter().collect()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|g| g.to_poly(&self.ring)).collect()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].lm().is_constant()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, OracleError> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(OracleError::RingMismatch);
        }
        Ok(normal_form(Sorted::new(f, &self.order), &self.refs(), &self.order).to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, OracleError> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Checks every S-polynomial of every pair, without pair criteria.
    pub fn check_s_polynomials(&self) -> Result<(), GroebnerDefect> {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j], &self.order);
                let r = normal_form(s, &self.refs(), &self.order);
                if !r.0.is_empty() {
                    return Err(GroebnerDefect {
                        description: format!("S-polynomial of elements {i} and {j}"),
                        remainder: r.to_poly(&self.ring),
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks that every given generator reduces to zero.
    pub fn check_generators(&self, gens: &[Polynomial]) -> Result<(), GroebnerDefect> {
        for (i, g) in gens.iter().enumerate() {
            let r = self.reduce(g).map_err(|e| GroebnerDefect {
                description: format!("generator {i}: {e}"),
                remainder: g.clone(),
            })?;
            if !r.is_zero() {
                return Err(GroebnerDefect {
                    description: format!("generator {i} does not reduce to zero"),
                    remainder: r,
                });
            }
        }
        Ok(())
    }

    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.basis.iter().map(|g| g.lm().clone()).collect()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.polynomials().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// A critical pair with its lcm and that lcm's sort key.
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponents,
    key: Vec<i64>,
}

/// Buchberger's algorithm with the Gebauer–Möller pair update (which
/// applies the coprime-leading-term and chain criteria), processing pairs by
/// smallest lcm first. Returns the reduced basis; stops early with `[1]` as
/// soon as a nonzero constant appears.
pub fn groebner(gens: &[Polynomial], ring: &Ring, order: &MonomialOrder) -> Result<GroebnerBasis, OracleError> {
    order.check_ring(ring)?;
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(OracleError::RingMismatch);
    }
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        basis: vec![Sorted(vec![(Exponents::zero(ring.total_vars()), ring.field().one())])],
    };
    let mut polys: Vec<Sorted> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for p in gens.iter().filter(|p| !p.is_zero()) {
        let s = Sorted::new(p, order).monic();
        if s.lm().is_constant() {
            return Ok(unit());
        }
        polys.push(s);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, order);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.key.cmp(&pb.key).then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let r = {
            let basis: Vec<&Sorted> = active.iter().map(|&k| &polys[k]).collect();
            normal_form(s_polynomial(&polys[pair.i], &polys[pair.j], order), &basis, order)
        };
        if r.0.is_empty() {
            continue;
        }
        let r = r.monic();
        if r.lm().is_constant() {
            return Ok(unit());
        }
        polys.push(r);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, order);
    }
    let basis: Vec<Sorted> = active.into_iter().map(|k| polys[k].clone()).collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        basis: interreduce(basis, order),
    })
}

/// Adds `polys[h]` to the active set and the pair list, discarding pairs by
/// the Gebauer–Möller rules.
fn update(polys: &[Sorted], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize, order: &MonomialOrder) {
    let lh = polys[h].lm().clone();
    let mut fresh: Vec<(usize, Exponents)> = active.iter().map(|&g| (g, lcm(polys[g].lm(), &lh))).collect();
    // a new pair survives if coprime, or if no other new pair's lcm divides its lcm
    let mut kept: Vec<(usize, Exponents)> = Vec::new();
    while let Some((g, l)) = fresh.pop() {
        let is_coprime = coprime(polys[g].lm(), &lh);
        if is_coprime || !fresh.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l)) {
            kept.push((g, l));
        }
    }
    kept.retain(|(g, _)| !coprime(polys[*g].lm(), &lh));
    pairs.retain(|p| {
        !lh.divides(&p.lcm) || lcm(polys[p.i].lm(), &lh) == p.lcm || lcm(polys[p.j].lm(), &lh) == p.lcm
    });
    for (g, l) in kept {
        let key = order.key(&l);
        pairs.push(Pair { i: g, j: h, lcm: l, key });
    }
    active.retain(|&g| !lh.divides(polys[g].lm()));
    active.push(h);
}

fn interreduce(mut g: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Sorted> = Vec::new();
    for p in g {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, q)| q)
            .collect();
        out.push(normal_form(minimal[i].clone(), &others, order).monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_polynomial, FieldSpec, RingSpec};
    use proptest::prelude::{Just, Strategy};

    fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()
    }

    fn strings(b: &GroebnerBasis) -> Vec<String> {
        b.polynomials().iter().map(|p| p.to_string()).collect()
    }

    proptest::proptest! {
        #[test]
        fn key_sorts_like_cmp(
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
            lex in proptest::bool::ANY,
            ranking in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        ) {
            let kind = if lex { OrderKind::Lex } else { OrderKind::DegRevLex };
            let (a, b) = (Exponents::from_vec(a), Exponents::from_vec(b));
            for order in [MonomialOrder::with_ranking(kind, ranking.clone()).unwrap(), MonomialOrder::degrevlex(), MonomialOrder::lex()] {
                proptest::prop_assert_eq!(order.key(&a).cmp(&order.key(&b)), order.cmp(&a, &b));
            }
        }
    }

    #[test]
    fn orders() {
        let e = |v: &[u32]| Exponents::from_vec(v.to_vec());
        let drl = MonomialOrder::degrevlex();
        assert!(drl.cmp(&e(&[1, 0, 1]), &e(&[0, 2, 0])).is_lt());
        assert!(drl.cmp(&e(&[2, 0, 0]), &e(&[0, 0, 1])).is_gt());
        let lex = MonomialOrder::lex();
        assert!(lex.cmp(&e(&[1, 0, 0]), &e(&[0, 5, 5])).is_gt());
        let rev = MonomialOrder::with_ranking(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        assert!(rev.cmp(&e(&[1, 0, 0]), &e(&[0, 0, 1])).is_lt());
        assert!(MonomialOrder::with_ranking(OrderKind::Lex, vec![0, 0]).is_err());
    }

    #[test]
    fn small_bases() {
        let ring = RingSpec::new(2, FieldSpec::Rational).unwrap();
        let drl = MonomialOrder::degrevlex();
        let b = groebner(&polys(&ring, &["x1"]), &ring, &drl).unwrap();
        assert_eq!(strings(&b), ["x1"]);
        let b = groebner(&polys(&ring, &["x1 + x2", "x2"]), &ring, &drl).unwrap();
        assert_eq!(strings(&b), ["x2", "x1"]);
        let b = groebner(&polys(&ring, &["x1*x2 - 1", "x1"]), &ring, &drl).unwrap();
        assert!(b.is_unit());
        let b = groebner(&[], &ring, &drl).unwrap();
        assert!(b.is_empty());
        assert!(!b.contains(&polys(&ring, &["x1"])[0]).unwrap());
    }

    #[test]
    fn twisted_cubic_lex() {
        let ring = RingSpec::new(3, FieldSpec::Rational).unwrap();
        let gens = polys(&ring, &["x2 - x1^2", "x3 - x1^3"]);
        for order in [MonomialOrder::lex(), MonomialOrder::degrevlex()] {
            let b = groebner(&gens, &ring, &order).unwrap();
            b.check_s_polynomials().unwrap();
            b.check_generators(&gens).unwrap();
            assert!(b.contains(&parse_polynomial("x2^3 - x3^2", &ring).unwrap()).unwrap());
            assert!(!b.contains(&parse_polynomial("x2 - x3", &ring).unwrap()).unwrap());
        }
        let lex = groebner(&gens, &ring, &MonomialOrder::lex()).unwrap();
        assert_eq!(lex.len(), 4);
        // with x1 smallest the generators are already a basis
        let elim = MonomialOrder::with_ranking(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        let b = groebner(&gens, &ring, &elim).unwrap();
        assert_eq!(strings(&b), ["-x1^2 + x2", "-x1^3 + x3"]);
    }

    #[test]
    fn prime_field() {
        let ring = RingSpec::new(2, FieldSpec::prime(2).unwrap()).unwrap();
        let gens = polys(&ring, &["x1^2 + x2", "x1*x2 + 1"]);
        let b = groebner(&gens, &ring, &MonomialOrder::degrevlex()).unwrap();
        b.check_s_polynomials().unwrap();
        b.check_generators(&gens).unwrap();
    }
}
