use std::collections::HashSet;

use crate::ring::{Polynomial, Ring, SquarefreeMonomial, VarSet};

use super::{CertificateError, CheckResult, FailureReason, ProcedureTrace, TraceStep};

/// Parts `S_0, .., S_r` of a generator set `G`: the union of the parts is
/// `G` and `S_0` has exactly one element. Parts may overlap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsvCertificate {
    ring: Ring,
    generators: Vec<SquarefreeMonomial>,
    parts: Vec<Vec<SquarefreeMonomial>>,
}

impl GsvCertificate {
    pub fn new(
        ring: &Ring,
        generators: Vec<SquarefreeMonomial>,
        parts: Vec<Vec<SquarefreeMonomial>>,
    ) -> Result<Self, CertificateError> {
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        if generators.len() > 64 {
            return Err(CertificateError::TooManyGenerators(generators.len()));
        }
        for &g in &generators {
            if g.is_one() {
                return Err(CertificateError::UnitGenerator);
            }
            ring.check_monomial(g)?;
        }
        if parts.is_empty() {
            return Err(CertificateError::NoParts);
        }
        let parts: Vec<Vec<SquarefreeMonomial>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort();
                p.dedup();
                p
            })
            .collect();
        if parts[0].len() != 1 {
            return Err(CertificateError::FirstPartNotSingleton(parts[0].len()));
        }
        for m in parts.iter().flatten() {
            if generators.binary_search(m).is_err() {
                return Err(CertificateError::NotAGenerator(ring.format_monomial(*m)));
            }
        }
        for g in &generators {
            if !parts.iter().any(|p| p.contains(g)) {
                return Err(CertificateError::UncoveredGenerator(ring.format_monomial(*g)));
            }
        }
        Ok(GsvCertificate {
            ring: ring.clone(),
            generators,
            parts,
        })
    }

    /// Takes `G` to be the union of the parts.
    pub fn from_parts(ring: &Ring, parts: Vec<Vec<SquarefreeMonomial>>) -> Result<Self, CertificateError> {
        let generators = parts.iter().flatten().copied().collect();
        Self::new(ring, generators, parts)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn parts(&self) -> &[Vec<SquarefreeMonomial>] {
        &self.parts
    }

    /// `r + 1`, the number of candidate generators.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `q_i = sum of the monomials of S_i`.
    pub fn candidates(&self) -> Vec<Polynomial> {
        self.parts
            .iter()
            .map(|p| {
                Polynomial::sum_of_monomials(&self.ring, p.iter().map(|&m| (m, 1)))
                    .expect("parts belong to the ring")
            })
            .collect()
    }

    fn compile(&self) -> Compiled {
        Compiled::new(&self.generators, &self.parts, self.ring.num_vars())
    }

    /// Replays a rejection trace from the initial state, checking that every
    /// step is a legal move, and returns the generators left at the end.
    pub fn replay(&self, trace: &ProcedureTrace) -> Result<Vec<SquarefreeMonomial>, String> {
        let c = self.compile();
        let index = |m: &SquarefreeMonomial| {
            self.generators
                .binary_search(m)
                .map_err(|_| format!("{m} is not a generator"))
        };
        let mut remaining = c.all;
        for (k, step) in trace.steps.iter().enumerate() {
            if k == 0 && step.part != 0 {
                return Err("the procedure starts with part 0".into());
            }
            let part = *c.parts.get(step.part).ok_or("part index out of range")?;
            let left = part & remaining;
            let t = index(&step.tracked)?;
            if left != 1 << t {
                return Err(format!("step {k}: part {} does not have {} as its only element", step.part, step.tracked));
            }
            if !step.tracked.support().contains(step.variable) {
                return Err(format!("step {k}: x{} does not divide {}", step.variable + 1, step.tracked));
            }
            let cancelled = remaining & c.hits[step.variable];
            let mut claimed = 0u64;
            for m in &step.cancelled {
                claimed |= 1 << index(m)?;
            }
            if claimed != cancelled {
                return Err(format!("step {k}: cancelled set differs"));
            }
            remaining &= !cancelled;
        }
        let left = c.monomials(remaining, &self.generators);
        match &trace.failure {
            FailureReason::NoSingletonPart { remaining: claimed } => {
                if *claimed != left {
                    return Err("final remaining set differs".into());
                }
                if remaining == 0 || c.parts.iter().any(|p| (p & remaining).count_ones() == 1) {
                    return Err("final state is not stuck".into());
                }
            }
            FailureReason::ConditionViolated(_) => return Err("not a procedure trace".into()),
        }
        Ok(left)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsvOptions {
    /// Skip states `(remaining generators, tracked element)` already shown
    /// to succeed.
    pub memoize: bool,
}

impl Default for GsvOptions {
    fn default() -> Self {
        GsvOptions { memoize: true }
    }
}

/// Runs the cancellation procedure over every branch.
///
/// Starting from the single element of `S_0`, each round picks a variable
/// `z` dividing the tracked element, cancels every remaining generator
/// divisible by `z`, and then either finishes (nothing left) or continues
/// with some part that has exactly one remaining element. All choices of
/// `z` and of the part are explored, variables and parts in ascending order.
/// The certificate is accepted iff no branch gets stuck; on rejection the
/// first stuck branch is returned as a trace.
pub fn check_gsv(cert: &GsvCertificate) -> CheckResult {
    check_gsv_with(cert, GsvOptions::default())
}

pub fn check_gsv_with(cert: &GsvCertificate, opts: GsvOptions) -> CheckResult {
    let c = cert.compile();
    let mut ex = Explorer::new(&c, opts.memoize);
    let start = c.parts[0].trailing_zeros() as usize;
    match ex.explore(c.all, 0, start) {
        Ok(()) => CheckResult::accept(cert.candidates(), ex.states),
        Err(stuck) => {
            let steps = ex
                .path
                .iter()
                .map(|s| TraceStep {
                    part: s.part,
                    tracked: cert.generators[s.tracked],
                    variable: s.var,
                    cancelled: c.monomials(s.cancelled, &cert.generators),
                })
                .collect();
            CheckResult {
                accepted: false,
                emitted: Vec::new(),
                trace: Some(ProcedureTrace {
                    steps,
                    failure: FailureReason::NoSingletonPart {
                        remaining: c.monomials(stuck, &cert.generators),
                    },
                }),
                explored_states: ex.states,
            }
        }
    }
}

/// Bit-mask form of a certificate: generators are indexed `0..|G|`.
pub(crate) struct Compiled {
    pub(crate) supports: Vec<VarSet>,
    /// `hits[v]`: generators divisible by variable `v`.
    pub(crate) hits: Vec<u64>,
    pub(crate) parts: Vec<u64>,
    pub(crate) all: u64,
}

impl Compiled {
    pub(crate) fn new(generators: &[SquarefreeMonomial], parts: &[Vec<SquarefreeMonomial>], num_vars: usize) -> Self {
        let supports: Vec<VarSet> = generators.iter().map(|g| g.support()).collect();
        let masks = parts
            .iter()
            .map(|p| {
                p.iter()
                    .map(|m| 1u64 << generators.binary_search(m).expect("part member is a generator"))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        Self::from_masks(supports, masks, num_vars)
    }

    pub(crate) fn from_masks(supports: Vec<VarSet>, parts: Vec<u64>, num_vars: usize) -> Self {
        let hits = hit_masks(&supports, num_vars);
        let all = if supports.len() == 64 { u64::MAX } else { (1u64 << supports.len()) - 1 };
        Compiled {
            supports,
            hits,
            parts,
            all,
        }
    }

    fn monomials(&self, mask: u64, generators: &[SquarefreeMonomial]) -> Vec<SquarefreeMonomial> {
        VarSet::from_bits(mask).iter().map(|i| generators[i]).collect()
    }
}

pub(crate) fn hit_masks(supports: &[VarSet], num_vars: usize) -> Vec<u64> {
    let mut hits = vec![0u64; num_vars];
    for (i, s) in supports.iter().enumerate() {
        for v in s.iter() {
            hits[v] |= 1 << i;
        }
    }
    hits
}

struct RawStep {
    part: usize,
    tracked: usize,
    var: usize,
    cancelled: u64,
}

pub(crate) struct Explorer<'a> {
    c: &'a Compiled,
    memo: Option<HashSet<(u64, usize)>>,
    path: Vec<RawStep>,
    pub(crate) states: usize,
}

impl<'a> Explorer<'a> {
    pub(crate) fn new(c: &'a Compiled, memoize: bool) -> Self {
        Explorer {
            c,
            memo: memoize.then(HashSet::new),
            path: Vec::new(),
            states: 0,
        }
    }

    /// Whether every branch from the initial state succeeds.
    pub(crate) fn accepts(&mut self) -> bool {
        let start = self.c.parts[0].trailing_zeros() as usize;
        self.explore(self.c.all, 0, start).is_ok()
    }

    /// Explores all branches from the state where part `part` has the single
    /// remaining element `tracked`. `Err` carries the stuck remaining set,
    /// with `self.path` holding the branch that led there.
    fn explore(&mut self, remaining: u64, part: usize, tracked: usize) -> Result<(), u64> {
        self.states += 1;
        // every round cancels the tracked element, so depth is bounded by |G|
        assert!(self.path.len() < self.c.supports.len(), "procedure exceeded |G| rounds");
        for z in self.c.supports[tracked].iter() {
            let cancelled = remaining & self.c.hits[z];
            debug_assert!(cancelled >> tracked & 1 == 1);
            let next = remaining & !cancelled;
            self.path.push(RawStep {
                part,
                tracked,
                var: z,
                cancelled,
            });
            if next != 0 {
                let mut any = false;
                for (j, &mask) in self.c.parts.iter().enumerate() {
                    let left = mask & next;
                    if left.count_ones() != 1 {
                        continue;
                    }
                    any = true;
                    // cancellation is monotone: a part that was tracked has nothing left
                    assert!(
                        self.path.iter().all(|s| s.part != j),
                        "part {j} tracked twice on one branch"
                    );
                    let t = left.trailing_zeros() as usize;
                    if self.memo.as_ref().is_some_and(|m| m.contains(&(next, t))) {
                        continue;
                    }
                    self.explore(next, j, t)?;
                    if let Some(m) = self.memo.as_mut() {
                        m.insert((next, t));
                    }
                }
                if !any {
                    return Err(next);
                }
            }
            self.path.pop();
        }
        Ok(())
    }
}
