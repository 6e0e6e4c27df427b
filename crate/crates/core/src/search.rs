//! Searching for small cancellation certificates, and the arithmetical-rank
//! report built from heights and the best certificate found.
//!
//! The search space is the set partitions of the generators into a
//! singleton `S_0` and `k - 1` further nonempty blocks. The cancellation
//! procedure branches over every part with one element left, so it does not
//! depend on the order of the parts after `S_0`; each unordered partition is
//! therefore enumerated once, as a restricted-growth string.
//!
//! Sizes are tried in increasing order starting at the big height, below
//! which no certificate can exist. For a fixed `S_0 = {s}` a further bound
//! applies: after cancelling any variable `z` of `s`, the remaining blocks
//! form a certificate for the generators not divisible by `z`, so `k - 1`
//! is at least their big height.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::certificates::gsv::{Compiled, Explorer};
use crate::certificates::{check_gsv, CertificateError, GsvCertificate};
use crate::combinatorics::{minimal_transversals, CombinatoricsError, MonomialIdeal};
use crate::ring::{Ring, SquarefreeMonomial, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest certificate size tried; `None` means `|G|`.
    pub max_parts: Option<usize>,
    /// Cap on enumerated partition nodes plus procedure states.
    pub node_budget: u64,
    pub time_budget_ms: u64,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_parts: None,
            node_budget: 10_000_000,
            time_budget_ms: 60_000,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("cannot search a grouping of an empty generator set")]
    EmptyGenerators,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TierOutcome {
    Found,
    /// Every partition of this size was checked and none is a certificate.
    Exhausted,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TierResult {
    pub parts: usize,
    pub outcome: TierOutcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// No partition-shaped certificate with at most the allowed number of
    /// parts exists. This says nothing about overlapping parts.
    Exhausted,
    /// The node or time budget ran out first; nothing is proved.
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub certificate: Option<GsvCertificate>,
    pub status: SearchStatus,
    pub tiers: Vec<TierResult>,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct Budget {
    nodes: AtomicU64,
    limit: u64,
    deadline: Instant,
    exhausted: AtomicBool,
}

struct OutOfBudget;

impl Budget {
    fn spend(&self, n: u64) -> Result<(), OutOfBudget> {
        let used = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if self.exhausted.load(Ordering::Relaxed) {
            return Err(OutOfBudget);
        }
        let crossed = (used >> 12) != ((used - n) >> 12);
        if used > self.limit || (crossed && Instant::now() > self.deadline) {
            self.exhausted.store(true, Ordering::Relaxed);
            return Err(OutOfBudget);
        }
        Ok(())
    }
}

/// Looks for a partition-shaped certificate with as few parts as possible.
///
/// Any certificate returned has been re-checked with [`check_gsv`].
pub fn search_grouping(
    ring: &Ring,
    generators: &[SquarefreeMonomial],
    cfg: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    if cfg.node_budget == 0 {
        return Err(SearchError::InvalidConfig("node budget must be positive"));
    }
    if cfg.time_budget_ms == 0 {
        return Err(SearchError::InvalidConfig("time budget must be positive"));
    }
    if cfg.max_parts == Some(0) {
        return Err(SearchError::InvalidConfig("max parts must be positive"));
    }
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();
    if gens.is_empty() {
        return Err(SearchError::EmptyGenerators);
    }
    if gens.len() > 64 {
        return Err(CertificateError::TooManyGenerators(gens.len()).into());
    }
    for &g in &gens {
        if g.is_one() {
            return Err(CertificateError::UnitGenerator.into());
        }
        ring.check_monomial(g).map_err(CertificateError::from)?;
    }

    let start = Instant::now();
    let budget = Budget {
        nodes: AtomicU64::new(0),
        limit: cfg.node_budget,
        deadline: start + Duration::from_millis(cfg.time_budget_ms),
        exhausted: AtomicBool::new(false),
    };
    let n = gens.len();
    let supports: Vec<VarSet> = gens.iter().map(|g| g.support()).collect();
    let base = Compiled::from_masks(supports.clone(), Vec::new(), ring.num_vars());
    let lo = big_height(&supports).max(1);
    let hi = cfg.max_parts.unwrap_or(n).min(n);
    // the least number of parts each choice of S_0 can possibly need
    let floor: Vec<usize> = (0..n)
        .map(|s| {
            supports[s]
                .iter()
                .map(|z| {
                    let rest: Vec<VarSet> = supports.iter().copied().filter(|t| !t.contains(z)).collect();
                    1 + big_height(&rest)
                })
                .max()
                .unwrap_or(1)
        })
        .collect();

    let mut tiers = Vec::new();
    let mut found = None;
    for k in lo..=hi {
        let seeds: Vec<usize> = (0..n).filter(|&s| floor[s] <= k).collect();
        let best = AtomicUsize::new(usize::MAX);
        let run = |s: usize| -> Option<Vec<u64>> {
            let mut e = Enumerator {
                base: &base,
                budget: &budget,
                best: &best,
                seed: s,
                items: (0..n).filter(|&i| i != s).collect(),
                blocks: vec![0; k - 1],
            };
            match e.assign(0, 0) {
                Ok(Some(parts)) => {
                    best.fetch_min(s, Ordering::Relaxed);
                    Some(parts)
                }
                _ => None,
            }
        };
        let hit = if cfg.parallel {
            seeds.par_iter().find_map_first(|&s| run(s))
        } else {
            seeds.iter().find_map(|&s| run(s))
        };
        if let Some(masks) = hit {
            tiers.push(TierResult { parts: k, outcome: TierOutcome::Found });
            found = Some(masks);
            break;
        }
        if budget.exhausted.load(Ordering::Relaxed) {
            tiers.push(TierResult { parts: k, outcome: TierOutcome::BudgetExhausted });
            break;
        }
        tiers.push(TierResult { parts: k, outcome: TierOutcome::Exhausted });
    }

    let (certificate, status) = match found {
        Some(masks) => {
            let parts = masks
                .iter()
                .map(|&m| VarSet::from_bits(m).iter().map(|i| gens[i]).collect())
                .collect();
            let cert = GsvCertificate::new(ring, gens.clone(), parts)?;
            assert!(check_gsv(&cert).accepted, "search produced a certificate the checker rejects");
            (Some(cert), SearchStatus::Found)
        }
        None if budget.exhausted.load(Ordering::Relaxed) => (None, SearchStatus::BudgetExhausted),
        None => (None, SearchStatus::Exhausted),
    };
    Ok(SearchOutcome {
        certificate,
        status,
        tiers,
        nodes: budget.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

fn big_height(edges: &[VarSet]) -> usize {
    if edges.is_empty() {
        return 0;
    }
    minimal_transversals(edges, false).iter().map(|t| t.len()).max().unwrap_or(0)
}

/// Enumerates the partitions of `items` into exactly `blocks.len()` blocks.
struct Enumerator<'a> {
    base: &'a Compiled,
    budget: &'a Budget,
    /// Smallest seed with a certificate so far; larger seeds give up.
    best: &'a AtomicUsize,
    seed: usize,
    items: Vec<usize>,
    blocks: Vec<u64>,
}

impl Enumerator<'_> {
    fn assign(&mut self, idx: usize, used: usize) -> Result<Option<Vec<u64>>, OutOfBudget> {
        self.budget.spend(1)?;
        if self.best.load(Ordering::Relaxed) < self.seed {
            return Ok(None);
        }
        if idx == self.items.len() {
            return if used == self.blocks.len() { self.check() } else { Ok(None) };
        }
        if self.items.len() - idx < self.blocks.len() - used {
            return Ok(None);
        }
        let bit = 1u64 << self.items[idx];
        for b in 0..used {
            self.blocks[b] |= bit;
            let r = self.assign(idx + 1, used);
            self.blocks[b] &= !bit;
            if !matches!(r, Ok(None)) {
                return r;
            }
        }
        if used < self.blocks.len() {
            self.blocks[used] |= bit;
            let r = self.assign(idx + 1, used + 1);
            self.blocks[used] &= !bit;
            return r;
        }
        Ok(None)
    }

    fn check(&self) -> Result<Option<Vec<u64>>, OutOfBudget> {
        let mut parts = Vec::with_capacity(self.blocks.len() + 1);
        parts.push(1u64 << self.seed);
        parts.extend_from_slice(&self.blocks);
        let c = Compiled {
            supports: self.base.supports.clone(),
            hits: self.base.hits.clone(),
            parts,
            all: self.base.all,
        };
        let mut ex = Explorer::new(&c, true);
        let ok = ex.accepts();
        self.budget.spend(ex.states as u64)?;
        Ok(ok.then_some(c.parts))
    }
}

/// Bounds on the arithmetical rank of a squarefree monomial ideal.
#[derive(Clone, Debug)]
pub struct AraReport {
    pub height: usize,
    pub big_height: usize,
    /// The big height: every minimal prime has height at most `ara`.
    pub lower_bound: usize,
    /// Size of the smallest certificate found.
    pub upper_bound: Option<usize>,
    pub certificate: Option<GsvCertificate>,
    /// Whether the ideal is a set-theoretic complete intersection, when
    /// that is decided.
    pub stci: Option<bool>,
    /// The grouping search, if one was run.
    pub search: Option<SearchOutcome>,
}

impl AraReport {
    /// The arithmetical rank, when the bounds meet.
    pub fn ara(&self) -> Option<usize> {
        self.upper_bound.filter(|&u| u == self.lower_bound)
    }
}

pub fn ara_report(ideal: &MonomialIdeal, cfg: &SearchConfig) -> Result<AraReport, SearchError> {
    ara_report_with_hint(ideal, None, cfg)
}

/// Like [`ara_report`], but tries a known certificate first. If the hint is
/// accepted and already meets the lower bound, no search is run; otherwise
/// the search looks for something strictly smaller.
pub fn ara_report_with_hint(
    ideal: &MonomialIdeal,
    hint: Option<&GsvCertificate>,
    cfg: &SearchConfig,
) -> Result<AraReport, SearchError> {
    let ideal = ideal.minimalize()?;
    let h = ideal.height_report()?;
    let mut report = AraReport {
        height: h.height,
        big_height: h.big_height,
        lower_bound: h.big_height,
        upper_bound: None,
        certificate: None,
        stci: None,
        search: None,
    };
    if ideal.is_zero() {
        report.upper_bound = Some(0);
        report.stci = Some(true);
        return Ok(report);
    }
    let hint = hint.filter(|c| c.generators() == ideal.generators() && check_gsv(c).accepted);
    if let Some(c) = hint {
        report.upper_bound = Some(c.num_parts());
        report.certificate = Some(c.clone());
    }
    if report.ara().is_none() {
        let mut cfg = cfg.clone();
        if let Some(u) = report.upper_bound {
            cfg.max_parts = Some(cfg.max_parts.map_or(u - 1, |m| m.min(u - 1)));
        }
        if cfg.max_parts != Some(0) {
            let outcome = search_grouping(ideal.ring(), ideal.generators(), &cfg)?;
            if let Some(c) = &outcome.certificate {
                report.upper_bound = Some(c.num_parts());
                report.certificate = Some(c.clone());
            }
            report.search = Some(outcome);
        }
    }
    report.stci = if report.upper_bound == Some(report.height) {
        Some(true)
    } else if report.big_height > report.height {
        Some(false)
    } else {
        None
    };
    Ok(report)
}
