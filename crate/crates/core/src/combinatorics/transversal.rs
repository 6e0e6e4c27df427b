//! Minimal transversal (minimal vertex cover) enumeration for hypergraphs
//! given as edge bit sets.

use rayon::prelude::*;

use crate::ring::VarSet;

/// All inclusion-minimal vertex sets meeting every edge, sorted
/// lexicographically by their ascending index lists.
///
/// Branches on the vertices of an uncovered edge; vertices tried in earlier
/// sibling branches are forbidden in later ones, so every minimal transversal
/// is produced on exactly one path. A partial set is abandoned as soon as one
/// of its vertices has no private edge, since privacy is never regained.
///
/// An empty edge admits no transversal; an empty edge list has the single
/// transversal `{}`.
pub fn minimal_transversals(edges: &[VarSet], parallel: bool) -> Vec<VarSet> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let edges = minimal_edges(edges);
    let mut out = Vec::new();
    match pick_edge(&edges, VarSet::EMPTY, VarSet::EMPTY) {
        Pick::Covered => out.push(VarSet::EMPTY),
        Pick::Dead => {}
        Pick::Edge(first) => {
            let mut branches = Vec::new();
            let mut forbidden = VarSet::EMPTY;
            for v in first.iter() {
                branches.push((VarSet::singleton(v), forbidden));
                forbidden = forbidden.with(v);
            }
            if parallel {
                out = branches
                    .into_par_iter()
                    .flat_map_iter(|(chosen, forbidden)| {
                        let mut local = Vec::new();
                        extend(&edges, chosen, forbidden, &mut local);
                        local
                    })
                    .collect();
            } else {
                for (chosen, forbidden) in branches {
                    extend(&edges, chosen, forbidden, &mut out);
                }
            }
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// Drops edges that contain another edge; they never change the transversals.
fn minimal_edges(edges: &[VarSet]) -> Vec<VarSet> {
    let mut sorted: Vec<VarSet> = edges.to_vec();
    sorted.sort_by_key(|e| (e.len(), e.bits()));
    sorted.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sorted.len());
    for e in sorted {
        if !kept.iter().any(|k| k.is_subset(e)) {
            kept.push(e);
        }
    }
    kept
}

enum Pick {
    Covered,
    Dead,
    Edge(VarSet),
}

/// Uncovered edge with the fewest allowed vertices.
fn pick_edge(edges: &[VarSet], chosen: VarSet, forbidden: VarSet) -> Pick {
    let mut best: Option<VarSet> = None;
    for &e in edges {
        if e.intersects(chosen) {
            continue;
        }
        let allowed = e.difference(forbidden);
        if allowed.is_empty() {
            return Pick::Dead;
        }
        if best.map_or(true, |b| allowed.len() < b.len()) {
            best = Some(allowed);
        }
    }
    match best {
        Some(e) => Pick::Edge(e),
        None => Pick::Covered,
    }
}

fn every_vertex_has_private_edge(edges: &[VarSet], chosen: VarSet) -> bool {
    let mut private = VarSet::EMPTY;
    for &e in edges {
        let hit = e.intersection(chosen);
        if hit.len() == 1 {
            private = private.union(hit);
        }
    }
    private == chosen
}

fn extend(edges: &[VarSet], chosen: VarSet, forbidden: VarSet, out: &mut Vec<VarSet>) {
    if !every_vertex_has_private_edge(edges, chosen) {
        return;
    }
    match pick_edge(edges, chosen, forbidden) {
        Pick::Covered => out.push(chosen),
        Pick::Dead => {}
        Pick::Edge(e) => {
            let mut forbidden = forbidden;
            for v in e.iter() {
                extend(edges, chosen.with(v), forbidden, out);
                forbidden = forbidden.with(v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<VarSet> {
        v.iter().map(|s| VarSet::from_labels(s.iter().copied())).collect()
    }

    /// Exhaustive oracle over all subsets of `0..n`.
    fn brute_force(edges: &[VarSet], n: usize) -> Vec<VarSet> {
        let covers = |s: VarSet| edges.iter().all(|e| e.intersects(s));
        let mut out: Vec<VarSet> = (0..1u64 << n)
            .map(VarSet::from_bits)
            .filter(|&s| covers(s) && s.iter().all(|v| !covers(s.without(v))))
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    #[test]
    fn single_edge() {
        let t = minimal_transversals(&sets(&[&[1, 2]]), false);
        assert_eq!(t, sets(&[&[1], &[2]]));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(minimal_transversals(&[], false), vec![VarSet::EMPTY]);
        assert!(minimal_transversals(&[VarSet::EMPTY], false).is_empty());
    }

    #[test]
    fn pentagon_complement_matches_brute_force() {
        let edges = sets(&[&[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]]);
        let t = minimal_transversals(&edges, true);
        assert_eq!(t, brute_force(&edges, 5));
        assert_eq!(t.len(), 5);
        assert!(t.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn random_hypergraphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=12);
            let m = rng.gen_range(1..=10);
            let edges: Vec<VarSet> = (0..m)
                .map(|_| {
                    let k = rng.gen_range(1..=n.min(4));
                    VarSet::from_indices((0..k).map(|_| rng.gen_range(0..n)))
                })
                .collect();
            assert_eq!(minimal_transversals(&edges, rng.gen()), brute_force(&edges, n));
        }
    }
}
