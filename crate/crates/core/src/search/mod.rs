//! Searches for normal odd partitions, compatible triples and complete
//! systems, and sweeps of those searches over graph catalogs.

mod sweep;
pub mod triple;

use thiserror::Error;

use crate::construct::nop_any;
use crate::graph::{CubicGraph, EdgeId, PerfectMatching};
use crate::partition::{are_compatible, edge_role_audit, AuditReport, AuditViolation, Marking, NormalPartition};
use crate::switching::{all_markings, MoveKind};

pub use sweep::{conjecture_sweep, SweepCheck, SweepInput, SweepRecord};
pub use triple::{first_triple, Bijection, Outcome, SearchOptions, TripleSearch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("more than {cap} candidates")]
    CapExceeded { cap: usize },
    #[error("partitions are not pairwise compatible odd partitions")]
    NotCompatibleOdd,
    #[error("associated matchings share edges {0:?}")]
    EmptyIntersectionViolated(Vec<EdgeId>),
}

/// A normal odd partition built from the first perfect matching, if any.
pub fn find_nop(g: &CubicGraph) -> Option<NormalPartition> {
    nop_any(g).ok()
}

/// Every normal odd partition, in lexicographic order of markings.
pub fn enumerate_nops(g: &CubicGraph, cap: usize) -> Result<Vec<NormalPartition>, SearchError> {
    let ms = all_markings(g, &MoveKind::Odd, cap).map_err(|_| SearchError::CapExceeded { cap })?;
    Ok(ms.into_iter().map(|m| NormalPartition::from_marking(g, m).expect("odd markings are acyclic")).collect())
}

/// Direct backtracking for one odd marking, independent of matchings.
pub fn odd_marking_by_search(g: &CubicGraph) -> Option<Marking> {
    let mut f = triple::Forest::new(g);
    let mut chosen = Vec::with_capacity(g.n());
    fn go(g: &CubicGraph, f: &mut triple::Forest, chosen: &mut Vec<crate::graph::Slot>) -> bool {
        let k = chosen.len();
        if k == g.n() {
            return true;
        }
        let v = crate::graph::VertexId(k as u32);
        for s in g.slots(v) {
            if g.is_loop(s.edge) && s.end == 0 {
                continue;
            }
            let d = f.depth();
            let [p, q] = g.other_slots(v, s);
            let ok = f.join(p, q).is_some_and(|r| {
                let (len, marks) = f.info(r);
                marks < 2 || len % 2 == 1
            }) && {
                let r = f.mark(s);
                let (len, marks) = f.info(r);
                marks < 2 || len % 2 == 1
            };
            if ok {
                chosen.push(s);
                if go(g, f, chosen) {
                    return true;
                }
                chosen.pop();
            }
            f.undo_to(d);
        }
        false
    }
    go(g, &mut f, &mut chosen).then(|| Marking::new(g, chosen).expect("slots at their vertices"))
}

fn to_partitions(g: &CubicGraph, ms: &[Marking; 3]) -> [NormalPartition; 3] {
    ms.clone().map(|m| NormalPartition::from_marking(g, m).expect("search output is acyclic"))
}

/// First pairwise compatible triple of normal odd partitions, or `None`
/// once the whole space is exhausted.
pub fn find_compatible_triple(g: &CubicGraph) -> Option<[NormalPartition; 3]> {
    let (found, _) = first_triple(g, SearchOptions::default());
    found.map(|ms| to_partitions(g, &ms))
}

/// Like [`find_compatible_triple`] with custom options; also reports
/// whether the answer is definitive.
pub fn find_compatible_triple_with(g: &CubicGraph, opts: SearchOptions) -> (Option<[NormalPartition; 3]>, Outcome) {
    let (found, out) = first_triple(g, opts);
    (found.map(|ms| to_partitions(g, &ms)), out)
}

/// Calls `visit` on every compatible triple (ordered: partition `i` gets
/// the `i`-th mark of each vertex).
pub fn for_each_compatible_triple<F: FnMut(&[NormalPartition; 3]) -> bool>(
    g: &CubicGraph,
    opts: SearchOptions,
    mut visit: F,
) -> Outcome {
    let mut s = TripleSearch::new(g, opts);
    s.run(|ms| visit(&to_partitions(g, ms)))
}

/// The three associated perfect matchings of a compatible odd triple;
/// they never share an edge.
pub fn fan_raspaud_witness(triple: [&NormalPartition; 3]) -> Result<[PerfectMatching; 3], SearchError> {
    let [a, b, c] = triple;
    if !(are_compatible(a, b) && are_compatible(a, c) && are_compatible(b, c)) {
        return Err(SearchError::NotCompatibleOdd);
    }
    let ms = [a, b, c].map(|p| p.associated_matching());
    let [Ok(ma), Ok(mb), Ok(mc)] = ms else {
        return Err(SearchError::NotCompatibleOdd);
    };
    let common: Vec<EdgeId> = ma.edges().iter().copied().filter(|&e| mb.contains(e) && mc.contains(e)).collect();
    if !common.is_empty() {
        return Err(SearchError::EmptyIntersectionViolated(common));
    }
    Ok([ma, mb, mc])
}

/// Why a triple failed [`audit_triple`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleDefect {
    #[error("partition {0} has an even trail")]
    NotOdd(usize),
    #[error("partition {0} breaks the length balance")]
    Unbalanced(usize),
    #[error("partitions {0} and {1} agree somewhere")]
    Incompatible(usize, usize),
    #[error(transparent)]
    Roles(#[from] AuditViolation),
    #[error(transparent)]
    Witness(#[from] SearchError),
}

/// Every check a compatible odd triple must pass: oddness, the length
/// balance of each partition, pairwise compatibility, the edge-role audit,
/// and empty intersection of the associated matchings.
pub fn audit_triple(g: &CubicGraph, triple: [&NormalPartition; 3]) -> Result<AuditReport, TripleDefect> {
    for (i, p) in triple.iter().enumerate() {
        if !p.is_odd() {
            return Err(TripleDefect::NotOdd(i));
        }
        if p.stats().balance() != 0 {
            return Err(TripleDefect::Unbalanced(i));
        }
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        if !are_compatible(triple[a], triple[b]) {
            return Err(TripleDefect::Incompatible(a, b));
        }
    }
    let report = edge_role_audit(g, triple)?;
    fan_raspaud_witness(triple)?;
    Ok(report)
}

/// `k` normal odd partitions such that at every vertex three of them mark
/// three distinct edges. `cap` bounds both the enumeration of candidates
/// and the number of combinations tried.
pub fn complete_system(g: &CubicGraph, k: usize, cap: usize) -> Result<Option<Vec<NormalPartition>>, SearchError> {
    assert!(k >= 3, "a complete system has at least three partitions");
    if k == 3 {
        return Ok(find_compatible_triple(g).map(|t| t.to_vec()));
    }
    let all = enumerate_nops(g, cap)?;
    let mut chosen: Vec<usize> = Vec::new();
    let mut budget = cap;
    // per vertex, bitmask of marked edge slots (0..3) seen so far
    let mut seen = vec![0u8; g.n()];
    let pos = |v: crate::graph::VertexId, p: &NormalPartition| {
        g.slots(v).iter().position(|s| s.edge == p.marked(v)).unwrap() as u8
    };
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &CubicGraph,
        all: &[NormalPartition],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        seen: &mut Vec<u8>,
        budget: &mut usize,
        pos: &dyn Fn(crate::graph::VertexId, &NormalPartition) -> u8,
    ) -> Result<bool, SearchError> {
        let left = k - chosen.len();
        if seen.iter().any(|&m| 3 - m.count_ones() as usize > left) {
            return Ok(false);
        }
        if left == 0 {
            return Ok(true);
        }
        for i in start..all.len() {
            if *budget == 0 {
                return Err(SearchError::CapExceeded { cap: 0 });
            }
            *budget -= 1;
            let saved = seen.clone();
            for v in g.vertices() {
                seen[v.index()] |= 1 << pos(v, &all[i]);
            }
            chosen.push(i);
            if go(g, all, k, i + 1, chosen, seen, budget, pos)? {
                return Ok(true);
            }
            chosen.pop();
            *seen = saved;
        }
        Ok(false)
    }
    match go(g, &all, k, 0, &mut chosen, &mut seen, &mut budget, &pos) {
        Ok(true) => Ok(Some(chosen.iter().map(|&i| all[i].clone()).collect())),
        Ok(false) => Ok(None),
        Err(_) => Err(SearchError::CapExceeded { cap }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generators, perfect_matchings, Slot, VertexId};
    use crate::partition::compatibility_set;

    /// Unpruned 6^n enumeration of bijection assignments.
    fn brute_force(g: &CubicGraph) -> Vec<[Marking; 3]> {
        let options: Vec<Vec<Bijection>> = g.vertices().map(|v| triple::bijections(g, v)).collect();
        let mut out = Vec::new();
        if options.iter().any(|o| o.is_empty()) {
            return out;
        }
        let mut idx = vec![0usize; g.n()];
        loop {
            let ms: [Marking; 3] = [0, 1, 2].map(|i| {
                let slots: Vec<Slot> = idx.iter().enumerate().map(|(v, &k)| options[v][k][i]).collect();
                Marking::new(g, slots).unwrap()
            });
            let ok = ms.iter().all(|m| m.trail_lengths(g).is_some_and(|ls| ls.iter().all(|l| l % 2 == 1)));
            if ok {
                out.push(ms);
            }
            let mut k = g.n();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < 6 {
                    break;
                }
                idx[k] = 0;
            }
        }
    }

    fn pruned(g: &CubicGraph) -> Vec<[Marking; 3]> {
        let mut out = Vec::new();
        let mut s = TripleSearch::new(g, SearchOptions::default());
        assert_eq!(
            s.run(|m| {
                out.push(m.clone());
                true
            }),
            Outcome::Complete
        );
        out
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for n in [2, 4, 6] {
            for c in crate::corpus::multi(n) {
                let mut a = brute_force(&c.graph);
                let mut b = pruned(&c.graph);
                a.sort();
                b.sort();
                assert_eq!(a, b, "{}", c.id);
            }
        }
    }

    #[test]
    fn solutions_are_compatible_odd_triples() {
        let g = generators::k4();
        let mut count = 0;
        for_each_compatible_triple(&g, SearchOptions::default(), |t| {
            count += 1;
            assert!(t.iter().all(|p| p.is_odd()));
            assert!(compatibility_set(&t[0], &t[1]).is_empty());
            assert!(compatibility_set(&t[1], &t[2]).is_empty());
            assert!(compatibility_set(&t[0], &t[2]).is_empty());
            true
        });
        assert!(count > 0);
    }

    #[test]
    fn loops_and_bridges_have_no_triple() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(find_compatible_triple(&g).is_none());
        assert!(find_compatible_triple(&generators::two_blocks_with_bridge()).is_none());
        assert!(find_compatible_triple(&generators::petersen()).is_some());
    }

    #[test]
    fn find_nop_examples() {
        let p = find_nop(&generators::petersen()).unwrap();
        assert!(p.trails().iter().all(|t| t.len() == 3));
        assert!(find_nop(&generators::theta()).is_some());
        let claw = generators::claw_of_bridges();
        assert!(perfect_matchings(&claw).next().is_none());
        assert!(find_nop(&claw).is_none());
        assert!(odd_marking_by_search(&claw).is_none());
    }

    #[test]
    fn odd_marking_search_agrees_with_matchings() {
        for c in crate::corpus::up_to_10() {
            let has_pm = perfect_matchings(&c.graph).next().is_some();
            let m = odd_marking_by_search(&c.graph);
            assert_eq!(m.is_some(), has_pm, "{}", c.id);
            if let Some(m) = m {
                assert!(MoveKind::Odd.admits(&c.graph, &m));
            }
        }
    }

    #[test]
    fn theta_nops_group_by_matching() {
        let g = generators::theta();
        let all = enumerate_nops(&g, 100).unwrap();
        let mut groups = std::collections::BTreeMap::new();
        for p in &all {
            *groups.entry(p.associated_matching().unwrap().edges().to_vec()).or_insert(0) += 1;
        }
        assert_eq!(groups.len(), 3);
        assert_eq!(all.len(), groups.values().sum::<usize>());
    }

    #[test]
    fn k4_nop_count_matches_brute_force() {
        let g = generators::k4();
        let all = enumerate_nops(&g, 1000).unwrap();
        // 3^4 markings checked one by one
        let mut count = 0;
        for code in 0..81u32 {
            let slots: Vec<Slot> = g.vertices().map(|v| g.slots(v)[(code / 3u32.pow(v.0) % 3) as usize]).collect();
            let m = Marking::new(&g, slots).unwrap();
            if m.trail_lengths(&g).is_some_and(|ls| ls.iter().all(|l| l % 2 == 1)) {
                count += 1;
            }
        }
        assert_eq!(all.len(), count);
        assert!(matches!(enumerate_nops(&g, 1), Err(SearchError::CapExceeded { .. })));
    }

    #[test]
    fn witness_matchings() {
        let g = generators::petersen();
        let t = find_compatible_triple(&g).unwrap();
        let [a, b, c] = fan_raspaud_witness([&t[0], &t[1], &t[2]]).unwrap();
        assert!(a.edges().iter().all(|&e| !(b.contains(e) && c.contains(e))));
        assert_eq!(fan_raspaud_witness([&t[0], &t[0], &t[1]]), Err(SearchError::NotCompatibleOdd));
        let k33 = generators::k33();
        let bt = crate::construct::bipartite_triple(&k33).unwrap();
        let ms = fan_raspaud_witness(bt.partitions()).unwrap();
        for (m, col) in ms.iter().zip(crate::graph::Color::ALL) {
            assert_eq!(*m, bt.coloring().class(col));
        }
    }

    #[test]
    fn complete_systems() {
        let g = generators::k4();
        let s = complete_system(&g, 3, 1000).unwrap().unwrap();
        assert_eq!(s.len(), 3);
        let s4 = complete_system(&g, 4, 100_000).unwrap().unwrap();
        assert_eq!(s4.len(), 4);
        for v in g.vertices() {
            let mut marks: Vec<EdgeId> = s4.iter().map(|p| p.marked(v)).collect();
            marks.sort();
            marks.dedup();
            assert_eq!(marks.len(), 3, "{}", VertexId(v.0));
        }
    }
}
