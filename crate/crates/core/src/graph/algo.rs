use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{CubicGraph, EdgeId, GraphError, VertexId};

/// BFS 2-coloring. Returns the side of every vertex (`false`/`true`) when the
/// graph is bipartite. A loop is an odd cycle.
pub fn is_bipartite(g: &CubicGraph) -> Option<Vec<bool>> {
    if g.has_loop() {
        return None;
    }
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for start in g.vertices() {
        if side[start.index()].is_some() {
            continue;
        }
        side[start.index()] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let sv = side[v.index()].unwrap();
            for w in g.neighbors(v) {
                match side[w.index()] {
                    None => {
                        side[w.index()] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Cut edges, by iterative lowpoint DFS. Parallel edges are never bridges
/// because the tree edge is skipped by id, not by parent vertex.
pub fn bridges(g: &CubicGraph) -> Vec<EdgeId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut time = 0;
    // frame: (vertex, edge used to enter, next slot index)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in g.vertices() {
        if disc[root.index()] != usize::MAX {
            continue;
        }
        disc[root.index()] = time;
        low[root.index()] = time;
        time += 1;
        stack.push((root, None, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, via, i) = *frame;
            if i < 3 {
                frame.2 += 1;
                let s = g.slots(v)[i];
                if Some(s.edge) == via {
                    continue;
                }
                let w = g.across(s);
                if disc[w.index()] == usize::MAX {
                    disc[w.index()] = time;
                    low[w.index()] = time;
                    time += 1;
                    stack.push((w, Some(s.edge), 0));
                } else {
                    low[v.index()] = low[v.index()].min(disc[w.index()]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p.index()] = low[p.index()].min(low[v.index()]);
                    if low[v.index()] > disc[p.index()] {
                        out.push(e);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// A set of edges covering every vertex exactly once, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching(Vec<EdgeId>);

impl PerfectMatching {
    /// Checks coverage and rejects loops.
    pub fn new(g: &CubicGraph, mut edges: Vec<EdgeId>) -> Result<Self, GraphError> {
        edges.sort();
        edges.dedup();
        let mut covered = vec![false; g.n()];
        for &e in &edges {
            if e.index() >= g.m() {
                return Err(GraphError::BadParameter(format!("no edge {e}")));
            }
            if g.is_loop(e) {
                return Err(GraphError::BadParameter(format!("{e} is a loop")));
            }
            for v in g.endpoints(e) {
                if std::mem::replace(&mut covered[v.index()], true) {
                    return Err(GraphError::BadParameter(format!("{v} covered twice")));
                }
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(GraphError::BadParameter(format!("v{v} uncovered")));
        }
        Ok(PerfectMatching(edges))
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<EdgeId>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        PerfectMatching(edges)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership mask indexed by edge id.
    pub fn mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for e in &self.0 {
            mask[e.index()] = true;
        }
        mask
    }
}

/// Lazy enumeration of all perfect matchings: always match the lowest
/// uncovered vertex, trying its slots in order.
pub struct PerfectMatchings<'g> {
    g: &'g CubicGraph,
    covered: Vec<bool>,
    // (vertex being matched, next slot to try, edge currently chosen)
    stack: Vec<(VertexId, usize, Option<EdgeId>)>,
    started: bool,
    done: bool,
}

pub fn perfect_matchings(g: &CubicGraph) -> PerfectMatchings<'_> {
    PerfectMatchings { g, covered: vec![false; g.n()], stack: Vec::new(), started: false, done: false }
}

impl PerfectMatchings<'_> {
    fn lowest_uncovered(&self) -> Option<VertexId> {
        self.covered.iter().position(|c| !c).map(|i| VertexId(i as u32))
    }

    fn release(&mut self, e: EdgeId) {
        for v in self.g.endpoints(e) {
            self.covered[v.index()] = false;
        }
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            match self.lowest_uncovered() {
                Some(v) => self.stack.push((v, 0, None)),
                None => {
                    self.done = true;
                    return Some(PerfectMatching(Vec::new()));
                }
            }
        }
        let g = self.g;
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let (v, i, chosen) = *top;
            if let Some(e) = chosen {
                top.2 = None;
                self.release(e);
            }
            if i >= 3 {
                self.stack.pop();
                continue;
            }
            let top = self.stack.last_mut().unwrap();
            top.1 += 1;
            let s = g.slots(v)[i];
            let w = g.across(s);
            if w == v || self.covered[w.index()] {
                continue;
            }
            // a parallel edge reached through an earlier slot is a different edge, keep it
            top.2 = Some(s.edge);
            self.covered[v.index()] = true;
            self.covered[w.index()] = true;
            match self.lowest_uncovered() {
                Some(u) => self.stack.push((u, 0, None)),
                None => {
                    let mut edges: Vec<EdgeId> = self.stack.iter().filter_map(|f| f.2).collect();
                    edges.sort();
                    return Some(PerfectMatching(edges));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn bipartite_basics() {
        assert!(is_bipartite(&generators::k33()).is_some());
        assert!(is_bipartite(&generators::petersen()).is_none());
        let side = is_bipartite(&generators::theta()).unwrap();
        assert_ne!(side[0], side[1]);
        assert!(is_bipartite(&generators::k4()).is_none());
    }

    #[test]
    fn bridge_sets() {
        assert!(bridges(&generators::k4()).is_empty());
        assert!(bridges(&generators::petersen()).is_empty());
        assert!(bridges(&generators::theta()).is_empty());
        let g = generators::two_blocks_with_bridge();
        let b = bridges(&g);
        assert_eq!(b.len(), 1);
        let [x, y] = g.endpoints(b[0]);
        assert!(x.0 < 5 && y.0 >= 5 || y.0 < 5 && x.0 >= 5);
    }

    #[test]
    fn dumbbell_bridge() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(bridges(&g), vec![EdgeId(1)]);
    }

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(&generators::theta()).count(), 3);
        assert_eq!(perfect_matchings(&generators::k4()).count(), 3);
        assert_eq!(perfect_matchings(&generators::k33()).count(), 6);
    }

    #[test]
    fn petersen_matchings_against_subset_scan() {
        let g = generators::petersen();
        let fast: Vec<_> = perfect_matchings(&g).collect();
        // oracle: every 5-subset of the 15 edges that covers all vertices
        let mut slow = Vec::new();
        for mask in 0u32..(1 << 15) {
            if mask.count_ones() != 5 {
                continue;
            }
            let edges: Vec<EdgeId> = (0..15).filter(|i| mask >> i & 1 == 1).map(EdgeId).collect();
            if let Ok(pm) = PerfectMatching::new(&g, edges) {
                slow.push(pm);
            }
        }
        let mut fast_sorted = fast.clone();
        fast_sorted.sort();
        slow.sort();
        assert_eq!(fast_sorted, slow);
        assert_eq!(fast.len(), 6);
    }

    #[test]
    fn no_matching_for_dumbbell() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(perfect_matchings(&g).count(), 1);
        let claw = generators::claw_of_bridges();
        assert_eq!(perfect_matchings(&claw).count(), 0);
    }
}
