//! Cubic multigraphs with identity-bearing edges.
//!
//! Every edge has a dense [`EdgeId`] and two ends. Each end sits in one of
//! the three [`Slot`]s of its vertex, so a loop at `v` occupies two slots of
//! `v` and parallel edges stay distinguishable. Everything downstream
//! (trails, markings, switching) talks in edge ids and slots, never in
//! endpoint pairs.

mod algo;
mod coloring;
pub mod generators;
pub mod io;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use algo::{bridges, is_bipartite, perfect_matchings, PerfectMatching, PerfectMatchings};
pub use coloring::{chromatic_index, proper_3_edge_coloring, Color, EdgeColoring};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One end of an edge: `end` 0 sits at the first listed endpoint, 1 at the second.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub edge: EdgeId,
    pub end: u8,
}

impl Slot {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        Slot { edge, end }
    }

    /// The opposite end of the same edge.
    #[inline]
    pub fn twin(self) -> Slot {
        Slot { edge: self.edge, end: 1 - self.end }
    }

    /// Dense index in `0..2m`.
    #[inline]
    pub fn index(self) -> usize {
        2 * self.edge.index() + self.end as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Slot {
        Slot { edge: EdgeId((i / 2) as u32), end: (i % 2) as u8 }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NonCubic { vertex: VertexId, degree: usize },
    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A cubic multigraph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicGraph {
    ends: Vec<[VertexId; 2]>,
    slots: Vec<[Slot; 3]>,
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicGraph")
            .field("n", &self.n())
            .field("edges", &self.ends.iter().map(|[a, b]| (a.0, b.0)).collect::<Vec<_>>())
            .finish()
    }
}

impl CubicGraph {
    /// Builds a graph from an endpoint list; edge ids follow input order.
    pub fn new(n: usize, endpoints: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut incident: Vec<Vec<Slot>> = vec![Vec::with_capacity(3); n];
        let mut ends = Vec::with_capacity(endpoints.len());
        for (i, &(a, b)) in endpoints.iter().enumerate() {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            let e = EdgeId(i as u32);
            incident[a as usize].push(Slot::new(e, 0));
            incident[b as usize].push(Slot::new(e, 1));
            ends.push([VertexId(a), VertexId(b)]);
        }
        let mut slots = Vec::with_capacity(n);
        for (v, inc) in incident.into_iter().enumerate() {
            if inc.len() != 3 {
                return Err(GraphError::NonCubic { vertex: VertexId(v as u32), degree: inc.len() });
            }
            slots.push([inc[0], inc[1], inc[2]]);
        }
        Ok(CubicGraph { ends, slots })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.slots.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.m() as u32).map(EdgeId)
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e.index()]
    }

    /// Endpoint list as plain integer pairs, in edge-id order.
    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        self.ends.iter().map(|[a, b]| (a.0, b.0)).collect()
    }

    #[inline]
    pub fn slots(&self, v: VertexId) -> [Slot; 3] {
        self.slots[v.index()]
    }

    #[inline]
    pub fn vertex_of(&self, s: Slot) -> VertexId {
        self.ends[s.edge.index()][s.end as usize]
    }

    /// Vertex at the far end of the edge through `s`.
    #[inline]
    pub fn across(&self, s: Slot) -> VertexId {
        self.vertex_of(s.twin())
    }

    #[inline]
    pub fn is_loop(&self, e: EdgeId) -> bool {
        let [a, b] = self.endpoints(e);
        a == b
    }

    /// The endpoint of `e` other than `v` (`v` itself for a loop).
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.endpoints(e);
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Slot of `e` at `v`. For a loop the first end is returned.
    pub fn slot_at(&self, e: EdgeId, v: VertexId) -> Option<Slot> {
        let [a, b] = self.endpoints(e);
        if a == v {
            Some(Slot::new(e, 0))
        } else if b == v {
            Some(Slot::new(e, 1))
        } else {
            None
        }
    }

    /// The two slots of `v` other than `s`.
    pub fn other_slots(&self, v: VertexId, s: Slot) -> [Slot; 2] {
        let [a, b, c] = self.slots(v);
        if a == s {
            [b, c]
        } else if b == s {
            [a, c]
        } else {
            debug_assert_eq!(c, s);
            [a, b]
        }
    }

    pub fn neighbors(&self, v: VertexId) -> [VertexId; 3] {
        self.slots(v).map(|s| self.across(s))
    }

    pub fn has_loop(&self) -> bool {
        self.edges().any(|e| self.is_loop(e))
    }

    pub fn is_simple(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        self.vertices().all(|v| {
            let [a, b, c] = self.neighbors(v);
            a != b && b != c && a != c
        })
    }

    /// Edges joining `a` and `b` (both directions), in id order.
    pub fn edges_between(&self, a: VertexId, b: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.slots(a).iter().filter(|s| self.across(**s) == b).map(|s| s.edge).collect();
        out.dedup();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// True when some three distinct vertices are pairwise adjacent.
    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    pub fn find_triangle(&self) -> Option<[VertexId; 3]> {
        for a in self.vertices() {
            let na = self.neighbors(a);
            for &b in &na {
                if b <= a {
                    continue;
                }
                for &c in &self.neighbors(b) {
                    if c <= b {
                        continue;
                    }
                    if na.contains(&c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// A pair of distinct vertices joined by at least two edges.
    pub fn find_digon(&self) -> Option<(VertexId, VertexId)> {
        for v in self.vertices() {
            let [a, b, c] = self.neighbors(v);
            for (x, y) in [(a, b), (a, c), (b, c)] {
                if x == y && x != v && v < x {
                    return Some((v, x));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_graph() {
        let g = CubicGraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(!g.is_simple());
        assert_eq!(g.edges_between(VertexId(0), VertexId(1)).len(), 3);
    }

    #[test]
    fn k4() {
        let e = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = CubicGraph::new(4, &e).unwrap();
        assert_eq!(g.m(), 6);
        assert!(g.is_simple());
        assert!(g.has_triangle());
    }

    #[test]
    fn degree_deficit() {
        let err = CubicGraph::new(2, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::NonCubic { vertex: VertexId(0), degree: 2 });
    }

    #[test]
    fn loop_occupies_two_slots() {
        // dumbbell: loop, bridge, loop
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let s = g.slots(VertexId(0));
        assert_eq!(s[0].edge, s[1].edge);
        assert!(g.has_loop());
        assert_eq!(g.other_slots(VertexId(0), s[2]), [s[0], s[1]]);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            CubicGraph::new(2, &[(0, 1), (0, 1), (0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }
}
