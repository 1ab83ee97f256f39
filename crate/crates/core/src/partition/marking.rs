use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CubicGraph, EdgeId, Slot, VertexId};

use super::Trail;

/// One chosen slot per vertex: the end of the trail that stops there. The
/// other two slots of the vertex are paired as the passage of a trail.
///
/// Loop marks are normalized to end 1, matching the convention of
/// [`Trail::edge_slots`]; both ends of a loop describe the same trails.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Marking(Vec<Slot>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkingError {
    #[error("marking has {got} entries for {n} vertices")]
    WrongLength { got: usize, n: usize },
    #[error("slot {slot} is not at {vertex}")]
    NotIncident { vertex: VertexId, slot: Slot },
}

/// The internal passages close up into a cycle; `edges` lists one such cycle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("passages form a closed cycle through edges {edges:?}")]
pub struct CycleError {
    pub edges: Vec<EdgeId>,
}

impl Marking {
    pub fn new(g: &CubicGraph, slots: Vec<Slot>) -> Result<Self, MarkingError> {
        if slots.len() != g.n() {
            return Err(MarkingError::WrongLength { got: slots.len(), n: g.n() });
        }
        let mut out = Vec::with_capacity(slots.len());
        for (v, s) in slots.into_iter().enumerate() {
            let v = VertexId(v as u32);
            if s.edge.index() >= g.m() || g.vertex_of(s) != v {
                return Err(MarkingError::NotIncident { vertex: v, slot: s });
            }
            out.push(normalize(g, s));
        }
        Ok(Marking(out))
    }

    /// Marking from one marked edge per vertex.
    pub fn from_edges(g: &CubicGraph, edges: &[EdgeId]) -> Result<Self, MarkingError> {
        if edges.len() != g.n() {
            return Err(MarkingError::WrongLength { got: edges.len(), n: g.n() });
        }
        let slots = g
            .vertices()
            .zip(edges)
            .map(|(v, &e)| {
                if e.index() >= g.m() {
                    return Err(MarkingError::NotIncident { vertex: v, slot: Slot::new(e, 0) });
                }
                g.slot_at(e, v).ok_or(MarkingError::NotIncident { vertex: v, slot: Slot::new(e, 0) })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Marking::new(g, slots)
    }

    pub(crate) fn from_slots_unchecked(slots: Vec<Slot>) -> Self {
        Marking(slots)
    }

    #[inline]
    pub fn slot(&self, v: VertexId) -> Slot {
        self.0[v.index()]
    }

    #[inline]
    pub fn edge(&self, v: VertexId) -> EdgeId {
        self.0[v.index()].edge
    }

    pub fn slots(&self) -> &[Slot] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Copy with the mark at `v` replaced.
    pub fn with(&self, g: &CubicGraph, v: VertexId, s: Slot) -> Marking {
        debug_assert_eq!(g.vertex_of(s), v);
        let mut m = self.0.clone();
        m[v.index()] = normalize(g, s);
        Marking(m)
    }

    pub(crate) fn set(&mut self, g: &CubicGraph, v: VertexId, s: Slot) {
        debug_assert_eq!(g.vertex_of(s), v);
        self.0[v.index()] = normalize(g, s);
    }

    /// True for the marked slot itself; the inner end of a marked loop is a
    /// passage slot.
    pub fn is_marked(&self, g: &CubicGraph, s: Slot) -> bool {
        self.0[g.vertex_of(s).index()] == s
    }

    /// For an unmarked slot, the other slot of its passage.
    pub fn partner(&self, g: &CubicGraph, s: Slot) -> Option<Slot> {
        let v = g.vertex_of(s);
        let mark = self.slot(v);
        if s == mark {
            return None;
        }
        let mut rest = g.slots(v).into_iter().filter(|&x| x != s && x != mark);
        let p = rest.next();
        debug_assert!(rest.next().is_none());
        p
    }

    /// The two passage slots at `v`.
    pub fn passage(&self, g: &CubicGraph, v: VertexId) -> [Slot; 2] {
        g.other_slots(v, self.slot(v))
    }

    /// Follows passages from every marked slot. Trails start at their smaller
    /// marked slot and are listed in order of that slot, so the result is a
    /// canonical form of the marking.
    pub fn walk(&self, g: &CubicGraph) -> Result<Vec<Trail>, CycleError> {
        let mut used = vec![false; 2 * g.m()];
        let mut starts: Vec<Slot> = self.0.clone();
        starts.sort();
        let mut trails = Vec::with_capacity(g.n() / 2);
        for s in starts {
            if used[s.index()] {
                continue;
            }
            let mut vertices = vec![g.vertex_of(s)];
            let mut edges = Vec::new();
            let mut cur = s;
            loop {
                used[cur.index()] = true;
                let t = cur.twin();
                used[t.index()] = true;
                edges.push(cur.edge);
                vertices.push(g.vertex_of(t));
                match self.partner(g, t) {
                    None => break,
                    Some(next) => cur = next,
                }
                if used[cur.index()] {
                    // cannot happen on a cubic graph; guards against a corrupt marking
                    return Err(CycleError { edges });
                }
            }
            trails.push(Trail::from_parts_unchecked(vertices, edges));
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(CycleError { edges: self.cycle_from(g, Slot::from_index(i)) });
        }
        Ok(trails)
    }

    fn cycle_from(&self, g: &CubicGraph, start: Slot) -> Vec<EdgeId> {
        let mut edges = Vec::new();
        let mut cur = start;
        loop {
            edges.push(cur.edge);
            let t = cur.twin();
            cur = self.partner(g, t).expect("unvisited slots are never marked");
            if cur == start {
                break;
            }
        }
        edges
    }

    /// True when following passages never closes a cycle.
    pub fn is_acyclic(&self, g: &CubicGraph) -> bool {
        self.trail_lengths(g).is_some()
    }

    /// Lengths of the trails (in canonical order) or `None` on a cycle.
    /// Cheaper than [`Marking::walk`]: nothing is allocated per trail.
    pub fn trail_lengths(&self, g: &CubicGraph) -> Option<Vec<usize>> {
        let mut used = vec![false; 2 * g.m()];
        let mut starts: Vec<Slot> = self.0.clone();
        starts.sort();
        let mut lens = Vec::with_capacity(g.n() / 2);
        let mut covered = 0;
        for s in starts {
            if used[s.index()] {
                continue;
            }
            let mut len = 0;
            let mut cur = s;
            loop {
                used[cur.index()] = true;
                let t = cur.twin();
                used[t.index()] = true;
                len += 1;
                match self.partner(g, t) {
                    None => break,
                    Some(next) => cur = next,
                }
            }
            covered += len;
            lens.push(len);
        }
        (covered == g.m()).then_some(lens)
    }
}

#[inline]
fn normalize(g: &CubicGraph, s: Slot) -> Slot {
    if g.is_loop(s.edge) {
        Slot::new(s.edge, 1)
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn k4_cyclic_successor_marking() {
        // every vertex marks its edge toward v+1 mod 4
        let g = generators::k4();
        let edges: Vec<EdgeId> = g.vertices().map(|v| g.edges_between(v, VertexId((v.0 + 1) % 4))[0]).collect();
        let m = Marking::from_edges(&g, &edges).unwrap();
        let trails = m.walk(&g).unwrap();
        assert_eq!(trails.len(), 2);
        let lens: Vec<usize> = trails.iter().map(|t| t.len()).collect();
        assert_eq!(lens.iter().sum::<usize>(), 6);
        assert_eq!(m.trail_lengths(&g).unwrap(), lens);
    }

    #[test]
    fn triangle_outward_marks_cycle() {
        let g = generators::prism();
        // triangle 0,1,2 marks its rungs (edges 6,7,8)
        let mut edges = vec![EdgeId(6), EdgeId(7), EdgeId(8)];
        edges.extend([EdgeId(3), EdgeId(4), EdgeId(5)]);
        let m = Marking::from_edges(&g, &edges).unwrap();
        let err = m.walk(&g).unwrap_err();
        let mut cyc = err.edges.clone();
        cyc.sort();
        assert!(cyc == vec![EdgeId(0), EdgeId(1), EdgeId(2)] || cyc == vec![EdgeId(3), EdgeId(4), EdgeId(5)]);
        assert!(!m.is_acyclic(&g));
    }

    #[test]
    fn loop_vertex_must_mark_its_loop() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let bad = Marking::from_edges(&g, &[EdgeId(1), EdgeId(2)]).unwrap();
        assert_eq!(bad.walk(&g).unwrap_err().edges, vec![EdgeId(0)]);
        let good = Marking::from_edges(&g, &[EdgeId(0), EdgeId(2)]).unwrap();
        let trails = good.walk(&g).unwrap();
        assert_eq!(trails.len(), 1);
        assert_eq!(trails[0].edges(), &[EdgeId(0), EdgeId(1), EdgeId(2)]);
    }

    #[test]
    fn loop_ends_normalize() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let a = Marking::new(&g, vec![Slot::new(EdgeId(0), 0), Slot::new(EdgeId(2), 1)]).unwrap();
        let b = Marking::new(&g, vec![Slot::new(EdgeId(0), 1), Slot::new(EdgeId(2), 0)]).unwrap();
        assert_eq!(a, b);
    }
}
