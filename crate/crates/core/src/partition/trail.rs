use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CubicGraph, EdgeId, Slot, VertexId};

/// Why a vertex/edge sequence is not a trail of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrailError {
    #[error("trail has no edges")]
    Empty,
    #[error("trail lists {vertices} vertices for {edges} edges")]
    LengthMismatch { vertices: usize, edges: usize },
    #[error("edge at position {position} does not join its neighbouring vertices")]
    NotIncident { position: usize },
    #[error("edge {edge} repeated")]
    RepeatedEdge { edge: EdgeId },
    #[error("unknown edge or vertex id at position {position}")]
    OutOfRange { position: usize },
}

/// v_0 e_1 v_1 ... e_k v_k with distinct edges, k >= 1. Vertices may repeat.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trail {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Trail {
    pub fn new(g: &CubicGraph, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self, TrailError> {
        if edges.is_empty() {
            return Err(TrailError::Empty);
        }
        if vertices.len() != edges.len() + 1 {
            return Err(TrailError::LengthMismatch { vertices: vertices.len(), edges: edges.len() });
        }
        let mut seen = vec![false; g.m()];
        for (i, &e) in edges.iter().enumerate() {
            let (a, b) = (vertices[i], vertices[i + 1]);
            if e.index() >= g.m() || a.index() >= g.n() || b.index() >= g.n() {
                return Err(TrailError::OutOfRange { position: i + 1 });
            }
            let [x, y] = g.endpoints(e);
            if !((x == a && y == b) || (x == b && y == a)) {
                return Err(TrailError::NotIncident { position: i + 1 });
            }
            if std::mem::replace(&mut seen[e.index()], true) {
                return Err(TrailError::RepeatedEdge { edge: e });
            }
        }
        Ok(Trail { vertices, edges })
    }

    /// Builds a trail from an edge sequence starting at `start`.
    pub fn from_edges(g: &CubicGraph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self, TrailError> {
        let mut vertices = vec![start];
        let mut cur = start;
        for (i, &e) in edges.iter().enumerate() {
            if e.index() >= g.m() {
                return Err(TrailError::OutOfRange { position: i + 1 });
            }
            let [x, y] = g.endpoints(e);
            cur = if x == cur {
                y
            } else if y == cur {
                x
            } else {
                return Err(TrailError::NotIncident { position: i + 1 });
            };
            vertices.push(cur);
        }
        Trail::new(g, vertices, edges)
    }

    pub(crate) fn from_parts_unchecked(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        Trail { vertices, edges }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Always false for a constructed trail; present for clippy's sake.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn reversed(&self) -> Trail {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Trail { vertices, edges }
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Edges whose removal leaves two odd subtrails: the even 1-based
    /// positions of an odd trail. A length-1 trail has none, and an
    /// even trail has none either since the two parts cannot both be odd.
    pub fn odd_edges(&self) -> Vec<EdgeId> {
        let k = self.len();
        if k.is_multiple_of(2) {
            return Vec::new();
        }
        self.edges.iter().skip(1).step_by(2).copied().collect()
    }

    /// The slot of `edges[i]` (0-based) on the side of `vertices[i]` and on
    /// the side of `vertices[i + 1]`.
    ///
    /// A loop has no observable direction, so one convention is fixed: the
    /// end touching the rest of the trail is end 0, the free end is end 1.
    /// Loops only ever sit at the ends of a normal partition's trails.
    pub fn edge_slots(&self, g: &CubicGraph, i: usize) -> (Slot, Slot) {
        let e = self.edges[i];
        if g.is_loop(e) {
            if i == 0 && self.len() > 1 {
                (Slot::new(e, 1), Slot::new(e, 0))
            } else {
                (Slot::new(e, 0), Slot::new(e, 1))
            }
        } else {
            let leave = g.slot_at(e, self.vertices[i]).unwrap();
            (leave, leave.twin())
        }
    }

    /// The slots at the two ends: (start slot, end slot).
    pub fn end_slots(&self, g: &CubicGraph) -> (Slot, Slot) {
        (self.edge_slots(g, 0).0, self.edge_slots(g, self.len() - 1).1)
    }

    /// Sub-trail between vertex positions `a <= b`.
    pub fn segment(&self, a: usize, b: usize) -> Trail {
        debug_assert!(a < b && b <= self.len());
        Trail { vertices: self.vertices[a..=b].to_vec(), edges: self.edges[a..b].to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn vs(x: &[u32]) -> Vec<VertexId> {
        x.iter().map(|&v| VertexId(v)).collect()
    }

    fn es(x: &[u32]) -> Vec<EdgeId> {
        x.iter().map(|&e| EdgeId(e)).collect()
    }

    #[test]
    fn odd_edge_positions() {
        let g = generators::k4();
        // 0-1-2-3 via edges 0 (01), 3 (12), 5 (23)
        let t = Trail::new(&g, vs(&[0, 1, 2, 3]), es(&[0, 3, 5])).unwrap();
        assert_eq!(t.odd_edges(), es(&[3]));
        let one = Trail::new(&g, vs(&[0, 1]), es(&[0])).unwrap();
        assert!(one.odd_edges().is_empty());
        // 0-1-2-0-3-1: edges 01,12,02,03,13
        let five = Trail::new(&g, vs(&[0, 1, 2, 0, 3, 1]), es(&[0, 3, 1, 2, 4])).unwrap();
        assert_eq!(five.odd_edges(), es(&[3, 2]));
    }

    #[test]
    fn rejects_bad_sequences() {
        let g = generators::k4();
        assert_eq!(Trail::new(&g, vs(&[0]), vec![]), Err(TrailError::Empty));
        assert_eq!(Trail::new(&g, vs(&[0, 1, 0]), es(&[0, 0])), Err(TrailError::RepeatedEdge { edge: EdgeId(0) }));
        assert_eq!(Trail::new(&g, vs(&[0, 2]), es(&[0])), Err(TrailError::NotIncident { position: 1 }));
    }

    #[test]
    fn theta_trail_through_parallel_edges() {
        let g = generators::theta();
        let t = Trail::from_edges(&g, VertexId(0), es(&[0, 1, 2])).unwrap();
        assert_eq!(t.vertices(), &vs(&[0, 1, 0, 1])[..]);
        assert_eq!(t.odd_edges(), es(&[1]));
    }
}
