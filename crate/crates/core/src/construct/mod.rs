//! Constructions of normal odd partitions: one partition from a perfect
//! matching, a triple of length-3 partitions on bipartite graphs, and
//! conformal compatible triples on 3-edge-colorable graphs.

mod gadgets;
mod local;
mod reduce;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    is_bipartite, perfect_matchings, proper_3_edge_coloring, Color, CubicGraph, EdgeColoring, PerfectMatching, Slot,
    VertexId,
};
use crate::partition::{are_compatible, Marking, NormalPartition};

pub use gadgets::{digon_extend, triangle_extend, DigonExtension, TriangleExtension};
pub use local::{conformal_triple, conformal_triple_with, ConformalOptions};
pub use reduce::{conformal_triple_general, conformal_triple_general_with, Reduction, ReductionStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("graph has no perfect matching")]
    NoMatching,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not 3-edge-colorable")]
    NotThreeEdgeColorable,
    #[error("orientation does not fit the 2-factor of the matching")]
    BadOrientation,
    #[error("move budget of {budget} spent with {best} disagreeing vertices left")]
    SearchExhausted { budget: u64, best: usize },
    #[error("not a conformal triple: {0}")]
    NotConformalTriple(String),
}

/// A direction on every cycle of the 2-factor `G - M`, stored as the slot of
/// the outgoing edge at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    out: Vec<Slot>,
}

impl Orientation {
    /// Every cycle traversed from its lowest vertex, leaving through the
    /// first of its two 2-factor slots.
    pub fn lowest_first(g: &CubicGraph, m: &PerfectMatching) -> Self {
        Self::build(g, m, |_| false)
    }

    /// Each cycle gets an independent random direction.
    pub fn random<R: Rng>(g: &CubicGraph, m: &PerfectMatching, rng: &mut R) -> Self {
        Self::build(g, m, |_| rng.gen())
    }

    fn build(g: &CubicGraph, m: &PerfectMatching, mut flip: impl FnMut(VertexId) -> bool) -> Self {
        let mut out: Vec<Option<Slot>> = vec![None; g.n()];
        for v0 in g.vertices() {
            if out[v0.index()].is_some() {
                continue;
            }
            let free = free_slots(g, m, v0);
            let mut cur = if flip(v0) { free[1] } else { free[0] };
            let mut v = v0;
            loop {
                out[v.index()] = Some(cur);
                let t = cur.twin();
                v = g.vertex_of(t);
                if v == v0 {
                    break;
                }
                let f = free_slots(g, m, v);
                cur = if f[0] == t { f[1] } else { f[0] };
            }
        }
        Orientation { out: out.into_iter().map(|s| s.expect("2-factor covers every vertex")).collect() }
    }

    /// Accepts an explicit choice of outgoing slots if it orients every
    /// 2-factor cycle consistently.
    pub fn new(g: &CubicGraph, m: &PerfectMatching, out: Vec<Slot>) -> Result<Self, ConstructError> {
        let o = Orientation { out };
        if o.fits(g, m) {
            Ok(o)
        } else {
            Err(ConstructError::BadOrientation)
        }
    }

    pub fn outgoing(&self, v: VertexId) -> Slot {
        self.out[v.index()]
    }

    /// Same orientation with the cycle through `v` reversed.
    pub fn reverse_cycle(&self, g: &CubicGraph, v: VertexId) -> Self {
        let mut out = self.out.clone();
        let mut cur = self.out[v.index()];
        loop {
            let t = cur.twin();
            let w = g.vertex_of(t);
            // w now leaves through the edge it used to enter by
            let next = self.out[w.index()];
            out[w.index()] = t;
            cur = next;
            if w == v {
                break;
            }
        }
        Orientation { out }
    }

    fn fits(&self, g: &CubicGraph, m: &PerfectMatching) -> bool {
        if self.out.len() != g.n() {
            return false;
        }
        let mut incoming = vec![0u8; g.n()];
        for v in g.vertices() {
            let s = self.out[v.index()];
            if s.edge.index() >= g.m() || g.vertex_of(s) != v || m.contains(s.edge) {
                return false;
            }
            incoming[g.vertex_of(s.twin()).index()] += 1;
        }
        // one way in and one way out, and the way in is not the way out
        incoming.iter().all(|&c| c == 1)
            && g.vertices().all(|v| {
                let s = self.out[v.index()];
                let w = g.vertex_of(s.twin());
                self.out[w.index()] != s.twin()
            })
    }
}

fn free_slots(g: &CubicGraph, m: &PerfectMatching, v: VertexId) -> [Slot; 2] {
    let mut it = g.slots(v).into_iter().filter(|s| !m.contains(s.edge));
    [it.next().unwrap(), it.next().unwrap()]
}

/// Glues each matching edge `uv` to the outgoing 2-factor edges at `u` and
/// `v`. Every vertex ends the trail of its incoming 2-factor edge, so the
/// marking is the slot of that edge.
pub fn nop_from_matching(
    g: &CubicGraph,
    m: &PerfectMatching,
    orientation: Option<&Orientation>,
) -> Result<NormalPartition, ConstructError> {
    let own;
    let o = match orientation {
        Some(o) => {
            if !o.fits(g, m) {
                return Err(ConstructError::BadOrientation);
            }
            o
        }
        None => {
            own = Orientation::lowest_first(g, m);
            &own
        }
    };
    let mut marks = vec![Slot::new(m.edges()[0], 0); g.n()];
    for v in g.vertices() {
        let t = o.outgoing(v).twin();
        marks[g.vertex_of(t).index()] = t;
    }
    let marking = Marking::new(g, marks).expect("incoming slots sit at their vertices");
    Ok(NormalPartition::from_marking(g, marking).expect("length-3 trails never close"))
}

/// [`nop_from_matching`] on the first perfect matching found.
pub fn nop_any(g: &CubicGraph) -> Result<NormalPartition, ConstructError> {
    let m = perfect_matchings(g).next().ok_or(ConstructError::NoMatching)?;
    nop_from_matching(g, &m, None)
}

/// Three normal odd partitions, the one at index `c` conformal to color
/// class `c` of `coloring`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalTriple {
    partitions: [NormalPartition; 3],
    coloring: EdgeColoring,
}

impl ConformalTriple {
    /// Checks oddness, conformality and pairwise compatibility.
    pub fn new(
        g: &CubicGraph,
        partitions: [NormalPartition; 3],
        coloring: EdgeColoring,
    ) -> Result<Self, ConstructError> {
        let t = ConformalTriple { partitions, coloring };
        t.check(g)?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(partitions: [NormalPartition; 3], coloring: EdgeColoring) -> Self {
        ConformalTriple { partitions, coloring }
    }

    pub fn get(&self, c: Color) -> &NormalPartition {
        &self.partitions[c.index()]
    }

    pub fn red(&self) -> &NormalPartition {
        self.get(Color::Red)
    }

    pub fn blue(&self) -> &NormalPartition {
        self.get(Color::Blue)
    }

    pub fn yellow(&self) -> &NormalPartition {
        self.get(Color::Yellow)
    }

    pub fn partitions(&self) -> [&NormalPartition; 3] {
        [&self.partitions[0], &self.partitions[1], &self.partitions[2]]
    }

    pub fn into_partitions(self) -> [NormalPartition; 3] {
        self.partitions
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn check(&self, g: &CubicGraph) -> Result<(), ConstructError> {
        let bad = |s: String| Err(ConstructError::NotConformalTriple(s));
        for c in Color::ALL {
            let p = self.get(c);
            if !p.is_conformal(&self.coloring.class(c)) {
                return bad(format!("{c} partition is not conformal to its color class"));
            }
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !are_compatible(&self.partitions[i], &self.partitions[j]) {
                return bad(format!(
                    "{} and {} partitions agree somewhere",
                    Color::from_index(i),
                    Color::from_index(j)
                ));
            }
        }
        debug_assert!(self.partitions.iter().all(|p| p.trails().len() * 2 == g.n()));
        Ok(())
    }
}

/// Triple of length-3 partitions on a bipartite graph.
///
/// With one side drawn as bullets and the other as circles, the partition
/// conformal to color `b` consists of the trails `a`-`b`-`c` whose middle
/// `b` edge has its bullet end on the `a` edge, where `a` and `c` are the
/// colors before and after `b` in the cyclic order red, blue, yellow.
/// Bullets therefore mark their `c` edge and circles their `a` edge.
pub fn bipartite_triple(g: &CubicGraph) -> Result<ConformalTriple, ConstructError> {
    let side = is_bipartite(g).ok_or(ConstructError::NotBipartite)?;
    let coloring = proper_3_edge_coloring(g).expect("bipartite cubic graphs are 3-edge-colorable");
    let partitions = Color::ALL.map(|b| {
        let before = Color::from_index((b.index() + 2) % 3);
        let after = Color::from_index((b.index() + 1) % 3);
        let marks: Vec<Slot> = g
            .vertices()
            .map(|v| {
                let want = if side[v.index()] { before } else { after };
                let e = coloring.edge_at(g, v, want);
                g.slot_at(e, v).unwrap()
            })
            .collect();
        let marking = Marking::new(g, marks).expect("slots at their vertices");
        NormalPartition::from_marking(g, marking).expect("length-3 trails never close")
    });
    Ok(ConformalTriple::new_unchecked(partitions, coloring))
}

/// How a conformal triple was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionPath {
    /// the matching seeds were already compatible
    Seeded,
    /// case moves taken from the minimality argument
    ProofGuided,
    /// randomized conformal walk
    RandomWalk,
    /// backtracking over the two compatible rotations per vertex
    Exhaustive,
    /// tiny graph solved directly by search
    BaseCase,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;
    use crate::partition::validate_normal;

    #[test]
    fn petersen_matchings_give_length_three() {
        let g = generators::petersen();
        for m in perfect_matchings(&g) {
            let p = nop_from_matching(&g, &m, None).unwrap();
            assert_eq!(p.trails().len(), 5);
            assert!(p.trails().iter().all(|t| t.len() == 3));
            assert!(p.trails().iter().all(|t| m.contains(t.edges()[1])));
            assert!(p.is_conformal(&m));
            assert_eq!(p.associated_matching().unwrap(), m);
        }
    }

    #[test]
    fn theta_single_trail() {
        let g = generators::theta();
        let m = PerfectMatching::new(&g, vec![crate::graph::EdgeId(1)]).unwrap();
        let p = nop_from_matching(&g, &m, None).unwrap();
        assert_eq!(p.trails().len(), 1);
        assert_eq!(p.trails()[0].len(), 3);
    }

    #[test]
    fn reversing_a_cycle_changes_the_partition() {
        let g = generators::cube();
        for m in perfect_matchings(&g) {
            let o = Orientation::lowest_first(&g, &m);
            let r = o.reverse_cycle(&g, VertexId(0));
            assert_ne!(o, r);
            let p = nop_from_matching(&g, &m, Some(&o)).unwrap();
            let q = nop_from_matching(&g, &m, Some(&r)).unwrap();
            assert_ne!(p, q);
            assert!(q.is_conformal(&m));
            assert_eq!(r.reverse_cycle(&g, VertexId(0)), o);
        }
    }

    #[test]
    fn loop_in_the_two_factor() {
        let g = CubicGraph::new(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let m = PerfectMatching::new(&g, vec![crate::graph::EdgeId(1)]).unwrap();
        let p = nop_from_matching(&g, &m, None).unwrap();
        assert_eq!(p.trails()[0].len(), 3);
        assert!(p.is_conformal(&m));
    }

    #[test]
    fn bad_orientation_rejected() {
        let g = generators::k4();
        let m = perfect_matchings(&g).next().unwrap();
        let o = Orientation::lowest_first(&g, &m);
        let mut out = o.out.clone();
        out[0] = out[0].twin();
        assert_eq!(Orientation::new(&g, &m, out), Err(ConstructError::BadOrientation));
    }

    #[test]
    fn bipartite_triples() {
        for (g, trails) in [(generators::k33(), 3), (generators::cube(), 4)] {
            let t = bipartite_triple(&g).unwrap();
            t.check(&g).unwrap();
            for p in t.partitions() {
                assert_eq!(p.trails().len(), trails);
                assert!(p.trails().iter().all(|tr| tr.len() == 3));
                assert!(validate_normal(&g, p.trails().to_vec()).is_ok());
            }
            // every edge is internal in exactly one partition
            for e in g.edges() {
                let internal = t.partitions().iter().filter(|p| !p.is_end_edge(e)).count();
                assert_eq!(internal, 1);
            }
        }
        assert_eq!(bipartite_triple(&generators::k4()), Err(ConstructError::NotBipartite));
    }
}
