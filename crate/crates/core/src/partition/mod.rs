//! Trails, normal partitions and their markings.
//!
//! A normal partition is stored both as its trails and as its [`Marking`]
//! (the end slot at every vertex). The marking determines the trails, so
//! equality and hashing go through the marking, which makes them
//! insensitive to trail orientation and order.

mod audit;
mod marking;
mod trail;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::graph::{CubicGraph, EdgeId, PerfectMatching, Slot, VertexId};

pub use audit::{edge_role_audit, AuditReport, AuditViolation, EdgeRole};
pub use marking::{CycleError, Marking, MarkingError};
pub use trail::{Trail, TrailError};

/// One failed condition of a normal partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("edge {edge} covered {times} times")]
    NotAPartition { edge: EdgeId, times: usize },
    #[error("{vertex} is internal in no trail")]
    VertexNeverInternal { vertex: VertexId },
    #[error("{vertex} is a trail end {count} times")]
    VertexEndCount { vertex: VertexId, count: usize },
    #[error("trail {trail} starts and ends at the same vertex")]
    ClosedTrail { trail: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("partition has an even trail")]
pub struct NotOdd;

#[derive(Clone)]
pub struct NormalPartition {
    trails: Vec<Trail>,
    marking: Marking,
    /// (trail index, 0-based position) of every edge
    place: Vec<(u32, u32)>,
}

impl PartialEq for NormalPartition {
    fn eq(&self, other: &Self) -> bool {
        self.marking == other.marking
    }
}

impl Eq for NormalPartition {}

impl Hash for NormalPartition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.marking.hash(state);
    }
}

impl fmt::Debug for NormalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts: Vec<Vec<u32>> = self.trails.iter().map(|t| t.edges().iter().map(|e| e.0).collect()).collect();
        f.debug_struct("NormalPartition").field("trails", &ts).finish()
    }
}

/// Checks every condition of a normal partition and reports all failures.
pub fn validate_normal(g: &CubicGraph, trails: Vec<Trail>) -> Result<NormalPartition, Vec<Violation>> {
    let mut violations = Vec::new();
    let mut cover = vec![0usize; g.m()];
    for t in &trails {
        for e in t.edges() {
            cover[e.index()] += 1;
        }
    }
    for (i, &c) in cover.iter().enumerate() {
        if c != 1 {
            violations.push(Violation::NotAPartition { edge: EdgeId(i as u32), times: c });
        }
    }
    for (i, t) in trails.iter().enumerate() {
        if t.start() == t.end() {
            violations.push(Violation::ClosedTrail { trail: i });
        }
    }
    let mut ends: Vec<Vec<Slot>> = vec![Vec::new(); g.n()];
    let mut internal = vec![0usize; g.n()];
    for t in &trails {
        let (a, b) = t.end_slots(g);
        ends[t.start().index()].push(a);
        ends[t.end().index()].push(b);
        for &v in &t.vertices()[1..t.len()] {
            internal[v.index()] += 1;
        }
    }
    for v in g.vertices() {
        if internal[v.index()] == 0 {
            violations.push(Violation::VertexNeverInternal { vertex: v });
        }
        if ends[v.index()].len() != 1 {
            violations.push(Violation::VertexEndCount { vertex: v, count: ends[v.index()].len() });
        }
    }
    if !violations.is_empty() {
        return Err(violations);
    }
    let marking = Marking::new(g, ends.iter().map(|e| e[0]).collect()).expect("end slots sit at their vertices");
    Ok(NormalPartition::assemble(g, trails, marking))
}

/// Rebuilds the partition a marking describes.
pub fn trails_from_marking(g: &CubicGraph, marking: &Marking) -> Result<NormalPartition, CycleError> {
    NormalPartition::from_marking(g, marking.clone())
}

impl NormalPartition {
    fn assemble(g: &CubicGraph, trails: Vec<Trail>, marking: Marking) -> Self {
        let mut place = vec![(u32::MAX, u32::MAX); g.m()];
        for (i, t) in trails.iter().enumerate() {
            for (p, e) in t.edges().iter().enumerate() {
                place[e.index()] = (i as u32, p as u32);
            }
        }
        debug_assert_eq!(trails.len() * 2, g.n());
        NormalPartition { trails, marking, place }
    }

    pub fn from_marking(g: &CubicGraph, marking: Marking) -> Result<Self, CycleError> {
        let trails = marking.walk(g)?;
        Ok(Self::assemble(g, trails, marking))
    }

    pub fn trails(&self) -> &[Trail] {
        &self.trails
    }

    pub fn marking(&self) -> &Marking {
        &self.marking
    }

    /// The marked edge at `v`: the end edge of the trail ending there.
    pub fn marked(&self, v: VertexId) -> EdgeId {
        self.marking.edge(v)
    }

    pub fn marked_slot(&self, v: VertexId) -> Slot {
        self.marking.slot(v)
    }

    /// The two slots through which a trail passes `v`.
    pub fn internal_passage(&self, g: &CubicGraph, v: VertexId) -> [Slot; 2] {
        self.marking.passage(g, v)
    }

    /// (trail index, 0-based position) of `e`.
    pub fn place(&self, e: EdgeId) -> (usize, usize) {
        let (t, p) = self.place[e.index()];
        (t as usize, p as usize)
    }

    pub fn trail_of(&self, e: EdgeId) -> &Trail {
        &self.trails[self.place(e).0]
    }

    /// True when `e` is the first or last edge of its trail.
    pub fn is_end_edge(&self, e: EdgeId) -> bool {
        let (t, p) = self.place(e);
        p == 0 || p + 1 == self.trails[t].len()
    }

    pub fn len(&self) -> usize {
        self.trails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trails.is_empty()
    }

    /// Maximum trail length.
    pub fn length(&self) -> usize {
        self.trails.iter().map(Trail::len).max().unwrap_or(0)
    }

    pub fn is_odd(&self) -> bool {
        self.trails.iter().all(Trail::is_odd)
    }

    /// Odd edges of all trails; a perfect matching when the partition is odd.
    pub fn associated_matching(&self) -> Result<PerfectMatching, NotOdd> {
        if !self.is_odd() {
            return Err(NotOdd);
        }
        let mut edges: Vec<EdgeId> = self.trails.iter().flat_map(|t| t.odd_edges()).collect();
        edges.sort();
        Ok(PerfectMatching::from_sorted_unchecked(edges))
    }

    /// Odd and its odd edges are exactly `m`.
    pub fn is_conformal(&self, m: &PerfectMatching) -> bool {
        self.associated_matching().is_ok_and(|a| &a == m)
    }

    /// Copy with every trail oriented from its smaller end slot, trails
    /// sorted by that slot.
    pub fn canonical(&self, g: &CubicGraph) -> NormalPartition {
        NormalPartition::from_marking(g, self.marking.clone()).expect("a valid marking stays acyclic")
    }

    pub fn stats(&self) -> PartitionStats {
        let mut n_of = BTreeMap::new();
        let mut total = 0;
        for t in &self.trails {
            *n_of.entry(t.len()).or_insert(0) += 1;
            total += t.len();
        }
        PartitionStats { total_length: total, trails: self.trails.len(), n_of, max_length: self.length() }
    }
}

/// Trail-length distribution of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    pub total_length: usize,
    pub trails: usize,
    /// number of trails of each length
    pub n_of: BTreeMap<usize, usize>,
    pub max_length: usize,
}

impl PartitionStats {
    /// Average trail length as a reduced fraction.
    pub fn mu(&self) -> (usize, usize) {
        let g = gcd(self.total_length, self.trails.max(1));
        (self.total_length / g, self.trails.max(1) / g)
    }

    /// sum over lengths i of (3 - i) * n(i); zero for every normal partition.
    pub fn balance(&self) -> i64 {
        self.n_of.iter().map(|(&i, &c)| (3 - i as i64) * c as i64).sum()
    }

    /// Lengths sorted descending, one entry per trail.
    pub fn profile(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.n_of.iter().rev().flat_map(|(&l, &c)| std::iter::repeat_n(l, c)).collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Vertices where the two partitions mark the same edge.
pub fn compatibility_set(p: &NormalPartition, q: &NormalPartition) -> Vec<VertexId> {
    p.marking
        .slots()
        .iter()
        .zip(q.marking.slots())
        .enumerate()
        .filter(|(_, (a, b))| a.edge == b.edge)
        .map(|(i, _)| VertexId(i as u32))
        .collect()
}

/// Union of the three pairwise agreement sets, sorted.
pub fn triple_set(p: &NormalPartition, q: &NormalPartition, r: &NormalPartition) -> Vec<VertexId> {
    let mut out = Vec::new();
    for i in 0..p.marking.len() {
        let v = VertexId(i as u32);
        let (a, b, c) = (p.marked(v), q.marked(v), r.marked(v));
        if a == b || b == c || a == c {
            out.push(v);
        }
    }
    out
}

pub fn are_compatible(p: &NormalPartition, q: &NormalPartition) -> bool {
    compatibility_set(p, q).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn es(x: &[u32]) -> Vec<EdgeId> {
        x.iter().map(|&e| EdgeId(e)).collect()
    }

    #[test]
    fn theta_single_trail() {
        let g = generators::theta();
        let t = Trail::from_edges(&g, VertexId(0), es(&[0, 1, 2])).unwrap();
        let p = validate_normal(&g, vec![t]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.marked(VertexId(0)), EdgeId(0));
        assert_eq!(p.marked(VertexId(1)), EdgeId(2));
        assert!(p.is_odd());
        assert_eq!(p.associated_matching().unwrap().edges(), &es(&[1])[..]);
    }

    #[test]
    fn double_cover_reported() {
        let g = generators::k4();
        // 0-1-2-3 (edges 0,3,5) and 3-2-1-0 reusing 5 (edges 5,3,0): both trails share edges
        let a = Trail::from_edges(&g, VertexId(0), es(&[0, 3, 5])).unwrap();
        let b = Trail::from_edges(&g, VertexId(0), es(&[2, 5, 1])).unwrap();
        let errs = validate_normal(&g, vec![a, b]).unwrap_err();
        assert!(errs.contains(&Violation::NotAPartition { edge: EdgeId(5), times: 2 }));
        assert!(errs.contains(&Violation::NotAPartition { edge: EdgeId(4), times: 0 }));
    }

    #[test]
    fn marking_roundtrip_small() {
        let g = generators::k4();
        let a = Trail::from_edges(&g, VertexId(0), es(&[0, 3, 5])).unwrap();
        let b = Trail::from_edges(&g, VertexId(1), es(&[4, 2, 1])).unwrap();
        let p = validate_normal(&g, vec![a, b]).unwrap();
        let q = trails_from_marking(&g, p.marking()).unwrap();
        assert_eq!(p, q);
        assert_eq!(compatibility_set(&p, &q).len(), 4);
    }

    #[test]
    fn stats_identity() {
        let g = generators::k4();
        let a = Trail::from_edges(&g, VertexId(0), es(&[0, 3, 5])).unwrap();
        let b = Trail::from_edges(&g, VertexId(1), es(&[4, 2, 1])).unwrap();
        let s = validate_normal(&g, vec![a, b]).unwrap().stats();
        assert_eq!(s.mu(), (3, 1));
        assert_eq!(s.balance(), 0);
        assert_eq!(s.n_of.get(&3), Some(&2));
    }
}
