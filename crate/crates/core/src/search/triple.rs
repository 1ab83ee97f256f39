//! Backtracking over per-vertex bijections {partition 0, 1, 2} -> slots.
//!
//! Three pairwise compatible partitions mark three distinct edges at every
//! vertex, so a vertex with three distinct incident edges is assigned one
//! of six bijections and a vertex with a loop admits none. Each partition
//! keeps a union-find over slots with rollback: edges pre-join their two
//! slots, a passage joins the two unmarked slots of a vertex (closing a
//! cycle fails at once), and a component whose two ends are marked is a
//! finished trail whose length is checked immediately.

use crate::graph::{CubicGraph, Slot, VertexId};
use crate::partition::Marking;

/// A vertex assignment: `slots[i]` is the mark of partition `i`.
pub type Bijection = [Slot; 3];

/// The six bijections at `v` in a fixed order (empty at a loop vertex).
pub fn bijections(g: &CubicGraph, v: VertexId) -> Vec<Bijection> {
    let [a, b, c] = g.slots(v);
    if a.edge == b.edge || b.edge == c.edge || a.edge == c.edge {
        return Vec::new();
    }
    vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// every trail of every partition odd
    pub odd: bool,
    /// upper bound on trail length
    pub max_len: Option<usize>,
    /// per-vertex whitelist of bijections; `None` allows all six
    pub allowed: Option<Vec<Vec<Bijection>>>,
    /// stop after this many search nodes
    pub node_limit: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { odd: true, max_len: None, allowed: None, node_limit: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// the whole space was explored
    Complete,
    /// the visitor asked to stop
    Stopped,
    /// node limit reached
    LimitReached,
}

/// Union-find over slots with an undo log.
pub(crate) struct Forest {
    parent: Vec<u32>,
    size: Vec<u32>,
    len: Vec<u32>,
    marks: Vec<u8>,
    /// bitmask of port labels carried by a component
    tags: Vec<u32>,
    log: Vec<Undo>,
}

enum Undo {
    Union { child: u32, root: u32, len: u32, tags: u32 },
    Mark { root: u32 },
}

impl Forest {
    pub(crate) fn new(g: &CubicGraph) -> Self {
        let n = 2 * g.m();
        let mut f = Forest {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            len: vec![0; n],
            marks: vec![0; n],
            tags: vec![0; n],
            log: Vec::new(),
        };
        for e in g.edges() {
            let (a, b) = (2 * e.index(), 2 * e.index() + 1);
            f.parent[b] = a as u32;
            f.size[a] = 2;
            f.len[a] = 1;
        }
        f
    }

    pub(crate) fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Joins two slots through a passage; false if they already share a trail.
    pub(crate) fn join(&mut self, a: Slot, b: Slot) -> Option<u32> {
        let (mut ra, mut rb) = (self.find(a.index() as u32), self.find(b.index() as u32));
        if ra == rb {
            return None;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.log.push(Undo::Union { child: rb, root: ra, len: self.len[ra as usize], tags: self.tags[ra as usize] });
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.len[ra as usize] += self.len[rb as usize];
        self.marks[ra as usize] += self.marks[rb as usize];
        self.tags[ra as usize] |= self.tags[rb as usize];
        Some(ra)
    }

    pub(crate) fn mark(&mut self, s: Slot) -> u32 {
        let r = self.find(s.index() as u32);
        self.log.push(Undo::Mark { root: r });
        self.marks[r as usize] += 1;
        r
    }

    /// Labels the component of `s` before any passage is joined.
    pub(crate) fn tag(&mut self, s: Slot, bit: u32) {
        let r = self.find(s.index() as u32);
        self.tags[r as usize] |= 1 << bit;
    }

    pub(crate) fn tags(&self, r: u32) -> u32 {
        self.tags[r as usize]
    }

    pub(crate) fn depth(&self) -> usize {
        self.log.len()
    }

    /// (edges, marked ends) of the component with root `r`.
    pub(crate) fn info(&self, r: u32) -> (u32, u8) {
        (self.len[r as usize], self.marks[r as usize])
    }

    pub(crate) fn undo_to(&mut self, depth: usize) {
        while self.log.len() > depth {
            match self.log.pop().unwrap() {
                Undo::Union { child, root, len, tags } => {
                    self.parent[child as usize] = child;
                    self.tags[root as usize] = tags;
                    self.size[root as usize] -= self.size[child as usize];
                    self.len[root as usize] = len;
                    self.marks[root as usize] -= self.marks[child as usize];
                }
                Undo::Mark { root } => self.marks[root as usize] -= 1,
            }
        }
    }
}

/// Exhaustive triple search with a visitor over complete assignments.
pub struct TripleSearch<'g> {
    g: &'g CubicGraph,
    opts: SearchOptions,
    forests: [Forest; 3],
    assigned: Vec<Option<Bijection>>,
    options: Vec<Vec<Bijection>>,
    nodes: u64,
}

impl<'g> TripleSearch<'g> {
    pub fn new(g: &'g CubicGraph, opts: SearchOptions) -> Self {
        let options = g
            .vertices()
            .map(|v| {
                let all = bijections(g, v);
                match &opts.allowed {
                    Some(allowed) => all.into_iter().filter(|b| allowed[v.index()].contains(b)).collect(),
                    None => all,
                }
            })
            .collect();
        TripleSearch {
            g,
            opts,
            forests: [Forest::new(g), Forest::new(g), Forest::new(g)],
            assigned: vec![None; g.n()],
            options,
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Open components only need to respect the length bound; finished
    /// ones (two marked ends) also need the right parity.
    fn component_ok(&self, i: usize, r: u32) -> bool {
        let f = &self.forests[i];
        let len = f.len[r as usize];
        if self.opts.max_len.is_some_and(|m| len as usize > m) {
            return false;
        }
        f.marks[r as usize] < 2 || !self.opts.odd || len % 2 == 1
    }

    /// Applies `b` at `v`; on failure everything is rolled back.
    fn apply(&mut self, v: VertexId, b: &Bijection) -> bool {
        let depths = [0, 1, 2].map(|i| self.forests[i].log.len());
        for (i, &mark) in b.iter().enumerate() {
            let [p, q] = self.g.other_slots(v, mark);
            let ok = match self.forests[i].join(p, q) {
                None => false,
                Some(r) => self.component_ok(i, r),
            };
            let ok = ok && {
                let r = self.forests[i].mark(mark);
                self.component_ok(i, r)
            };
            if !ok {
                for (j, d) in depths.iter().enumerate() {
                    self.forests[j].undo_to(*d);
                }
                return false;
            }
        }
        self.assigned[v.index()] = Some(*b);
        true
    }

    fn retract(&mut self, v: VertexId, depths: [usize; 3]) {
        for (j, d) in depths.iter().enumerate() {
            self.forests[j].undo_to(*d);
        }
        self.assigned[v.index()] = None;
    }

    fn depths(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.forests[i].log.len())
    }

    fn valid_options(&mut self, v: VertexId) -> Vec<Bijection> {
        let mut out = Vec::new();
        let opts = self.options[v.index()].clone();
        for b in opts {
            let d = self.depths();
            if self.apply(v, &b) {
                out.push(b);
                self.retract(v, d);
            }
        }
        out
    }

    fn pick(&mut self) -> Option<(VertexId, Vec<Bijection>)> {
        let mut best: Option<(usize, i32, VertexId, Vec<Bijection>)> = None;
        for v in self.g.vertices() {
            if self.assigned[v.index()].is_some() {
                continue;
            }
            let opts = self.valid_options(v);
            let touched = -(self.g.neighbors(v).iter().filter(|w| self.assigned[w.index()].is_some()).count() as i32);
            let key = (opts.len(), touched);
            if best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
                let stop = opts.is_empty();
                best = Some((key.0, key.1, v, opts));
                if stop {
                    break;
                }
            }
        }
        best.map(|(_, _, v, o)| (v, o))
    }

    fn markings(&self) -> [Marking; 3] {
        [0, 1, 2]
            .map(|i| Marking::from_slots_unchecked(self.assigned.iter().map(|b| b.expect("complete")[i]).collect()))
    }

    /// Visits every solution; the visitor returns `false` to stop.
    pub fn run<F: FnMut(&[Marking; 3]) -> bool>(&mut self, mut visit: F) -> Outcome {
        if self.options.iter().any(|o| o.is_empty()) {
            return Outcome::Complete;
        }
        self.recurse(&mut visit)
    }

    fn recurse<F: FnMut(&[Marking; 3]) -> bool>(&mut self, visit: &mut F) -> Outcome {
        self.nodes += 1;
        if self.opts.node_limit.is_some_and(|l| self.nodes > l) {
            return Outcome::LimitReached;
        }
        let Some((v, opts)) = self.pick() else {
            return if visit(&self.markings()) { Outcome::Complete } else { Outcome::Stopped };
        };
        for b in opts {
            let d = self.depths();
            if !self.apply(v, &b) {
                continue;
            }
            let out = self.recurse(visit);
            self.retract(v, d);
            if out != Outcome::Complete {
                return out;
            }
        }
        Outcome::Complete
    }
}

/// First solution, if any, with the given options.
pub fn first_triple(g: &CubicGraph, opts: SearchOptions) -> (Option<[Marking; 3]>, Outcome) {
    let mut found = None;
    let mut s = TripleSearch::new(g, opts);
    let out = s.run(|m| {
        found = Some(m.clone());
        false
    });
    let out = if found.is_some() { Outcome::Complete } else { out };
    (found, out)
}
