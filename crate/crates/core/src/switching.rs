//! Switching: moving the marked edge of one vertex onto one of its passage
//! slots, and reachability under plain, odd and conformal switches.
//!
//! With trails on `x ... v ... y` through `v` and `T_j` ending at `v`,
//! choosing `x` glues `T_i(x, v)` onto `T_j` and leaves `T_i(y, v)` as a
//! trail. In marking terms the new mark at `v` is the passage slot on the
//! `y` side. When `T_j = T_i` the branch towards `v` itself would close a
//! cycle and is rejected.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::graph::{CubicGraph, PerfectMatching, Slot, VertexId};
use crate::partition::{Marking, NormalPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error("{x} is not an end of the trail through {v} other than {v}")]
    BadBranch { v: VertexId, x: VertexId },
    #[error("input partition is not conformal to the matching")]
    NotConformalInput,
    #[error("no conformal switch at {v}")]
    NotAllowed { v: VertexId },
    #[error("class exploration exceeded {cap} partitions")]
    CapExceeded { cap: usize },
}

/// The trail passing through `v`: (trail index, vertex position of `v`).
fn passage_position(g: &CubicGraph, p: &NormalPartition, v: VertexId) -> (usize, usize) {
    let [a, _] = p.internal_passage(g, v);
    let (ti, pos) = p.place(a.edge);
    let t = &p.trails()[ti];
    let pass = p.internal_passage(g, v);
    for k in [pos, pos + 1] {
        if k == 0 || k >= t.len() || t.vertices()[k] != v {
            continue;
        }
        let enter = t.edge_slots(g, k - 1).1;
        let leave = t.edge_slots(g, k).0;
        if (enter == pass[0] && leave == pass[1]) || (enter == pass[1] && leave == pass[0]) {
            return (ti, k);
        }
    }
    unreachable!("passage of {v} not found on its trail")
}

/// Ends of the trail through `v`, each with the mark `v` takes if that end
/// plays the role of `x`.
pub fn branches(g: &CubicGraph, p: &NormalPartition, v: VertexId) -> [(VertexId, Slot); 2] {
    let (ti, k) = passage_position(g, p, v);
    let t = &p.trails()[ti];
    let toward_start = t.edge_slots(g, k - 1).1;
    let toward_end = t.edge_slots(g, k).0;
    [(t.start(), toward_end), (t.end(), toward_start)]
}

/// Switch of `p` on `v` with `x` the chosen end of the trail through `v`.
///
/// When the trail runs through a loop at `v` and the new mark is the
/// other end of that loop, the result equals `p`.
pub fn switch(g: &CubicGraph, p: &NormalPartition, v: VertexId, x: VertexId) -> Result<NormalPartition, SwitchError> {
    if x == v {
        return Err(SwitchError::BadBranch { v, x });
    }
    let [(a, sa), (b, sb)] = branches(g, p, v);
    let new_mark = if x == a {
        sa
    } else if x == b {
        sb
    } else {
        return Err(SwitchError::BadBranch { v, x });
    };
    let m = p.marking().with(g, v, new_mark);
    Ok(NormalPartition::from_marking(g, m).expect("a switch never closes a cycle"))
}

/// Every valid switch of `p` on `v`, one per admissible branch.
pub fn switch_candidates(g: &CubicGraph, p: &NormalPartition, v: VertexId) -> Vec<(VertexId, NormalPartition)> {
    branches(g, p, v)
        .into_iter()
        .filter(|(x, _)| *x != v)
        .map(|(x, _)| (x, switch(g, p, v, x).expect("branch checked")))
        .collect()
}

/// Switches on `v` whose result is odd.
pub fn odd_switches(g: &CubicGraph, p: &NormalPartition, v: VertexId) -> Vec<NormalPartition> {
    switch_candidates(g, p, v).into_iter().map(|(_, q)| q).filter(|q| q.is_odd()).collect()
}

/// The switch on `v` keeping the partition odd with odd edges `m`.
///
/// A conformal partition never marks an edge of `m`, so the only candidate
/// moves the mark to the other slot outside `m`; it is refused when that
/// closes a cycle, which happens exactly when `v` ends the trail that
/// passes through it on the wrong side.
pub fn conformal_switch(
    g: &CubicGraph,
    p: &NormalPartition,
    m: &PerfectMatching,
    v: VertexId,
) -> Result<NormalPartition, SwitchError> {
    if !p.is_conformal(m) {
        return Err(SwitchError::NotConformalInput);
    }
    let hits: Vec<NormalPartition> =
        switch_candidates(g, p, v).into_iter().map(|(_, q)| q).filter(|q| q.is_conformal(m)).collect();
    if hits.len() > 1 {
        log::warn!("two conformal switch candidates at {v}");
    }
    hits.into_iter().next().ok_or(SwitchError::NotAllowed { v })
}

/// Which switches count as moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Plain,
    Odd,
    Conformal(PerfectMatching),
}

impl MoveKind {
    /// Whether a marking is a node of the move graph. Plain and odd moves
    /// need the respective partition; conformal nodes are the acyclic
    /// markings that avoid the matching, since then every trail alternates
    /// between matching and non-matching edges and starts and ends outside
    /// the matching.
    pub fn admits(&self, g: &CubicGraph, m: &Marking) -> bool {
        match self {
            MoveKind::Plain => m.is_acyclic(g),
            MoveKind::Odd => m.trail_lengths(g).is_some_and(|ls| ls.iter().all(|l| l % 2 == 1)),
            MoveKind::Conformal(pm) => m.slots().iter().all(|s| !pm.contains(s.edge)) && m.is_acyclic(g),
        }
    }
}

/// Markings reachable in one move of the given kind.
pub fn neighbors(g: &CubicGraph, m: &Marking, kind: &MoveKind) -> Vec<Marking> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for s in m.passage(g, v) {
            let next = m.with(g, v, s);
            if next != *m && kind.admits(g, &next) && !out.contains(&next) {
                out.push(next);
            }
        }
    }
    out
}

/// Every partition of the given kind, as markings in lexicographic order.
pub fn all_markings(g: &CubicGraph, kind: &MoveKind, cap: usize) -> Result<Vec<Marking>, SwitchError> {
    let choices: Vec<Vec<Slot>> = g
        .vertices()
        .map(|v| {
            let mut c: Vec<Slot> = g.slots(v).to_vec();
            // both ends of a loop name the same mark
            c.retain(|s| !(g.is_loop(s.edge) && s.end == 0));
            if let MoveKind::Conformal(pm) = kind {
                c.retain(|s| !pm.contains(s.edge));
            }
            c
        })
        .collect();
    let mut out = Vec::new();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    let mut idx = vec![0usize; g.n()];
    loop {
        let slots: Vec<Slot> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let m = Marking::new(g, slots).expect("slots chosen at their vertices");
        if kind.admits(g, &m) {
            if out.len() == cap {
                return Err(SwitchError::CapExceeded { cap });
            }
            out.push(m);
        }
        let mut k = g.n();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Size and diameter of one switching class.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ClassSummary {
    pub size: usize,
    /// longest shortest move sequence between two members
    pub diameter: usize,
}

/// Breadth-first exploration of the class of `start`.
pub fn switch_class(
    g: &CubicGraph,
    start: &NormalPartition,
    kind: &MoveKind,
    cap: usize,
) -> Result<ClassSummary, SwitchError> {
    let mut index: HashMap<Marking, usize> = HashMap::new();
    let mut nodes = vec![start.marking().clone()];
    index.insert(start.marking().clone(), 0);
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let mut row = Vec::new();
        for nb in neighbors(g, &nodes[i], kind) {
            let j = match index.get(&nb) {
                Some(&j) => j,
                None => {
                    if nodes.len() == cap {
                        return Err(SwitchError::CapExceeded { cap });
                    }
                    index.insert(nb.clone(), nodes.len());
                    nodes.push(nb);
                    nodes.len() - 1
                }
            };
            row.push(j);
        }
        adj.push(row);
        i += 1;
    }
    let diameter = (0..nodes.len()).map(|s| eccentricity(&adj, s)).max().unwrap_or(0);
    Ok(ClassSummary { size: nodes.len(), diameter })
}

fn eccentricity(adj: &[Vec<usize>], s: usize) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    let mut far = 0;
    while let Some(u) = q.pop_front() {
        far = far.max(dist[u]);
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    far
}

/// Splits `nodes` into classes under moves of `kind`; each class is a list
/// of indices into `nodes`, classes ordered by their smallest member.
pub fn classes(g: &CubicGraph, nodes: &[Marking], kind: &MoveKind) -> Vec<Vec<usize>> {
    let index: HashMap<&Marking, usize> = nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut comp = vec![usize::MAX; nodes.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..nodes.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = out.len();
        comp[s] = c;
        let mut members = vec![s];
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for nb in neighbors(g, &nodes[u], kind) {
                if let Some(&j) = index.get(&nb) {
                    if comp[j] == usize::MAX {
                        comp[j] = c;
                        members.push(j);
                        q.push_back(j);
                    }
                }
            }
        }
        members.sort();
        out.push(members);
    }
    out
}
