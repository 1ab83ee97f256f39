//! Local search for a conformal compatible triple on a colored graph.
//!
//! Each color keeps a marking that avoids its own color class and closes no
//! cycle, which is exactly a partition conformal to that class. The only
//! move is the conformal switch: at `v` the mark jumps to the other edge
//! outside the class. A vertex is bad when two partitions mark the same
//! edge there; the goal is no bad vertex.
//!
//! At a bad vertex `v` two colors `c1`, `c2` share the mark `vw` of the
//! third color `c3`, and the `c3` partition marks one of the other two
//! edges, whose color is taken as `c1`. Around that frame the case moves
//! of the minimality argument are tried in order; a sequence is kept when
//! every step is a legal switch and the number of bad vertices drops.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Color, CubicGraph, EdgeColoring, Slot, VertexId};
use crate::partition::{Marking, NormalPartition};
use crate::search::triple::{first_triple, SearchOptions};

use super::{nop_from_matching, ConformalTriple, ConstructError, ConstructionPath, Orientation};

#[derive(Clone, Debug)]
pub struct ConformalOptions {
    pub seed: u64,
    /// attempted switches before giving up
    pub budget: u64,
    /// after the budget, settle the question by backtracking over the two
    /// compatible rotations at every vertex
    pub exhaustive_fallback: bool,
}

impl Default for ConformalOptions {
    fn default() -> Self {
        ConformalOptions { seed: 0, budget: 1_000_000, exhaustive_fallback: true }
    }
}

/// Conformal compatible triple for `coloring` with default options.
pub fn conformal_triple(g: &CubicGraph, coloring: &EdgeColoring) -> Result<ConformalTriple, ConstructError> {
    conformal_triple_with(g, coloring, &ConformalOptions::default()).map(|(t, _)| t)
}

pub fn conformal_triple_with(
    g: &CubicGraph,
    coloring: &EdgeColoring,
    opts: &ConformalOptions,
) -> Result<(ConformalTriple, ConstructionPath), ConstructError> {
    if g.has_loop() {
        return Err(ConstructError::NotThreeEdgeColorable);
    }
    let mut st = State::seeded::<ChaCha8Rng>(g, coloring, None);
    let mut path = ConstructionPath::Seeded;
    if st.bad_count() > 0 {
        path = ConstructionPath::ProofGuided;
        st.guided();
    }
    if st.bad_count() > 0 {
        path = ConstructionPath::RandomWalk;
        st.walk(opts);
    }
    if st.bad_count() > 0 {
        let best = st.bad_count();
        log::info!("local search left {best} bad vertices after {} switches", st.moves);
        if !opts.exhaustive_fallback {
            return Err(ConstructError::SearchExhausted { budget: opts.budget, best });
        }
        path = ConstructionPath::Exhaustive;
        st.marks = rotations(g, coloring).ok_or(ConstructError::SearchExhausted { budget: opts.budget, best })?;
    }
    log::debug!("conformal triple via {path:?} after {} switches", st.moves);
    let partitions = st.marks.map(|m| NormalPartition::from_marking(g, m).expect("search keeps markings acyclic"));
    Ok((ConformalTriple::new_unchecked(partitions, coloring.clone()), path))
}

struct State<'a> {
    g: &'a CubicGraph,
    col: &'a EdgeColoring,
    marks: [Marking; 3],
    moves: u64,
}

/// Improvement sequences around one bad vertex, as (color role, vertex).
#[derive(Clone, Copy)]
enum Role {
    C1,
    C2,
    C3,
}

impl<'a> State<'a> {
    fn seeded<R: Rng>(g: &'a CubicGraph, col: &'a EdgeColoring, mut rng: Option<&mut R>) -> Self {
        let marks = Color::ALL.map(|c| {
            let m = col.class(c);
            let o = match rng.as_deref_mut() {
                Some(r) => Orientation::random(g, &m, r),
                None => Orientation::lowest_first(g, &m),
            };
            nop_from_matching(g, &m, Some(&o)).expect("fits by construction").marking().clone()
        });
        State { g, col, marks, moves: 0 }
    }

    fn is_bad(&self, v: VertexId) -> bool {
        let [a, b, c] = [0, 1, 2].map(|i| self.marks[i].edge(v));
        a == b || b == c || a == c
    }

    fn bad(&self) -> Vec<VertexId> {
        self.g.vertices().filter(|&v| self.is_bad(v)).collect()
    }

    fn bad_count(&self) -> usize {
        self.g.vertices().filter(|&v| self.is_bad(v)).count()
    }

    fn mark_color(&self, c: Color, v: VertexId) -> Color {
        self.col.color(self.marks[c.index()].edge(v))
    }

    fn slot_of(&self, v: VertexId, c: Color) -> Slot {
        self.g.slot_at(self.col.edge_at(self.g, v, c), v).unwrap()
    }

    /// Conformal switch of partition `c` at `v`; false (and no change) if
    /// it would close a cycle.
    fn flip(&mut self, c: Color, v: VertexId) -> bool {
        self.moves += 1;
        let cur = self.mark_color(c, v);
        let other = Color::ALL.into_iter().find(|&x| x != c && x != cur).unwrap();
        let old = self.marks[c.index()].slot(v);
        let new = self.slot_of(v, other);
        self.marks[c.index()].set(self.g, v, new);
        if self.marks[c.index()].is_acyclic(self.g) {
            true
        } else {
            self.marks[c.index()].set(self.g, v, old);
            false
        }
    }

    fn unflip(&mut self, c: Color, v: VertexId) {
        let cur = self.mark_color(c, v);
        let other = Color::ALL.into_iter().find(|&x| x != c && x != cur).unwrap();
        let s = self.slot_of(v, other);
        self.marks[c.index()].set(self.g, v, s);
    }

    /// Applies all switches or none.
    fn apply(&mut self, seq: &[(Color, VertexId)]) -> bool {
        for (k, &(c, v)) in seq.iter().enumerate() {
            if !self.flip(c, v) {
                for &(c, v) in seq[..k].iter().rev() {
                    self.unflip(c, v);
                }
                return false;
            }
        }
        true
    }

    fn revert(&mut self, seq: &[(Color, VertexId)]) {
        for &(c, v) in seq.iter().rev() {
            self.unflip(c, v);
        }
    }

    fn sequences(&self, v: VertexId) -> Vec<Vec<(Color, VertexId)>> {
        let m = [0, 1, 2].map(|i| self.mark_color(Color::from_index(i), v));
        let Some((c1_c2, c3)) =
            [(0, 1), (0, 2), (1, 2)].into_iter().find(|&(i, j)| m[i] == m[j]).map(|(i, j)| ((i, j), m[i]))
        else {
            return Vec::new();
        };
        let (i, j) = c1_c2;
        let (ci, cj) = (Color::from_index(i), Color::from_index(j));
        // the third partition marks one of the shared pair's colors: that is c1
        let c1 = self.mark_color(c3, v);
        let c2 = if c1 == ci { cj } else { ci };
        let g = self.g;
        let across = |x: VertexId, c: Color| g.opposite(self.col.edge_at(g, x, c), x);
        let v1 = across(v, c1);
        let w = across(v, c3);
        let w2 = across(w, c2);
        let role = |r: Role| match r {
            Role::C1 => c1,
            Role::C2 => c2,
            Role::C3 => c3,
        };
        use Role::*;
        let raw: Vec<Vec<(Role, VertexId)>> = vec![
            vec![(C1, v)],
            vec![(C1, w), (C1, v)],
            vec![(C2, v), (C3, v)],
            vec![(C2, w), (C3, w), (C1, w), (C1, v)],
            vec![(C2, w), (C3, w), (C1, v1), (C1, w), (C1, v), (C1, v1)],
            vec![(C2, v), (C3, w2), (C3, v)],
        ];
        raw.into_iter().map(|s| s.into_iter().map(|(r, x)| (role(r), x)).collect()).collect()
    }

    /// Relocation move of the endgame: the bad vertex moves to `w`.
    fn relocation(&self, v: VertexId) -> Option<Vec<(Color, VertexId)>> {
        let seqs = self.sequences(v);
        let (c1, w) = *seqs.get(1)?.first()?;
        let c2 = seqs.get(2)?.first()?.0;
        Some(vec![(c1, w), (c1, v), (c2, w)])
    }

    /// Case moves until none applies.
    fn guided(&mut self) {
        let mut relocations = 0;
        let limit = 4 * self.g.n();
        loop {
            let before = self.bad_count();
            if before == 0 {
                return;
            }
            let mut improved = false;
            'outer: for v in self.bad() {
                for seq in self.sequences(v) {
                    if self.apply(&seq) {
                        if self.bad_count() < before {
                            improved = true;
                            break 'outer;
                        }
                        self.revert(&seq);
                    }
                }
            }
            if improved {
                continue;
            }
            if relocations >= limit {
                return;
            }
            let mut moved = false;
            for v in self.bad() {
                if let Some(seq) = self.relocation(v) {
                    if self.apply(&seq) {
                        if self.bad_count() <= before {
                            moved = true;
                            break;
                        }
                        self.revert(&seq);
                    }
                }
            }
            if !moved {
                return;
            }
            relocations += 1;
        }
    }

    /// Randomized walk with restarts from fresh random orientations; keeps
    /// the best state seen.
    fn walk(&mut self, opts: &ConformalOptions) {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut best = (self.bad_count(), self.marks.clone());
        let mut stale = 0u64;
        let restart_after = 200 * self.g.n() as u64;
        while self.moves < opts.budget {
            let bad = self.bad();
            if bad.is_empty() {
                return;
            }
            let before = bad.len();
            let &v0 = bad.choose(&mut rng).unwrap();
            // the bad vertex itself or one of its neighbors
            let v = if rng.gen_bool(0.5) { v0 } else { *self.g.neighbors(v0).choose(&mut rng).unwrap() };
            let c = Color::from_index(rng.gen_range(0..3));
            if self.flip(c, v) {
                let after = self.bad_count();
                if after > before && !rng.gen_bool(0.1) {
                    self.unflip(c, v);
                } else if after < best.0 {
                    best = (after, self.marks.clone());
                    stale = 0;
                    if after == 0 {
                        return;
                    }
                    self.guided();
                    if self.bad_count() < best.0 {
                        best = (self.bad_count(), self.marks.clone());
                    }
                }
            }
            stale += 1;
            if stale > restart_after {
                stale = 0;
                let fresh = State::seeded(self.g, self.col, Some(&mut rng));
                self.marks = fresh.marks;
                self.guided();
                if self.bad_count() < best.0 {
                    best = (self.bad_count(), self.marks.clone());
                }
            }
        }
        self.marks = best.1;
    }
}

/// Backtracking over the two rotations (red, blue, yellow) -> (blue,
/// yellow, red) or (yellow, red, blue) of mark colors at every vertex.
pub(super) fn rotations(g: &CubicGraph, col: &EdgeColoring) -> Option<[Marking; 3]> {
    let slot = |v: VertexId, c: Color| g.slot_at(col.edge_at(g, v, c), v).unwrap();
    let allowed = g
        .vertices()
        .map(|v| {
            let (r, b, y) = (slot(v, Color::Red), slot(v, Color::Blue), slot(v, Color::Yellow));
            vec![[b, y, r], [y, r, b]]
        })
        .collect();
    let opts = SearchOptions { odd: true, max_len: None, allowed: Some(allowed), node_limit: None };
    first_triple(g, opts).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generators, proper_3_edge_coloring};

    fn run(g: &CubicGraph) -> ConstructionPath {
        let col = proper_3_edge_coloring(g).unwrap();
        let (t, path) = conformal_triple_with(g, &col, &ConformalOptions::default()).unwrap();
        t.check(g).unwrap();
        path
    }

    #[test]
    fn small_colorable_graphs() {
        for g in [generators::cube(), generators::k33(), generators::k4(), generators::prism(), generators::theta()] {
            run(&g);
        }
    }

    #[test]
    fn walk_alone_reaches_zero_on_the_cube() {
        let g = generators::cube();
        let col = proper_3_edge_coloring(&g).unwrap();
        let opts = ConformalOptions { seed: 7, budget: 1_000_000, exhaustive_fallback: false };
        let (t, _) = conformal_triple_with(&g, &col, &opts).unwrap();
        t.check(&g).unwrap();
    }

    #[test]
    fn rotation_backtracking_finds_triples() {
        for g in [generators::cube(), generators::k33(), generators::k4()] {
            let col = proper_3_edge_coloring(&g).unwrap();
            let marks = rotations(&g, &col).unwrap();
            let ps = marks.map(|m| NormalPartition::from_marking(&g, m).unwrap());
            ConformalTriple::new(&g, ps, col).unwrap();
        }
    }
}
