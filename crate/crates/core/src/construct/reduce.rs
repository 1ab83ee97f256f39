//! Conformal triples on any 3-edge-colorable cubic graph: contract digons
//! and triangles down to a small or simple triangle-free core, solve the
//! core, then grow the triple back with the extension gadgets. Only graphs
//! are contracted; triples are rebuilt on the way up.

use serde::Serialize;

use crate::graph::{proper_3_edge_coloring, Color, CubicGraph, EdgeColoring, EdgeId, VertexId};
use crate::partition::{validate_normal, NormalPartition, Trail};

use super::local::{conformal_triple_with, rotations};
use super::{digon_extend, triangle_extend, ConformalOptions, ConformalTriple, ConstructError, ConstructionPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionStep {
    Digon,
    Triangle,
}

/// What [`conformal_triple_general_with`] did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// contractions, outermost first
    pub steps: Vec<ReductionStep>,
    pub core_vertices: usize,
    pub core_path: ConstructionPath,
}

/// One contraction from `big` to a smaller graph. `vmap`/`emap` send
/// surviving vertices and edges of `big` to their ids below.
struct Level {
    big: CubicGraph,
    kind: Kind,
    inv_v: Vec<VertexId>,
    inv_e: Vec<Option<EdgeId>>,
}

enum Kind {
    /// digon `p q` with outer edges `ep` (at `p`) and `eq` (at `q`),
    /// replaced below by `joined`
    Digon { p: VertexId, q: VertexId, ep: EdgeId, eq: EdgeId, d: [EdgeId; 2], joined: EdgeId },
    /// triangle collapsed to `center` below
    Triangle { corners: [VertexId; 3], outer: [EdgeId; 3], center: VertexId },
}

fn third_edge(g: &CubicGraph, v: VertexId, skip: &[EdgeId]) -> EdgeId {
    g.slots(v).into_iter().map(|s| s.edge).find(|e| !skip.contains(e)).unwrap()
}

/// Smaller graph, vertex map, and the inverse vertex and edge maps.
type Shrunk = (CubicGraph, Vec<Option<u32>>, Vec<VertexId>, Vec<Option<EdgeId>>);

/// Keeps the vertices and edges not removed, in order, with `extra` edges
/// appended; `rename` redirects endpoints of kept edges.
fn shrink(
    g: &CubicGraph,
    drop_v: &[VertexId],
    drop_e: &[EdgeId],
    rename: impl Fn(VertexId) -> VertexId,
    extra: &[(VertexId, VertexId)],
) -> Option<Shrunk> {
    let mut vmap = vec![None; g.n()];
    let mut inv_v = Vec::new();
    for v in g.vertices() {
        if !drop_v.contains(&v) {
            vmap[v.index()] = Some(inv_v.len() as u32);
            inv_v.push(v);
        }
    }
    let mut list = Vec::new();
    let mut inv_e = Vec::new();
    for e in g.edges() {
        if drop_e.contains(&e) {
            continue;
        }
        let [a, b] = g.endpoints(e);
        list.push((vmap[rename(a).index()]?, vmap[rename(b).index()]?));
        inv_e.push(Some(e));
    }
    for &(a, b) in extra {
        list.push((vmap[a.index()]?, vmap[b.index()]?));
        inv_e.push(None);
    }
    let small = CubicGraph::new(inv_v.len(), &list).ok()?;
    Some((small, vmap, inv_v, inv_e))
}

fn contract_digon(g: &CubicGraph, p: VertexId, q: VertexId) -> Option<(CubicGraph, Level)> {
    let d = g.edges_between(p, q);
    if d.len() != 2 {
        return None;
    }
    let (ep, eq) = (third_edge(g, p, &d), third_edge(g, q, &d));
    let (x, y) = (g.opposite(ep, p), g.opposite(eq, q));
    if x == y {
        // the joined edge would be a loop: ep, eq and x's third edge are bridges
        return None;
    }
    let (small, _, inv_v, inv_e) = shrink(g, &[p, q], &[d[0], d[1], ep, eq], |v| v, &[(x, y)])?;
    let joined = EdgeId(small.m() as u32 - 1);
    let kind = Kind::Digon { p, q, ep, eq, d: [d[0], d[1]], joined };
    Some((small, Level { big: g.clone(), kind, inv_v, inv_e }))
}

fn contract_triangle(g: &CubicGraph, corners: [VertexId; 3]) -> Option<(CubicGraph, Level)> {
    let [a, b, c] = corners;
    let sides: Vec<EdgeId> = [(a, b), (a, c), (b, c)]
        .iter()
        .map(|&(p, q)| {
            let es = g.edges_between(p, q);
            (es.len() == 1).then(|| es[0])
        })
        .collect::<Option<_>>()?;
    let outer = corners.map(|v| third_edge(g, v, &sides));
    let rename = |v: VertexId| if v == b || v == c { a } else { v };
    let (small, vmap, inv_v, inv_e) = shrink(g, &[b, c], &sides, rename, &[])?;
    let center = VertexId(vmap[a.index()].unwrap());
    let kind = Kind::Triangle { corners, outer, center };
    Some((small, Level { big: g.clone(), kind, inv_v, inv_e }))
}

/// Moves a triple along an isomorphism `vm`, `em` onto `target`.
fn transport(
    target: &CubicGraph,
    t: &ConformalTriple,
    vm: &[VertexId],
    em: &[EdgeId],
) -> Result<ConformalTriple, ConstructError> {
    let err = |s: String| ConstructError::NotConformalTriple(s);
    let mut colors = vec![Color::Red; target.m()];
    for (i, &c) in t.coloring().colors().iter().enumerate() {
        colors[em[i].index()] = c;
    }
    let col = EdgeColoring::new(target, colors).ok_or_else(|| err("lifted coloring improper".into()))?;
    let parts = t.partitions().map(|p| -> Result<NormalPartition, ConstructError> {
        let trails = p
            .trails()
            .iter()
            .map(|tr| {
                let vs = tr.vertices().iter().map(|v| vm[v.index()]).collect();
                let es = tr.edges().iter().map(|e| em[e.index()]).collect();
                Trail::new(target, vs, es).map_err(|e| err(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        validate_normal(target, trails).map_err(|v| err(format!("{v:?}")))
    });
    let [r, b, y] = parts;
    ConformalTriple::new(target, [r?, b?, y?], col)
}

fn lift(level: &Level, small: &CubicGraph, t: &ConformalTriple) -> Result<ConformalTriple, ConstructError> {
    let mut vm: Vec<VertexId> = level.inv_v.clone();
    let mut em: Vec<EdgeId> = level.inv_e.iter().map(|e| e.unwrap_or(EdgeId(u32::MAX))).collect();
    match level.kind {
        Kind::Digon { p, q, ep, eq, d, joined } => {
            let ext = digon_extend(small, joined, t)?;
            // u sits next to x
            let x_big = level.inv_v[ext.x.index()];
            let p_first = level.big.opposite(ep, p) == x_big;
            let (u, v, e1, e2) = if p_first { (p, q, ep, eq) } else { (q, p, eq, ep) };
            vm.extend([u, v]);
            em[ext.edges[0].index()] = e1;
            em.extend([e2, d[0], d[1]]);
            debug_assert_eq!(ext.graph.n(), vm.len());
            transport(&level.big, &ext.triple, &vm, &em)
        }
        Kind::Triangle { corners, outer, center } => {
            let ext = triangle_extend(small, center, t)?;
            let col = t.coloring();
            // corner carrying the outer edge of each color
            let by_color = Color::ALL.map(|c| {
                let f = col.edge_at(small, center, c);
                let i = outer.iter().position(|&o| Some(o) == level.inv_e[f.index()]).unwrap();
                corners[i]
            });
            vm[center.index()] = by_color[0];
            vm.extend([by_color[1], by_color[2]]);
            em.resize(ext.graph.m(), EdgeId(u32::MAX));
            for c in Color::ALL {
                let others: Vec<Color> = Color::ALL.into_iter().filter(|&k| k != c).collect();
                let side = level.big.edges_between(by_color[others[0].index()], by_color[others[1].index()])[0];
                em[ext.sides[c.index()].index()] = side;
            }
            transport(&level.big, &ext.triple, &vm, &em)
        }
    }
}

/// Conformal compatible triple on a connected 3-edge-colorable graph.
pub fn conformal_triple_general(g: &CubicGraph) -> Result<ConformalTriple, ConstructError> {
    conformal_triple_general_with(g, &ConformalOptions::default()).map(|(t, _)| t)
}

pub fn conformal_triple_general_with(
    g: &CubicGraph,
    opts: &ConformalOptions,
) -> Result<(ConformalTriple, Reduction), ConstructError> {
    if g.has_loop() || !g.is_connected() || proper_3_edge_coloring(g).is_none() {
        return Err(ConstructError::NotThreeEdgeColorable);
    }
    let mut levels: Vec<Level> = Vec::new();
    let mut steps = Vec::new();
    let mut cur = g.clone();
    while cur.n() > 4 {
        let next = if let Some((p, q)) = cur.find_digon() {
            steps.push(ReductionStep::Digon);
            contract_digon(&cur, p, q)
        } else if let Some(tri) = cur.find_triangle() {
            steps.push(ReductionStep::Triangle);
            contract_triangle(&cur, tri)
        } else {
            break;
        };
        let (small, level) = next.ok_or(ConstructError::NotThreeEdgeColorable)?;
        levels.push(level);
        cur = small;
    }
    let col = proper_3_edge_coloring(&cur).ok_or(ConstructError::NotThreeEdgeColorable)?;
    let (mut t, core_path) = if cur.n() <= 4 {
        let marks = rotations(&cur, &col).ok_or(ConstructError::SearchExhausted { budget: 0, best: cur.n() })?;
        let parts = marks.map(|m| NormalPartition::from_marking(&cur, m).expect("acyclic"));
        (ConformalTriple::new(&cur, parts, col)?, ConstructionPath::BaseCase)
    } else {
        conformal_triple_with(&cur, &col, opts)?
    };
    let core_vertices = cur.n();
    for level in levels.iter().rev() {
        t = lift(level, &cur, &t)?;
        cur = level.big.clone();
    }
    Ok((t, Reduction { steps, core_vertices, core_path }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn sorted_edges(g: &CubicGraph) -> Vec<(u32, u32)> {
        let mut l: Vec<(u32, u32)> = g.edge_list().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        l.sort();
        l
    }

    #[test]
    fn small_named_graphs() {
        for g in [generators::k4(), generators::theta(), generators::prism(), generators::cube(), generators::k33()] {
            let (t, _) = conformal_triple_general_with(&g, &ConformalOptions::default()).unwrap();
            t.check(&g).unwrap();
        }
    }

    #[test]
    fn prism_contracts_two_triangles() {
        let g = generators::prism();
        let (_, red) = conformal_triple_general_with(&g, &ConformalOptions::default()).unwrap();
        // the first triangle leaves K4, which is a base case
        assert_eq!(red.steps, vec![ReductionStep::Triangle]);
        assert_eq!(red.core_vertices, 4);
        assert_eq!(red.core_path, ConstructionPath::BaseCase);
    }

    #[test]
    fn snark_rejected() {
        let g = generators::flower(5).unwrap();
        assert_eq!(conformal_triple_general(&g).unwrap_err(), ConstructError::NotThreeEdgeColorable);
    }

    #[test]
    fn triangle_extend_then_contract_is_identity() {
        let g = generators::k33();
        let t = crate::construct::bipartite_triple(&g).unwrap();
        for v in g.vertices() {
            let ext = triangle_extend(&g, v, &t).unwrap();
            let (small, _) = contract_triangle(&ext.graph, [v, VertexId(6), VertexId(7)]).unwrap();
            assert_eq!(small.edge_list(), g.edge_list());
        }
    }

    #[test]
    fn digon_extend_then_contract_is_isomorphic() {
        let g = generators::cube();
        let t = crate::construct::bipartite_triple(&g).unwrap();
        for e in g.edges() {
            let ext = digon_extend(&g, e, &t).unwrap();
            let (small, _) = contract_digon(&ext.graph, ext.u, ext.v).unwrap();
            assert_eq!(sorted_edges(&small), sorted_edges(&g));
        }
    }

    #[test]
    fn chains_of_gadgets_lift_back() {
        // grow a graph with both gadgets, then solve it from scratch
        let mut g = generators::k33();
        let mut t = crate::construct::bipartite_triple(&g).unwrap();
        for step in 0..6 {
            if step % 2 == 0 {
                let ext = digon_extend(&g, EdgeId(step as u32), &t).unwrap();
                (g, t) = (ext.graph, ext.triple);
            } else {
                let ext = triangle_extend(&g, VertexId(step as u32), &t).unwrap();
                (g, t) = (ext.graph, ext.triple);
            }
        }
        let (t2, red) = conformal_triple_general_with(&g, &ConformalOptions::default()).unwrap();
        t2.check(&g).unwrap();
        assert!(red.steps.contains(&ReductionStep::Digon));
        assert!(red.steps.contains(&ReductionStep::Triangle));
    }
}
