//! Growing a conformal triple along two local graph operations: replacing
//! an edge by a path through a new digon, and replacing a vertex by a
//! triangle. Both keep every partition conformal to its color and the
//! three partitions compatible.

use crate::graph::{Color, CubicGraph, EdgeColoring, EdgeId, VertexId};
use crate::partition::{validate_normal, NormalPartition, Trail};

use super::{ConformalTriple, ConstructError};

/// Result of [`digon_extend`]. The edge `xy` keeps its id as `x u`; the
/// new edges are appended as `v y`, then the digon edges `u v` carrying
/// the colors of the partitions where `xy` was an end edge at `x` and the
/// remaining one.
#[derive(Clone, Debug)]
pub struct DigonExtension {
    pub graph: CubicGraph,
    pub triple: ConformalTriple,
    pub x: VertexId,
    pub y: VertexId,
    pub u: VertexId,
    pub v: VertexId,
    /// `[xu, vy, uv, uv]`
    pub edges: [EdgeId; 4],
}

/// Result of [`triangle_extend`]. `corners[c]` carries the outer edge of
/// color `c` (the old vertex keeps the red corner); `sides[c]` is the
/// triangle edge of color `c`, opposite to `corners[c]`.
#[derive(Clone, Debug)]
pub struct TriangleExtension {
    pub graph: CubicGraph,
    pub triple: ConformalTriple,
    pub corners: [VertexId; 3],
    pub sides: [EdgeId; 3],
}

/// `t` turned so that `edges[p] == e` leaves from `from`.
fn oriented(t: &Trail, e: EdgeId, from: VertexId) -> (Trail, usize) {
    let p = t.edges().iter().position(|&f| f == e).expect("edge on its trail");
    if t.vertices()[p] == from {
        (t.clone(), p)
    } else {
        (t.reversed(), t.len() - 1 - p)
    }
}

fn cat<T: Copy>(parts: &[&[T]]) -> Vec<T> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn rev<T: Copy>(xs: &[T]) -> Vec<T> {
    xs.iter().rev().copied().collect()
}

fn rebuild(
    g: &CubicGraph,
    old: &NormalPartition,
    skip: EdgeId,
    new: Vec<(Vec<VertexId>, Vec<EdgeId>)>,
) -> Result<NormalPartition, ConstructError> {
    let mut trails: Vec<Trail> = old.trails().iter().filter(|t| !t.edges().contains(&skip)).cloned().collect();
    for (vs, es) in new {
        let t = Trail::new(g, vs, es).map_err(|e| ConstructError::NotConformalTriple(e.to_string()))?;
        trails.push(t);
    }
    validate_normal(g, trails).map_err(|v| ConstructError::NotConformalTriple(format!("{v:?}")))
}

/// Subdivides `e = xy` twice and doubles the middle edge.
///
/// Let `c` be the color of `e`, `b` a color whose partition ends a trail
/// with `e` (its end is `x`), and `d` the last color. With `e1 = xu`,
/// `e2 = vy` of color `c`, `e3 = uv` of color `b` and `e4 = uv` of color `d`:
/// the `c` trail `R(r,x) e R(y,s)` becomes `R(r,x) e1 e3` and
/// `R(s,y) e2 e4`; the `b` trail `B(b,y) e` becomes `e4 e3 e2 B(y,b)` plus
/// the single edge `e1`; the `d` trail becomes `e3 e4 e1 D(x,..)` plus the
/// single edge `e2` when `e` ends it at `y`, or `D(..,x) e1 e4 e3` and
/// `e2 D(y,..)` when `e` is internal.
pub fn digon_extend(g: &CubicGraph, e: EdgeId, triple: &ConformalTriple) -> Result<DigonExtension, ConstructError> {
    triple.check(g)?;
    let col = triple.coloring();
    let c = col.color(e);
    let [a, b] = g.endpoints(e);
    if a == b {
        return Err(ConstructError::NotConformalTriple("loop edge".into()));
    }
    let others: Vec<Color> = Color::ALL.into_iter().filter(|&k| k != c).collect();
    let cb = *others
        .iter()
        .find(|&&k| triple.get(k).is_end_edge(e))
        .ok_or_else(|| ConstructError::NotConformalTriple(format!("{e} internal in every partition")))?;
    let cd = *others.iter().find(|&&k| k != cb).unwrap();
    let x = if triple.get(cb).marked(a) == e { a } else { b };
    let y = if x == a { b } else { a };

    let (n, m) = (g.n() as u32, g.m() as u32);
    let (u, v) = (VertexId(n), VertexId(n + 1));
    let (e1, e2, e3, e4) = (e, EdgeId(m), EdgeId(m + 1), EdgeId(m + 2));
    let mut list = g.edge_list();
    list[e.index()] = (x.0, u.0);
    list.extend([(v.0, y.0), (u.0, v.0), (u.0, v.0)]);
    let g2 = CubicGraph::new(g.n() + 2, &list).expect("degrees stay 3");
    let mut colors = col.colors().to_vec();
    colors.extend([c, cb, cd]);
    let col2 = EdgeColoring::new(&g2, colors).ok_or_else(|| ConstructError::NotConformalTriple("improper".into()))?;

    let (rt, p) = oriented(triple.get(c).trail_of(e), e, x);
    let (rv, re) = (rt.vertices(), rt.edges());
    let red = vec![
        (cat(&[&rv[..=p], &[u, v]]), cat(&[&re[..p], &[e1, e3]])),
        (cat(&[&rev(&rv[p + 1..]), &[v, u]]), cat(&[&rev(&re[p + 1..]), &[e2, e4]])),
    ];

    let (bt, p) = oriented(triple.get(cb).trail_of(e), e, y);
    if p + 1 != bt.len() {
        return Err(ConstructError::NotConformalTriple(format!("{e} not marked at {x}")));
    }
    let (bv, be) = (bt.vertices(), bt.edges());
    let blue =
        vec![(vec![x, u], vec![e1]), (cat(&[&[v, u, v], &rev(&bv[..=p])]), cat(&[&[e4, e3, e2], &rev(&be[..p])]))];

    let dp = triple.get(cd);
    let yellow = if dp.is_end_edge(e) {
        let (dt, p) = oriented(dp.trail_of(e), e, y);
        if p != 0 {
            return Err(ConstructError::NotConformalTriple(format!("{e} marked at {x} twice")));
        }
        vec![(cat(&[&[u, v, u], &dt.vertices()[1..]]), cat(&[&[e3, e4, e1], &dt.edges()[1..]])), (vec![y, v], vec![e2])]
    } else {
        let (dt, p) = oriented(dp.trail_of(e), e, x);
        let (dv, de) = (dt.vertices(), dt.edges());
        vec![
            (cat(&[&dv[..=p], &[u, v, u]]), cat(&[&de[..p], &[e1, e4, e3]])),
            (cat(&[&[v], &dv[p + 1..]]), cat(&[&[e2], &de[p + 1..]])),
        ]
    };

    let mut parts: Vec<Option<NormalPartition>> = vec![None, None, None];
    parts[c.index()] = Some(rebuild(&g2, triple.get(c), e, red)?);
    parts[cb.index()] = Some(rebuild(&g2, triple.get(cb), e, blue)?);
    parts[cd.index()] = Some(rebuild(&g2, dp, e, yellow)?);
    let parts = [0, 1, 2].map(|i| parts[i].take().unwrap());
    let triple = ConformalTriple::new(&g2, parts, col2)?;
    Ok(DigonExtension { graph: g2, triple, x, y, u, v, edges: [e1, e2, e3, e4] })
}

/// Replaces `v` by a triangle.
///
/// In the partition of color `X`, let `W` be the color marked at `v` and
/// `Z` the third one. The passage `X, Z` through `v` becomes the path
/// `x_X, x_W, x_Z` over the triangle edges colored `Z` and `X`, the trail
/// ending at `v` now ends at `x_W`, and the triangle edge `x_X x_Z` (color
/// `W`) is added as a trail of its own.
pub fn triangle_extend(
    g: &CubicGraph,
    v: VertexId,
    triple: &ConformalTriple,
) -> Result<TriangleExtension, ConstructError> {
    triple.check(g)?;
    let col = triple.coloring();
    let (n, m) = (g.n() as u32, g.m() as u32);
    let corners = [v, VertexId(n), VertexId(n + 1)];
    // sides[c] joins the two corners other than corners[c]
    let sides = [EdgeId(m + 2), EdgeId(m + 1), EdgeId(m)];
    let mut list = g.edge_list();
    for c in [Color::Blue, Color::Yellow] {
        let f = col.edge_at(g, v, c);
        let (p, q) = list[f.index()];
        list[f.index()] = if p == v.0 { (corners[c.index()].0, q) } else { (p, corners[c.index()].0) };
    }
    list.extend([(corners[0].0, corners[1].0), (corners[0].0, corners[2].0), (corners[1].0, corners[2].0)]);
    let g2 = CubicGraph::new(g.n() + 2, &list).expect("degrees stay 3");
    let mut colors = col.colors().to_vec();
    colors.extend([Color::Yellow, Color::Blue, Color::Red]);
    let col2 = EdgeColoring::new(&g2, colors).ok_or_else(|| ConstructError::NotConformalTriple("improper".into()))?;

    let third = |p: Color, q: Color| Color::ALL.into_iter().find(|&k| k != p && k != q).unwrap();
    let corner = |c: Color| corners[c.index()];
    let side = |p: Color, q: Color| sides[third(p, q).index()];

    let parts = Color::ALL.map(|xc| -> Result<NormalPartition, ConstructError> {
        let p = triple.get(xc);
        let wc = col.color(p.marked(v));
        let zc = third(xc, wc);
        let mut trails = Vec::new();
        for t in p.trails() {
            let (tv, te) = (t.vertices(), t.edges());
            let mut vs = Vec::with_capacity(tv.len() + 2);
            let mut es = Vec::with_capacity(te.len() + 2);
            for k in 0..tv.len() {
                if k > 0 {
                    es.push(te[k - 1]);
                }
                if tv[k] != v {
                    vs.push(tv[k]);
                } else if k == 0 || k == t.len() {
                    vs.push(corner(wc));
                } else if col.color(te[k - 1]) == xc {
                    vs.extend([corner(xc), corner(wc), corner(zc)]);
                    es.extend([side(xc, wc), side(wc, zc)]);
                } else {
                    vs.extend([corner(zc), corner(wc), corner(xc)]);
                    es.extend([side(wc, zc), side(xc, wc)]);
                }
            }
            trails.push(Trail::new(&g2, vs, es).map_err(|e| ConstructError::NotConformalTriple(e.to_string()))?);
        }
        trails.push(Trail::new(&g2, vec![corner(xc), corner(zc)], vec![side(xc, zc)]).unwrap());
        validate_normal(&g2, trails).map_err(|v| ConstructError::NotConformalTriple(format!("{v:?}")))
    });
    let [r, b, y] = parts;
    let triple = ConformalTriple::new(&g2, [r?, b?, y?], col2)?;
    Ok(TriangleExtension { graph: g2, triple, corners, sides })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{bipartite_triple, conformal_triple};
    use crate::graph::{generators, proper_3_edge_coloring};

    fn triple_of(g: &CubicGraph) -> ConformalTriple {
        conformal_triple(g, &proper_3_edge_coloring(g).unwrap()).unwrap()
    }

    #[test]
    fn theta_digon_every_edge() {
        let g = generators::theta();
        let t = triple_of(&g);
        for e in g.edges() {
            let ext = digon_extend(&g, e, &t).unwrap();
            assert_eq!(ext.graph.n(), 4);
            ext.triple.check(&ext.graph).unwrap();
            assert!(ext.triple.partitions().iter().all(|p| p.is_odd()));
        }
    }

    #[test]
    fn digon_on_cube_and_k33_every_edge() {
        for g in [generators::cube(), generators::k33()] {
            let t = bipartite_triple(&g).unwrap();
            for e in g.edges() {
                let ext = digon_extend(&g, e, &t).unwrap();
                ext.triple.check(&ext.graph).unwrap();
                // twice, to hit the internal case in the last partition
                let ext2 = digon_extend(&ext.graph, ext.edges[1], &ext.triple).unwrap();
                ext2.triple.check(&ext2.graph).unwrap();
            }
        }
    }

    #[test]
    fn k33_triangle_every_vertex() {
        let g = generators::k33();
        let t = bipartite_triple(&g).unwrap();
        for v in g.vertices() {
            let ext = triangle_extend(&g, v, &t).unwrap();
            assert_eq!(ext.graph.n(), 8);
            ext.triple.check(&ext.graph).unwrap();
            for c in Color::ALL {
                let class = ext.triple.coloring().class(c);
                assert!(ext.triple.get(c).is_conformal(&class));
            }
        }
    }

    #[test]
    fn color_permutation_commutes_with_digon() {
        // edges ending a trail in exactly one other partition fix the roles
        let base = generators::cube();
        let first = digon_extend(&base, EdgeId(0), &bipartite_triple(&base).unwrap()).unwrap();
        let (g, t) = (first.graph, first.triple);
        let perm = [Color::Blue, Color::Yellow, Color::Red];
        let [r, b, y] = t.clone().into_partitions();
        // partition of color c moves to color perm[c]
        let mut ps = [r.clone(), b.clone(), y.clone()];
        ps[perm[0].index()] = r;
        ps[perm[1].index()] = b;
        ps[perm[2].index()] = y;
        let tp = ConformalTriple::new(&g, ps, t.coloring().permuted(perm)).unwrap();
        let mut tested = 0;
        for e in g.edges() {
            let c = t.coloring().color(e);
            let ends = Color::ALL.iter().filter(|&&k| k != c && t.get(k).is_end_edge(e)).count();
            if ends != 1 {
                continue;
            }
            tested += 1;
            let a = digon_extend(&g, e, &t).unwrap();
            let bb = digon_extend(&g, e, &tp).unwrap();
            assert_eq!(a.graph.edge_list(), bb.graph.edge_list());
            for c in Color::ALL {
                assert_eq!(a.triple.get(c), bb.triple.get(perm[c.index()]));
            }
        }
        assert!(tested > 0);
    }
}
