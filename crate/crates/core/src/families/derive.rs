//! Derivation of the embedded family data by constrained backtracking.
//!
//! [`render`] reproduces `data.rs` byte for byte; a mismatch means the
//! searches or the data drifted.

use std::fmt::Write;

use crate::graph::{generators, CubicGraph, EdgeId, Slot, VertexId};
use crate::partition::NormalPartition;
use crate::search::triple::{bijections, Bijection, Forest};
use crate::search::{SearchOptions, TripleSearch};

use super::{
    flower_gadget_vertices, flower_vertex, marks_of, partitions_of, FamilyError, Marks, FLOWER_BOUNDARY, FLOWER_CUT,
    GOLDBERG_CUT,
};

/// Vertex permutations preserving adjacency of a simple graph.
pub fn automorphisms(g: &CubicGraph) -> Vec<Vec<u32>> {
    let n = g.n();
    let adj = |a: usize, b: usize| !g.edges_between(VertexId(a as u32), VertexId(b as u32)).is_empty();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        n: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        adj: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<u32>>,
    ) {
        if v == n {
            out.push(img.iter().map(|&x| x as u32).collect());
            return;
        }
        for c in 0..n {
            if used[c] || (0..v).any(|u| adj(u, v) != adj(img[u], c)) {
                continue;
            }
            img[v] = c;
            used[c] = true;
            go(v + 1, n, img, used, adj, out);
            used[c] = false;
        }
        img[v] = usize::MAX;
    }
    go(0, n, &mut img, &mut used, &adj, &mut out);
    out
}

/// The image of a neighbour marking under a vertex permutation.
fn image(marks: &[u32], sigma: &[u32]) -> Vec<u32> {
    let mut out = vec![0; marks.len()];
    for (v, &w) in marks.iter().enumerate() {
        out[sigma[v] as usize] = sigma[w as usize];
    }
    out
}

/// Some automorphism carries partition `a` onto partition `b`.
pub fn isomorphic_under(autos: &[Vec<u32>], a: &[u32], b: &[u32]) -> bool {
    autos.iter().any(|s| image(a, s) == b)
}

fn profile_ok(p: &NormalPartition) -> bool {
    p.stats().profile() == [5, 3, 3, 3, 1]
}

pub fn derive_petersen() -> Result<Marks, FamilyError> {
    let g = generators::petersen();
    let autos = automorphisms(&g);
    let opts = SearchOptions { max_len: Some(5), ..SearchOptions::default() };
    let mut found = None;
    TripleSearch::new(&g, opts).run(|ms| {
        let marks = marks_of(&g, ms);
        let ps = partitions_of(&g, &marks);
        let ok = ps.iter().all(profile_ok)
            && isomorphic_under(&autos, &marks[0], &marks[1])
            && isomorphic_under(&autos, &marks[0], &marks[2]);
        if ok {
            found = Some(marks);
        }
        !ok
    });
    found.ok_or(FamilyError::Underivable("petersen"))
}

fn slot_to(g: &CubicGraph, a: u32, b: u32) -> Slot {
    let e = g.edges_between(VertexId(a), VertexId(b))[0];
    g.slot_at(e, VertexId(a)).expect("incident")
}

/// Fixed bijection at each boundary vertex of `F_k` named in the table.
fn flower_fixed(g: &CubicGraph, k: usize) -> Vec<(u32, Bijection)> {
    (0..8)
        .map(|r| {
            let (x, i) = FLOWER_BOUNDARY[0][r].0;
            let v = flower_vertex(k, x, i);
            let b = [0, 1, 2].map(|p| {
                let ((x, i), (y, j)) = FLOWER_BOUNDARY[p][r];
                debug_assert_eq!(flower_vertex(k, x, i), v);
                slot_to(g, v, flower_vertex(k, y, j))
            });
            (v, b)
        })
        .collect()
}

/// A loose end of the cut: the edge and its endpoint outside the gadget.
type Port = (EdgeId, VertexId);

/// What the partition does at a loose end outside the gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    /// the outer end marks the cut edge
    Marked,
    /// a piece may stop inside the gadget if its length is odd
    Odd,
    /// a piece may stop inside the gadget if its length is even
    Even,
}

/// Backtracking over bijections at the gadget vertices of `h`.
///
/// `ends[p][q][s]` describes port `s` of pair `q` in partition `p`. A piece
/// of trail entering at an unmarked port either leaves at the other port of
/// its pair with odd length, or, when its [`End`] allows it, stops at a
/// mark with the stated parity. Pieces between marks are odd. The outside
/// part of a trail has a known parity whenever a piece may stop, so these
/// rules keep every trail odd and acyclic whatever the rest looks like.
fn gadget_search(
    h: &CubicGraph,
    verts: &[u32],
    allowed: &[Vec<Bijection>],
    pairs: &[[Port; 2]],
    ends: &[Vec<[End; 2]>; 3],
) -> Option<Vec<Bijection>> {
    let mut forests = [Forest::new(h), Forest::new(h), Forest::new(h)];
    // per partition: ports whose pieces may stop at an odd / even length
    let mut stop = [[0u32; 2]; 3];
    for (p, f) in forests.iter_mut().enumerate() {
        for (q, pair) in pairs.iter().enumerate() {
            for (s, &(e, outer)) in pair.iter().enumerate() {
                let slot = h.slot_at(e, outer).expect("port edge touches its outer end");
                let bit = (2 * q + s) as u32;
                match ends[p][q][s] {
                    End::Marked => {
                        f.mark(slot);
                    }
                    end => {
                        f.tag(slot, bit);
                        match end {
                            End::Odd => stop[p][1] |= 1 << bit,
                            End::Even => stop[p][0] |= 1 << bit,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    let masks: Vec<u32> = (0..pairs.len()).map(|q| 0b11u32 << (2 * q)).collect();
    let ok = |p: usize, f: &Forest, r: u32| {
        let (len, marks) = f.info(r);
        let tags = f.tags(r);
        match (marks, tags.count_ones()) {
            (0, 0) | (1, 0) | (0, 1) => true,
            (2, 0) => len % 2 == 1,
            (1, 1) => tags & stop[p][len as usize % 2] != 0,
            (0, 2) => masks.contains(&tags) && len % 2 == 1,
            _ => false,
        }
    };
    let mut chosen = Vec::with_capacity(verts.len());
    fn go(
        h: &CubicGraph,
        verts: &[u32],
        allowed: &[Vec<Bijection>],
        forests: &mut [Forest; 3],
        chosen: &mut Vec<Bijection>,
        ok: &dyn Fn(usize, &Forest, u32) -> bool,
    ) -> bool {
        let d = chosen.len();
        if d == verts.len() {
            return true;
        }
        let v = VertexId(verts[d]);
        for b in &allowed[d] {
            let depths = forests.each_ref().map(|f| f.depth());
            let mut fine = true;
            for (i, f) in forests.iter_mut().enumerate() {
                let [p, q] = h.other_slots(v, b[i]);
                fine = f.join(p, q).is_some_and(|r| ok(i, f, r)) && {
                    let r = f.mark(b[i]);
                    ok(i, f, r)
                };
                if !fine {
                    break;
                }
            }
            if fine {
                chosen.push(*b);
                if go(h, verts, allowed, forests, chosen, ok) {
                    return true;
                }
                chosen.pop();
            }
            for (f, d) in forests.iter_mut().zip(depths) {
                f.undo_to(d);
            }
        }
        false
    }
    go(h, verts, allowed, &mut forests, &mut chosen, &ok).then_some(chosen)
}

fn gadget_rows(h: &CubicGraph, verts: &[u32], sol: &[Bijection]) -> Marks {
    [0, 1, 2].map(|p| verts.iter().zip(sol).map(|(&v, b)| h.opposite(b[p].edge, VertexId(v)).0).collect())
}

/// The boundary contract of a base triple at its cut edges `(x0, x1)`:
/// which ends mark the cut edge and, where the trail runs through it,
/// whether it is an odd edge.
fn contract(g: &CubicGraph, base: &Marks, cut: &[(u32, u32)]) -> [Vec<[End; 2]>; 3] {
    let ps = partitions_of(g, base);
    [0, 1, 2].map(|p| {
        cut.iter()
            .map(|&(x0, x1)| match (base[p][x0 as usize] == x1, base[p][x1 as usize] == x0) {
                (true, true) => [End::Marked; 2],
                (true, false) => [End::Marked, End::Odd],
                (false, true) => [End::Odd, End::Marked],
                (false, false) => {
                    let e = g.edges_between(VertexId(x0), VertexId(x1))[0];
                    // the two outside parts are odd around an odd edge, even otherwise
                    [if ps[p].trail_of(e).odd_edges().contains(&e) { End::Even } else { End::Odd }; 2]
                }
            })
            .collect()
    })
}

/// Bijections at the gadget vertices: the ones in `fixed` are pinned, the
/// others are free.
fn gadget_options(h: &CubicGraph, verts: &[u32], fixed: &[(u32, Bijection)]) -> Vec<Vec<Bijection>> {
    verts
        .iter()
        .map(|&v| match fixed.iter().find(|(w, _)| *w == v) {
            Some(&(_, b)) => vec![b],
            None => bijections(h, VertexId(v)),
        })
        .collect()
}

/// Base triple of F_3 and the marks at u_2, v_2, w_2, t_2, u_3, v_3, w_3,
/// t_3 of F_5. The base satisfies the boundary table and the odd-edge
/// conditions, and the new u_2..t_2 are pinned to the table, so it holds
/// again after each step. The first base admitting a gadget wins.
pub fn derive_flower() -> Result<(Marks, Marks), FamilyError> {
    let g = generators::flower(3)?;
    let h = generators::flower(5)?;
    let mut allowed: Vec<Vec<Bijection>> = g.vertices().map(|v| bijections(&g, v)).collect();
    for (v, b) in flower_fixed(&g, 3) {
        allowed[v as usize] = vec![b];
    }
    let cut: Vec<(u32, u32)> = FLOWER_CUT.iter().map(|&x| (flower_vertex(3, x, 1), flower_vertex(3, x, 2))).collect();
    let port = |a: u32, b: u32| (h.edges_between(VertexId(a), VertexId(b))[0], VertexId(a));
    let pairs: Vec<[Port; 2]> = FLOWER_CUT
        .iter()
        .map(|&x| {
            let f = |i| flower_vertex(5, x, i);
            [port(f(1), f(2)), port(f(4), f(3))]
        })
        .collect();
    let verts = flower_gadget_vertices(5);
    let options = gadget_options(&h, &verts, &flower_fixed(&h, 5));
    let opts = SearchOptions { allowed: Some(allowed), ..SearchOptions::default() };
    let mut found = None;
    TripleSearch::new(&g, opts).run(|ms| {
        let base = marks_of(&g, ms);
        if !super::flower_boundary_violations(3, &partitions_of(&g, &base)).is_empty() {
            return true;
        }
        match gadget_search(&h, &verts, &options, &pairs, &contract(&g, &base, &cut)) {
            Some(sol) => {
                found = Some((base, gadget_rows(&h, &verts, &sol)));
                false
            }
            None => true,
        }
    });
    found.ok_or(FamilyError::Underivable("flower"))
}

/// Base triple of G_3 and the marks at blocks 1 and 2 of G_5 (vertices
/// 8..24). The ends of the cut edges keep their base marks, and the new
/// block 1 repeats the base marks of block 1 at v_3, v_6, v_8. The first
/// base admitting a gadget wins.
pub fn derive_goldberg() -> Result<(Marks, Marks), FamilyError> {
    let g = generators::goldberg(3)?;
    let h = generators::goldberg(5)?;
    let verts: Vec<u32> = (8..24).collect();
    let cut: Vec<(u32, u32)> = GOLDBERG_CUT.iter().map(|&(a, b)| (a - 1, 8 + b - 1)).collect();
    let port = |a: u32, b: u32| (h.edges_between(VertexId(a), VertexId(b))[0], VertexId(a));
    let pairs: Vec<[Port; 2]> =
        GOLDBERG_CUT.iter().map(|&(a, b)| [port(a - 1, 8 + b - 1), port(24 + b - 1, 16 + a - 1)]).collect();
    let mut found = None;
    TripleSearch::new(&g, SearchOptions::default()).run(|ms| {
        let base = marks_of(&g, ms);
        // block ids agree between G_3 and G_5 up to block 2
        let fixed: Vec<(u32, Bijection)> =
            cut.iter().map(|&(_, x1)| (x1, [0, 1, 2].map(|p| slot_to(&h, x1, base[p][x1 as usize])))).collect();
        let options = gadget_options(&h, &verts, &fixed);
        match gadget_search(&h, &verts, &options, &pairs, &contract(&g, &base, &cut)) {
            Some(sol) => {
                found = Some((base, gadget_rows(&h, &verts, &sol)));
                false
            }
            None => true,
        }
    });
    found.ok_or(FamilyError::Underivable("goldberg"))
}

fn table(out: &mut String, name: &str, doc: &str, rows: &Marks) {
    let n = rows[0].len();
    writeln!(out, "/// {doc}").unwrap();
    writeln!(out, "pub(super) const {name}: [[u8; {n}]; 3] = [").unwrap();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        writeln!(out, "    [{}],", cells.join(", ")).unwrap();
    }
    writeln!(out, "];").unwrap();
}

/// Runs every derivation and prints the data module.
pub fn render() -> Result<String, FamilyError> {
    let mut out = String::from(
        "//! Generated by `derive::render`. Row p, column v: the neighbour whose edge\n//! partition p marks at v.\n\n",
    );
    table(&mut out, "PETERSEN", "Petersen graph.", &derive_petersen()?);
    out.push('\n');
    let (base, gadget) = derive_flower()?;
    table(&mut out, "FLOWER_BASE", "F_3.", &base);
    out.push('\n');
    table(&mut out, "FLOWER_GADGET", "F_5 vertices u_2, v_2, w_2, t_2, u_3, v_3, w_3, t_3.", &gadget);
    out.push('\n');
    let (base, gadget) = derive_goldberg()?;
    table(&mut out, "GOLDBERG_BASE", "G_3.", &base);
    out.push('\n');
    table(&mut out, "GOLDBERG_GADGET", "G_5 vertices 8..24 (blocks 1 and 2).", &gadget);
    Ok(out)
}

pub const FROZEN: &str = include_str!("data.rs");

/// Re-derives everything and compares with the embedded data.
pub fn regenerate() -> Result<(), FamilyError> {
    if render()? == FROZEN {
        Ok(())
    } else {
        Err(FamilyError::Drift("family"))
    }
}
