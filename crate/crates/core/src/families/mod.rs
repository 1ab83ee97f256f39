//! Compatible odd triples for the Petersen graph and the Flower and
//! Goldberg snarks.
//!
//! The base triples (Petersen, F_3, G_3) and the two k -> k+2 gadgets are
//! embedded data produced by [`derive`]. `F_{k+2}` is obtained from `F_k`
//! by deleting u_1u_2, w_1w_2, t_1t_2 and inserting eight vertices between
//! the loose ends; `G_{k+2}` by inserting two blocks between blocks 0 and 1.
//! Outside the gadget every vertex keeps its mark.
//!
//! The step relies on a boundary contract at the three cut edges, read off
//! the base triple: which ends mark the cut edge, and whether a cut edge
//! that a trail runs through is an odd edge of it. For the Flower snarks the
//! contract contains the boundary table [`FLOWER_BOUNDARY`]. Given the
//! contract, the outside part of every trail reaching the cut has a known
//! parity, and the gadget is chosen so that every trail stays odd and
//! acyclic whatever the partitions look like further away. The gadget
//! reproduces the contract at the new cut, so the step can be repeated.
//!
//! Flower vertices: u_i = i-1, v_i = k+i-1, w_i = 2k+i-1, t_i = 3k+i-1.
//! Goldberg vertices: v_i^j = 8j+i-1.

#[rustfmt::skip]
mod data;
pub mod derive;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{generators, CubicGraph, GraphError, VertexId};
use crate::partition::{Marking, NormalPartition};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error(transparent)]
    BadParameter(#[from] GraphError),
    #[error("unknown family {0:?} (expected petersen, flower:k or goldberg:k)")]
    Unknown(String),
    #[error("frozen {0} data differs from its derivation")]
    Drift(&'static str),
    #[error("derivation of {0} found no solution")]
    Underivable(&'static str),
}

/// One marked neighbour per vertex and partition; the families are simple
/// graphs, so a neighbour names the edge.
pub(crate) type Marks = [Vec<u32>; 3];

pub(crate) fn marks_of(g: &CubicGraph, ms: &[Marking; 3]) -> Marks {
    ms.each_ref().map(|m| g.vertices().map(|v| g.opposite(m.edge(v), v).0).collect())
}

pub(crate) fn partitions_of(g: &CubicGraph, marks: &Marks) -> [NormalPartition; 3] {
    marks.each_ref().map(|nb| {
        let edges: Vec<_> = g
            .vertices()
            .map(|v| *g.edges_between(v, VertexId(nb[v.index()])).first().expect("marked neighbour is adjacent"))
            .collect();
        let m = Marking::from_edges(g, &edges).expect("one edge per vertex");
        NormalPartition::from_marking(g, m).expect("family marks are acyclic")
    })
}

fn from_rows<const N: usize>(rows: &[[u8; N]; 3]) -> Marks {
    rows.each_ref().map(|r| r.iter().map(|&x| x as u32).collect())
}

pub fn petersen_triple() -> [NormalPartition; 3] {
    partitions_of(&generators::petersen(), &from_rows(&data::PETERSEN))
}

/// Flower vertex `x_i` with `x` in u, v, w, t as 0..4; `i == 0` stands for k.
pub fn flower_vertex(k: usize, x: usize, i: usize) -> u32 {
    let i = if i == 0 { k } else { i };
    (x * k + i - 1) as u32
}

fn flower_label(k: usize, id: u32) -> (usize, usize) {
    (id as usize / k, id as usize % k + 1)
}

/// Old F_k vertex to its F_{k+2} name: u_1..t_1 stay, u_i becomes u_{i+2}.
fn flower_rename(k: usize, id: u32) -> u32 {
    let (x, i) = flower_label(k, id);
    flower_vertex(k + 2, x, if i == 1 { 1 } else { i + 2 })
}

pub(crate) const FLOWER_CUT: [usize; 3] = [0, 2, 3];

/// (partition, x): x_1x_2 is an odd edge of that partition.
pub(crate) const FLOWER_ODD_EDGES: [(usize, usize); 3] = [(0, 0), (1, 3), (2, 3)];

/// Gadget vertices u_2, v_2, w_2, t_2, u_3, v_3, w_3, t_3 of F_k.
pub(crate) fn flower_gadget_vertices(k: usize) -> Vec<u32> {
    [2, 3].iter().flat_map(|&i| (0..4).map(move |x| flower_vertex(k, x, i))).collect()
}

fn flower_step(k: usize, old: &Marks) -> Marks {
    let big = k + 2;
    let mut out: Marks = [0, 1, 2].map(|_| vec![u32::MAX; 4 * big]);
    for (p, nb) in old.iter().enumerate() {
        for (v, &w) in nb.iter().enumerate() {
            let v = v as u32;
            let ((xv, iv), (xw, iw)) = (flower_label(k, v), flower_label(k, w));
            let target = if xv == xw && FLOWER_CUT.contains(&xv) && (iv, iw) == (1, 2) {
                flower_vertex(big, xv, 2)
            } else if xv == xw && FLOWER_CUT.contains(&xv) && (iv, iw) == (2, 1) {
                flower_vertex(big, xv, 3)
            } else {
                flower_rename(k, w)
            };
            out[p][flower_rename(k, v) as usize] = target;
        }
    }
    // the gadget is stored with F_5 names
    let gv = flower_gadget_vertices(5);
    for (p, row) in data::FLOWER_GADGET.iter().enumerate() {
        for (slot, &w) in gv.iter().zip(row) {
            let (xv, iv) = flower_label(5, *slot);
            let (xw, iw) = flower_label(5, w as u32);
            out[p][flower_vertex(big, xv, iv) as usize] = flower_vertex(big, xw, iw);
        }
    }
    out
}

pub(crate) fn flower_marks(k: usize) -> Result<Marks, FamilyError> {
    generators::flower(k)?;
    let mut marks = from_rows(&data::FLOWER_BASE);
    let mut j = 3;
    while j < k {
        marks = flower_step(j, &marks);
        j += 2;
    }
    Ok(marks)
}

/// Triple of `F_k`, k odd and at least 3.
pub fn flower_triple(k: usize) -> Result<[NormalPartition; 3], FamilyError> {
    let g = generators::flower(k)?;
    Ok(partitions_of(&g, &flower_marks(k)?))
}

/// Flower vertex (x, i) as in [`flower_vertex`].
pub type FlowerLabel = (usize, usize);

/// Boundary marks required at u_1..t_2 in every F_k, per partition, as
/// ((x, i), (y, j)): vertex x_i marks its edge to y_j (index 0 is k).
pub const FLOWER_BOUNDARY: [[(FlowerLabel, FlowerLabel); 8]; 3] = [
    [
        ((0, 1), (1, 1)),
        ((1, 1), (2, 1)),
        ((2, 1), (2, 2)),
        ((3, 1), (3, 2)),
        ((0, 2), (0, 3)),
        ((1, 2), (0, 2)),
        ((2, 2), (1, 2)),
        ((3, 2), (3, 1)),
    ],
    [
        ((0, 1), (0, 0)),
        ((1, 1), (3, 1)),
        ((2, 1), (1, 1)),
        ((3, 1), (2, 0)),
        ((0, 2), (1, 2)),
        ((1, 2), (3, 2)),
        ((2, 2), (2, 3)),
        ((3, 2), (3, 3)),
    ],
    [
        ((0, 1), (0, 2)),
        ((1, 1), (0, 1)),
        ((2, 1), (3, 0)),
        ((3, 1), (1, 1)),
        ((0, 2), (0, 1)),
        ((1, 2), (2, 2)),
        ((2, 2), (2, 1)),
        ((3, 2), (1, 2)),
    ],
];

/// Failures of the boundary marks and of the odd-edge conditions (u_1u_2
/// odd in the first partition, t_1t_2 odd in the other two).
pub fn flower_boundary_violations(k: usize, triple: &[NormalPartition; 3]) -> Vec<String> {
    const NAMES: [char; 4] = ['u', 'v', 'w', 't'];
    let g = match generators::flower(k) {
        Ok(g) => g,
        Err(e) => return vec![e.to_string()],
    };
    let name = |(x, i): (usize, usize)| format!("{}{}", NAMES[x], if i == 0 { "k".to_string() } else { i.to_string() });
    let mut out = Vec::new();
    for (p, rows) in FLOWER_BOUNDARY.iter().enumerate() {
        for &(a, b) in rows {
            let (va, vb) = (VertexId(flower_vertex(k, a.0, a.1)), VertexId(flower_vertex(k, b.0, b.1)));
            let e = triple[p].marked(va);
            if g.opposite(e, va) != vb {
                out.push(format!("partition {}: {} does not mark {}{}", p + 1, name(a), name(a), name(b)));
            }
        }
    }
    let odd_edge = |p: usize, x: usize| {
        let e = g.edges_between(VertexId(flower_vertex(k, x, 1)), VertexId(flower_vertex(k, x, 2)))[0];
        triple[p].trail_of(e).odd_edges().contains(&e)
    };
    for (p, x) in FLOWER_ODD_EDGES {
        if !odd_edge(p, x) {
            out.push(format!("partition {}: {}1{}2 is not an odd edge", p + 1, NAMES[x], NAMES[x]));
        }
    }
    out
}

/// Cut edges (v_6^0 v_6^1, v_4^0 v_3^1, v_7^0 v_8^1) as (i at block 0, i at block 1).
pub(crate) const GOLDBERG_CUT: [(u32, u32); 3] = [(6, 6), (4, 3), (7, 8)];

fn goldberg_step(k: usize, old: &Marks) -> Marks {
    let rename = |id: u32| if id < 8 { id } else { id + 16 };
    let mut out: Marks = [0, 1, 2].map(|_| vec![u32::MAX; 8 * (k + 2)]);
    for (p, nb) in old.iter().enumerate() {
        for (v, &w) in nb.iter().enumerate() {
            let v = v as u32;
            let mut target = rename(w);
            for &(a, b) in &GOLDBERG_CUT {
                let (x0, x1) = (a - 1, 8 + b - 1);
                if (v, w) == (x0, x1) {
                    target = x1;
                } else if (v, w) == (x1, x0) {
                    target = 16 + a - 1;
                }
            }
            out[p][rename(v) as usize] = target;
        }
    }
    // blocks 1 and 2 of G_{k+2}; ids do not depend on k
    for (p, row) in data::GOLDBERG_GADGET.iter().enumerate() {
        for (i, &w) in row.iter().enumerate() {
            out[p][8 + i] = w as u32;
        }
    }
    out
}

pub(crate) fn goldberg_marks(k: usize) -> Result<Marks, FamilyError> {
    generators::goldberg(k)?;
    let mut marks = from_rows(&data::GOLDBERG_BASE);
    let mut j = 3;
    while j < k {
        marks = goldberg_step(j, &marks);
        j += 2;
    }
    Ok(marks)
}

/// Triple of `G_k`, k odd and at least 3.
pub fn goldberg_triple(k: usize) -> Result<[NormalPartition; 3], FamilyError> {
    let g = generators::goldberg(k)?;
    Ok(partitions_of(&g, &goldberg_marks(k)?))
}

/// A family member as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Petersen,
    Flower(usize),
    Goldberg(usize),
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let (name, k) = match s.split_once(':') {
            Some((n, k)) => (n, Some(k.parse::<usize>().map_err(|_| FamilyError::Unknown(s.to_string()))?)),
            None => (s, None),
        };
        match (name, k) {
            ("petersen", None) => Ok(Family::Petersen),
            ("flower", Some(k)) => Ok(Family::Flower(k)),
            ("goldberg", Some(k)) => Ok(Family::Goldberg(k)),
            _ => Err(FamilyError::Unknown(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Petersen => write!(f, "petersen"),
            Family::Flower(k) => write!(f, "flower:{k}"),
            Family::Goldberg(k) => write!(f, "goldberg:{k}"),
        }
    }
}

impl Family {
    pub fn graph(&self) -> Result<CubicGraph, FamilyError> {
        Ok(match *self {
            Family::Petersen => generators::petersen(),
            Family::Flower(k) => generators::flower(k)?,
            Family::Goldberg(k) => generators::goldberg(k)?,
        })
    }

    pub fn triple(&self) -> Result<[NormalPartition; 3], FamilyError> {
        match *self {
            Family::Petersen => Ok(petersen_triple()),
            Family::Flower(k) => flower_triple(k),
            Family::Goldberg(k) => goldberg_triple(k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::Certificate;
    use crate::search::audit_triple;

    fn refs(t: &[NormalPartition; 3]) -> [&NormalPartition; 3] {
        [&t[0], &t[1], &t[2]]
    }

    #[test]
    fn frozen_data_regenerates() {
        assert_eq!(derive::render().unwrap(), derive::FROZEN);
    }

    #[test]
    fn petersen() {
        let g = generators::petersen();
        let t = petersen_triple();
        audit_triple(&g, refs(&t)).unwrap();
        for p in &t {
            assert_eq!(p.stats().profile(), vec![5, 3, 3, 3, 1]);
        }
        let autos = derive::automorphisms(&g);
        assert_eq!(autos.len(), 120);
        let marks = marks_of(&g, &t.clone().map(|p| p.marking().clone()));
        assert!(derive::isomorphic_under(&autos, &marks[0], &marks[1]));
        assert!(derive::isomorphic_under(&autos, &marks[1], &marks[2]));
    }

    #[test]
    fn families_validate_up_to_15() {
        for k in (3..=15).step_by(2) {
            let g = generators::flower(k).unwrap();
            let t = flower_triple(k).unwrap();
            audit_triple(&g, refs(&t)).unwrap_or_else(|e| panic!("flower {k}: {e}"));
            assert!(Certificate::new(&g, t.iter()).check(Some(&g)).unwrap().valid);
            assert_eq!(flower_boundary_violations(k, &t), Vec::<String>::new(), "flower {k}");

            let g = generators::goldberg(k).unwrap();
            let t = goldberg_triple(k).unwrap();
            audit_triple(&g, refs(&t)).unwrap_or_else(|e| panic!("goldberg {k}: {e}"));
        }
    }

    #[test]
    fn flower_three_boundary_literally() {
        let t = flower_triple(3).unwrap();
        let g = generators::flower(3).unwrap();
        // T_1 at u_1 marks u_1v_1, T_2 at t_1 marks t_1w_3, T_3 at w_1 marks w_1t_3
        let at = |p: usize, a: u32, b: u32| g.opposite(t[p].marked(VertexId(a)), VertexId(a)) == VertexId(b);
        assert!(at(0, 0, 3));
        assert!(at(1, 9, 8));
        assert!(at(2, 6, 11));
        assert!(flower_boundary_violations(3, &t).is_empty());
    }

    /// Every old vertex keeps its marked neighbour under the renaming, with
    /// the cut edges replaced by their stubs.
    #[test]
    fn steps_leave_the_outside_alone() {
        for k in [3, 5, 7] {
            let (small, big) = (flower_marks(k).unwrap(), flower_marks(k + 2).unwrap());
            for p in 0..3 {
                for v in 0..4 * k as u32 {
                    let (x, i) = flower_label(k, v);
                    let (y, j) = flower_label(k, small[p][v as usize]);
                    let expect = match (x == y && FLOWER_CUT.contains(&x), i, j) {
                        (true, 1, 2) => flower_vertex(k + 2, x, 2),
                        (true, 2, 1) => flower_vertex(k + 2, x, 3),
                        _ => flower_rename(k, small[p][v as usize]),
                    };
                    assert_eq!(big[p][flower_rename(k, v) as usize], expect, "k={k} p={p} v={v}");
                }
            }
            let (small, big) = (goldberg_marks(k).unwrap(), goldberg_marks(k + 2).unwrap());
            for p in 0..3 {
                for v in 0..8 * k as u32 {
                    let shifted = |x: u32| if x < 8 { x } else { x + 16 };
                    let w = small[p][v as usize];
                    if !matches!((v / 8, w / 8), (0, 1) | (1, 0)) {
                        assert_eq!(big[p][shifted(v) as usize], shifted(w), "k={k} p={p} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn deterministic_certificates() {
        let a = Certificate::new(&generators::goldberg(7).unwrap(), goldberg_triple(7).unwrap().iter()).to_json();
        let b = Certificate::new(&generators::goldberg(7).unwrap(), goldberg_triple(7).unwrap().iter()).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn parsing() {
        assert_eq!("flower:7".parse::<Family>().unwrap(), Family::Flower(7));
        assert_eq!("petersen".parse::<Family>().unwrap().to_string(), "petersen");
        assert!("goldberg".parse::<Family>().is_err());
        assert!(matches!(flower_triple(4), Err(FamilyError::BadParameter(_))));
        assert!(matches!(Family::Goldberg(1).triple(), Err(FamilyError::BadParameter(_))));
    }
}
