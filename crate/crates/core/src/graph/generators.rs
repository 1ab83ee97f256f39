//! Named cubic graphs with fixed vertex and edge numbering.
//!
//! | name       | vertices                                                     |
//! |------------|--------------------------------------------------------------|
//! | `theta`    | 0, 1 joined by three parallel edges                          |
//! | `k4`       | 0..4, edges in lexicographic order                           |
//! | `k33`      | parts {0,1,2} and {3,4,5}                                     |
//! | `cube`     | 3-bit words, adjacent when they differ in one bit            |
//! | `prism`    | triangles 0,1,2 and 3,4,5, rungs i to i+3                    |
//! | `petersen` | outer cycle 0..5, spokes i to i+5, inner pentagram 5+i to 5+(i+2)%5 |
//! | `flower:k` | u_i = i-1, v_i = k+i-1, w_i = 2k+i-1, t_i = 3k+i-1 (1-based i) |
//! | `goldberg:k` | v_i^j = 8j+i-1 for i in 1..=8, j in 0..k                    |
//!
//! Flower edges: the cycle u_1..u_k, the cycle w_1..w_k t_1..t_k, then the
//! spokes v_i u_i, v_i w_i, v_i t_i, in that order.
//!
//! Goldberg block j: v6v5, v5v1, v5v2, v1v3, v1v7, v2v4, v2v8, v3v4, v7v8,
//! then between consecutive blocks (superscripts mod k) v6^j v6^(j+1),
//! v4^j v3^(j+1), v7^j v8^(j+1). The v6 vertices form a k-cycle and each
//! outer chain a cycle of length 2k. Wiring the chains v4-v3 and v8-v7
//! instead gives a 3-edge-colorable graph, which the snark tests reject.

use super::{CubicGraph, GraphError};

fn build(n: usize, edges: &[(u32, u32)]) -> CubicGraph {
    CubicGraph::new(n, edges).expect("generator produces a cubic graph")
}

pub fn theta() -> CubicGraph {
    build(2, &[(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> CubicGraph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> CubicGraph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    build(6, &e)
}

pub fn cube() -> CubicGraph {
    let mut e = Vec::new();
    for a in 0u32..8 {
        for bit in 0..3 {
            let b = a ^ (1 << bit);
            if a < b {
                e.push((a, b));
            }
        }
    }
    build(8, &e)
}

pub fn prism() -> CubicGraph {
    build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn petersen() -> CubicGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        e.push((i, i + 5));
    }
    for i in 0..5 {
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

fn check_odd(k: usize) -> Result<(), GraphError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(GraphError::BadParameter(format!("k must be odd and at least 3, got {k}")));
    }
    Ok(())
}

pub fn flower(k: usize) -> Result<CubicGraph, GraphError> {
    check_odd(k)?;
    let k32 = k as u32;
    let u = |i: u32| i;
    let v = |i: u32| k32 + i;
    let w = |i: u32| 2 * k32 + i;
    let t = |i: u32| 3 * k32 + i;
    let mut e = Vec::with_capacity(6 * k);
    for i in 0..k32 {
        e.push((u(i), u((i + 1) % k32)));
    }
    // w_1..w_k t_1..t_k as one cycle
    let outer: Vec<u32> = (0..k32).map(w).chain((0..k32).map(t)).collect();
    for i in 0..outer.len() {
        e.push((outer[i], outer[(i + 1) % outer.len()]));
    }
    for i in 0..k32 {
        e.push((v(i), u(i)));
        e.push((v(i), w(i)));
        e.push((v(i), t(i)));
    }
    Ok(build(4 * k, &e))
}

/// Index of v_i^j (i is 1-based as in the block drawing).
pub fn goldberg_vertex(k: usize, i: u32, j: usize) -> u32 {
    (8 * (j % k)) as u32 + i - 1
}

pub fn goldberg(k: usize) -> Result<CubicGraph, GraphError> {
    check_odd(k)?;
    let x = |i: u32, j: usize| goldberg_vertex(k, i, j);
    let mut e = Vec::with_capacity(12 * k);
    for j in 0..k {
        for (a, b) in [(6, 5), (5, 1), (5, 2), (1, 3), (1, 7), (2, 4), (2, 8), (3, 4), (7, 8)] {
            e.push((x(a, j), x(b, j)));
        }
    }
    for j in 0..k {
        e.push((x(6, j), x(6, j + 1)));
        e.push((x(4, j), x(3, j + 1)));
        e.push((x(7, j), x(8, j + 1)));
    }
    Ok(build(8 * k, &e))
}

/// Two copies of K4 with one edge subdivided, the subdivision vertices
/// joined by a bridge. Vertices 0..5 and 5..10; the bridge is the last edge.
pub fn two_blocks_with_bridge() -> CubicGraph {
    let mut e = Vec::new();
    for base in [0u32, 5] {
        // K4 on base..base+4 minus (base, base+1), plus the subdivision vertex base+4
        e.extend([
            (base, base + 2),
            (base, base + 3),
            (base + 1, base + 2),
            (base + 1, base + 3),
            (base + 2, base + 3),
            (base, base + 4),
            (base + 1, base + 4),
        ]);
    }
    e.push((4, 9));
    build(10, &e)
}

/// Centre vertex joined by three bridges to three subdivided K4 blocks.
/// The smallest simple cubic graph with no perfect matching (16 vertices).
pub fn claw_of_bridges() -> CubicGraph {
    let mut e = Vec::new();
    for b in 0..3u32 {
        let base = 1 + 5 * b;
        e.extend([
            (base, base + 2),
            (base, base + 3),
            (base + 1, base + 2),
            (base + 1, base + 3),
            (base + 2, base + 3),
            (base, base + 4),
            (base + 1, base + 4),
            (0, base + 4),
        ]);
    }
    build(16, &e)
}

/// Resolves `name` or `name:k` for the named families above.
pub fn generate(family: &str, k: Option<usize>) -> Result<CubicGraph, GraphError> {
    let need_k = || k.ok_or_else(|| GraphError::BadParameter(format!("{family} needs a parameter")));
    let no_k = |g: CubicGraph| match k {
        Some(_) => Err(GraphError::BadParameter(format!("{family} takes no parameter"))),
        None => Ok(g),
    };
    match family {
        "theta" => no_k(theta()),
        "k4" => no_k(k4()),
        "k33" => no_k(k33()),
        "cube" => no_k(cube()),
        "prism" => no_k(prism()),
        "petersen" => no_k(petersen()),
        "flower" => flower(need_k()?),
        "goldberg" => goldberg(need_k()?),
        _ => Err(GraphError::BadParameter(format!("unknown family {family}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridges, chromatic_index};

    #[test]
    fn sizes() {
        assert_eq!(flower(3).unwrap().n(), 12);
        assert_eq!(flower(3).unwrap().m(), 18);
        assert_eq!(goldberg(3).unwrap().n(), 24);
        assert_eq!(petersen().m(), 15);
        assert!(flower(4).is_err());
        assert!(goldberg(1).is_err());
    }

    #[test]
    fn all_simple() {
        for g in [k4(), k33(), cube(), prism(), petersen(), flower(3).unwrap(), goldberg(3).unwrap()] {
            assert!(g.is_simple() && g.is_connected(), "{g:?}");
        }
    }

    #[test]
    fn snarks_are_snarks() {
        for k in [5, 7, 9] {
            let f = flower(k).unwrap();
            assert!(bridges(&f).is_empty());
            assert_eq!(chromatic_index(&f), 4, "flower {k}");
            let g = goldberg(k).unwrap();
            assert!(bridges(&g).is_empty());
            assert_eq!(chromatic_index(&g), 4, "goldberg {k}");
        }
    }

    #[test]
    fn generate_by_name() {
        assert_eq!(generate("flower", Some(5)).unwrap().n(), 20);
        assert!(generate("petersen", Some(3)).is_err());
        assert!(generate("goldberg", None).is_err());
        assert!(generate("dodecahedron", None).is_err());
    }
}
