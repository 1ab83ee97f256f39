//! Embedded catalogs of connected cubic graphs, up to isomorphism.
//!
//! | file | contents | count |
//! |---|---|---|
//! | `simple_n{4,6,8,10,12}.g6` | simple | 1, 2, 5, 19, 85 |
//! | `multi_n{2,4,6,8,10}.edges` | loops and parallel edges allowed | 2, 5, 17, 71, 388 |
//! | `loopless_n12.edges` | parallel edges allowed, no loops | 509 |
//!
//! At 12 vertices only loopless graphs are stored: a graph with a loop has
//! a bridge, which already decides every question asked of the corpus.

use crate::graph::io::{parse_edge_lists, parse_graph6};
use crate::graph::CubicGraph;

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    /// `<file stem>#<index>`
    pub id: String,
    pub graph: CubicGraph,
}

const SIMPLE: [(usize, &str); 5] = [
    (4, include_str!("../data/simple_n4.g6")),
    (6, include_str!("../data/simple_n6.g6")),
    (8, include_str!("../data/simple_n8.g6")),
    (10, include_str!("../data/simple_n10.g6")),
    (12, include_str!("../data/simple_n12.g6")),
];

const MULTI: [(usize, &str); 5] = [
    (2, include_str!("../data/multi_n2.edges")),
    (4, include_str!("../data/multi_n4.edges")),
    (6, include_str!("../data/multi_n6.edges")),
    (8, include_str!("../data/multi_n8.edges")),
    (10, include_str!("../data/multi_n10.edges")),
];

const LOOPLESS_12: &str = include_str!("../data/loopless_n12.edges");

fn tag(stem: &str, graphs: impl IntoIterator<Item = CubicGraph>) -> Vec<CorpusGraph> {
    graphs.into_iter().enumerate().map(|(i, graph)| CorpusGraph { id: format!("{stem}#{i}"), graph }).collect()
}

fn edges(text: &str) -> impl Iterator<Item = CubicGraph> + '_ {
    parse_edge_lists(text).into_iter().map(|g| g.expect("embedded corpus parses"))
}

/// Simple graphs on `n` vertices (n even, 4..=12).
pub fn simple(n: usize) -> Vec<CorpusGraph> {
    SIMPLE
        .iter()
        .filter(|(k, _)| *k == n)
        .flat_map(|(k, text)| {
            let graphs =
                text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l).expect("embedded corpus parses"));
            tag(&format!("simple_n{k}"), graphs)
        })
        .collect()
}

/// All graphs on `n` vertices, loops and parallel edges included (n even, 2..=10).
pub fn multi(n: usize) -> Vec<CorpusGraph> {
    MULTI.iter().filter(|(k, _)| *k == n).flat_map(|(k, text)| tag(&format!("multi_n{k}"), edges(text))).collect()
}

/// Loopless graphs on 12 vertices.
pub fn loopless_12() -> Vec<CorpusGraph> {
    tag("loopless_n12", edges(LOOPLESS_12))
}

/// Every graph with at most 10 vertices.
pub fn up_to_10() -> Vec<CorpusGraph> {
    (1..=5).flat_map(|k| multi(2 * k)).collect()
}

/// Every graph with at most 10 vertices and every loopless one on 12.
pub fn up_to_12() -> Vec<CorpusGraph> {
    let mut all = up_to_10();
    all.extend(loopless_12());
    all
}

/// Simple graphs with at most 10 vertices.
pub fn simple_up_to_10() -> Vec<CorpusGraph> {
    [4, 6, 8, 10].into_iter().flat_map(simple).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let s: Vec<usize> = [4, 6, 8, 10, 12].iter().map(|&n| simple(n).len()).collect();
        assert_eq!(s, vec![1, 2, 5, 19, 85]);
        let m: Vec<usize> = [2, 4, 6, 8, 10].iter().map(|&n| multi(n).len()).collect();
        assert_eq!(m, vec![2, 5, 17, 71, 388]);
        assert_eq!(loopless_12().len(), 509);
    }

    #[test]
    fn shapes() {
        for c in up_to_12() {
            assert!(c.graph.is_connected(), "{}", c.id);
        }
        for n in [4, 6, 8, 10, 12] {
            assert!(simple(n).iter().all(|c| c.graph.is_simple() && c.graph.n() == n));
        }
        assert!(loopless_12().iter().all(|c| !c.graph.has_loop()));
        let simple12 = loopless_12().iter().filter(|c| c.graph.is_simple()).count();
        assert_eq!(simple12, 85);
    }
}
