//! Loading cubic graphs and asking the basic structural questions.

use copnc::graph::io::{parse_edge_list, parse_graph6, to_graph6};
use copnc::graph::{bridges, chromatic_index, generators, is_bipartite, perfect_matchings};

fn main() {
    let k4 = parse_graph6("C~").expect("graph6 of K4");
    // theta with a pendant digon: loops and parallel edges are fine here
    let multi = parse_edge_list("4 6\n0 1\n0 1\n0 2\n1 3\n2 3\n2 3\n").expect("edge list");

    for (name, g) in
        [("K4", k4), ("digon chain", multi), ("Petersen", generators::petersen()), ("K3,3", generators::k33())]
    {
        println!(
            "{name:12} n={:2} m={:2} simple={} bipartite={} bridges={} matchings={} chromatic index={} graph6={:?}",
            g.n(),
            g.m(),
            g.is_simple(),
            is_bipartite(&g).is_some(),
            bridges(&g).len(),
            perfect_matchings(&g).count(),
            chromatic_index(&g),
            to_graph6(&g),
        );
    }

    let g = generators::two_blocks_with_bridge();
    let b: Vec<_> = bridges(&g).iter().map(|e| g.endpoints(*e)).collect();
    println!("bridged graph: bridges at {b:?}");
}
