//! Exhaustive search for compatible triples.

use copnc::graph::generators;
use copnc::search::{find_compatible_triple, find_compatible_triple_with, for_each_compatible_triple, SearchOptions};

fn main() {
    let k4 = generators::k4();
    let mut longest = Vec::new();
    for_each_compatible_triple(&k4, SearchOptions::default(), |t| {
        longest.push(t.iter().map(|p| p.stats().profile()[0]).max().unwrap());
        true
    });
    println!("K4: {} triples, shortest longest trail {}", longest.len(), longest.iter().min().unwrap());

    // no triple of length-3 partitions on K4
    let (t, out) = find_compatible_triple_with(&k4, SearchOptions { max_len: Some(3), ..Default::default() });
    println!("K4 with trails of length 3 only: {:?} ({out:?})", t.map(|_| ()));

    let g = generators::petersen();
    let t = find_compatible_triple(&g).unwrap();
    println!("Petersen: profiles {:?}", t.iter().map(|p| p.stats().profile()).collect::<Vec<_>>());

    let bridged = generators::two_blocks_with_bridge();
    println!("graph with a bridge: {:?}", find_compatible_triple(&bridged).map(|_| ()));
}
