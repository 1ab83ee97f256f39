//! Sweeping the embedded corpus for bridgeless graphs without a compatible
//! triple.

use copnc::corpus;
use copnc::search::{conjecture_sweep, SweepCheck, SweepInput};

fn main() {
    let inputs: Vec<SweepInput> =
        corpus::up_to_10().into_iter().map(|c| SweepInput { id: c.id, graph: Ok(c.graph) }).collect();
    let recs = conjecture_sweep(&inputs, SweepCheck::BridgelessTriple, 2);
    let bridgeless: Vec<_> = recs.iter().filter(|r| r.bridgeless == Some(true)).collect();
    let nodes: u64 = bridgeless.iter().map(|r| r.nodes).sum();
    println!("{} graphs, {} bridgeless, {} search nodes", recs.len(), bridgeless.len(), nodes);
    let hardest = bridgeless.iter().max_by_key(|r| r.nodes).unwrap();
    println!("hardest: {} with {} nodes", hardest.id, hardest.nodes);
    let counter: Vec<_> = recs.iter().filter(|r| r.is_counterexample()).map(|r| &r.id).collect();
    println!("counterexamples: {counter:?}");
}
