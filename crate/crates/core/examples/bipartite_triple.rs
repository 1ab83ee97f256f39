//! Three compatible partitions with all trails of length 3 on a bipartite
//! cubic graph, and the obstruction on a non-bipartite one.

use copnc::construct::bipartite_triple;
use copnc::graph::generators;
use copnc::partition::compatibility_set;

fn main() {
    for (name, g) in [("K3,3", generators::k33()), ("cube", generators::cube()), ("K4", generators::k4())] {
        match bipartite_triple(&g) {
            Ok(t) => {
                let [a, b, c] = t.partitions();
                println!("{name}: profiles {:?}", t.partitions().map(|p| p.stats().profile()));
                println!(
                    "  agreement sets {:?} {:?} {:?}",
                    compatibility_set(a, b),
                    compatibility_set(a, c),
                    compatibility_set(b, c)
                );
            }
            Err(e) => println!("{name}: {e}"),
        }
    }
}
