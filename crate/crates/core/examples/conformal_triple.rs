//! Conformal compatible triples on 3-edge-colorable graphs. Digons and
//! triangles are contracted first and the triple is rebuilt on the way back.

use copnc::construct::{conformal_triple_general_with, ConformalOptions};
use copnc::graph::{generators, Color};
use copnc::search::audit_triple;

fn main() {
    let opts = ConformalOptions::default();
    for name in ["prism", "cube", "k33", "theta"] {
        let g = generators::generate(name, None).unwrap();
        let (t, red) = conformal_triple_general_with(&g, &opts).expect("3-edge-colorable");
        t.check(&g).unwrap();
        audit_triple(&g, t.partitions()).unwrap();
        println!(
            "{name}: contractions {:?}, core of {} vertices solved by {:?}",
            red.steps, red.core_vertices, red.core_path
        );
        for c in Color::ALL {
            println!("  {c}: odd edges = color class {c}: {:?}", t.coloring().class(c).edges());
        }
    }
    match conformal_triple_general_with(&generators::petersen(), &opts) {
        Ok(_) => unreachable!("Petersen is not 3-edge-colorable"),
        Err(e) => println!("petersen: {e}"),
    }
}
