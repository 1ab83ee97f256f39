//! Switching moves and the classes they generate.

use copnc::construct::nop_any;
use copnc::graph::{generators, perfect_matchings, VertexId};
use copnc::switching::{all_markings, classes, conformal_switch, odd_switches, switch_class, MoveKind};

fn main() {
    let g = generators::k4();
    let p = nop_any(&g).unwrap();
    let v = VertexId(0);
    println!("K4: odd switches at {v}: {}", odd_switches(&g, &p, v).len());
    let c = switch_class(&g, &p, &MoveKind::Odd, 10_000).unwrap();
    let all = all_markings(&g, &MoveKind::Odd, 10_000).unwrap();
    println!("K4: odd class of size {} (diameter {}) out of {} odd partitions", c.size, c.diameter, all.len());

    // conformal switching on theta splits into two classes
    let theta = generators::theta();
    for m in perfect_matchings(&theta) {
        let kind = MoveKind::Conformal(m.clone());
        let nodes = all_markings(&theta, &kind, 100).unwrap();
        println!(
            "theta, matching {:?}: {} conformal partitions, {} classes",
            m.edges(),
            nodes.len(),
            classes(&theta, &nodes, &kind).len()
        );
    }

    let cube = generators::cube();
    let m = perfect_matchings(&cube).next().unwrap();
    let p = copnc::construct::nop_from_matching(&cube, &m, None).unwrap();
    for v in cube.vertices() {
        match conformal_switch(&cube, &p, &m, v) {
            Ok(q) => println!("cube: conformal switch at {v} moves the mark to {:?}", q.marked(v)),
            Err(e) => println!("cube: {e}"),
        }
    }
}
