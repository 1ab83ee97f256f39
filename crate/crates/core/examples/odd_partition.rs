//! A normal odd partition from a perfect matching: each matching edge is
//! glued to the outgoing edges of its ends in an oriented 2-factor.

use copnc::construct::{nop_from_matching, Orientation};
use copnc::graph::{generators, perfect_matchings};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = generators::petersen();
    let m = perfect_matchings(&g).next().expect("Petersen has a perfect matching");
    let o = Orientation::random(&g, &m, &mut ChaCha8Rng::seed_from_u64(1));
    let p = nop_from_matching(&g, &m, Some(&o)).expect("orientation fits the matching");

    println!("matching: {:?}", m.edges());
    for t in p.trails() {
        println!("trail {:?} edges {:?} odd edges {:?}", t.vertices(), t.edges(), t.odd_edges());
    }
    let s = p.stats();
    println!("profile {:?}, balance {}", s.profile(), s.balance());
    assert_eq!(p.associated_matching().unwrap(), m);
    println!("odd edges give back the matching: conformal = {}", p.is_conformal(&m));
    for v in g.vertices().take(3) {
        println!("{v} marks edge {:?}", p.marked(v));
    }
}
