//! Writing a certificate, reading it back and validating it.

use copnc::cert::Certificate;
use copnc::construct::bipartite_triple;
use copnc::graph::generators;

fn main() {
    let g = generators::k33();
    let t = bipartite_triple(&g).unwrap();
    let cert = Certificate::new(&g, t.partitions()).with_coloring(t.coloring().colors());
    let path = std::env::temp_dir().join("k33-triple.json");
    std::fs::write(&path, cert.to_json()).unwrap();
    println!("wrote {}", path.display());

    let back = Certificate::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let report = back.check(Some(&g)).unwrap();
    println!("valid={} profiles {:?}", report.valid, report.partitions.iter().map(|p| &p.profile).collect::<Vec<_>>());

    // two partitions sharing a trail no longer partition the edges
    let mut bad = back.clone();
    bad.partitions[1][0] = bad.partitions[0][0].clone();
    let report = bad.check(None).unwrap();
    println!("tampered: valid={}", report.valid);
    for p in report.partitions.iter().filter(|p| !p.problems.is_empty()) {
        println!("  partition {}: {:?}", p.index, p.problems);
    }
}
