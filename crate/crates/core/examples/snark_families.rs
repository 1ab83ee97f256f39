//! Compatible triples on the Petersen graph and the flower and Goldberg
//! snarks, checked with the full triple audit.

use copnc::cert::Certificate;
use copnc::families::Family;
use copnc::search::audit_triple;

fn main() {
    for name in ["petersen", "flower:3", "flower:7", "goldberg:5", "goldberg:15"] {
        let fam: Family = name.parse().unwrap();
        let g = fam.graph().unwrap();
        let t = fam.triple().unwrap();
        let audit = audit_triple(&g, [&t[0], &t[1], &t[2]]).unwrap();
        let report = Certificate::new(&g, t.iter()).check(Some(&g)).unwrap();
        println!(
            "{fam}: n={} valid={} longest trails {:?} edges checked {}",
            g.n(),
            report.valid,
            t.iter().map(|p| p.stats().profile()[0]).collect::<Vec<_>>(),
            audit.checked
        );
    }
}
