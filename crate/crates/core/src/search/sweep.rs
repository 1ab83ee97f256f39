use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::graph::{bridges, is_bipartite, perfect_matchings, CubicGraph};
use crate::partition::NormalPartition;

use super::{find_nop, odd_marking_by_search, Outcome, SearchOptions, TripleSearch};

/// First triple with its outcome and node count.
fn search(g: &CubicGraph, opts: SearchOptions) -> (Option<[NormalPartition; 3]>, Outcome, u64) {
    let mut s = TripleSearch::new(g, opts);
    let mut found = None;
    let out = s.run(|ms| {
        found = Some(ms.clone().map(|m| NormalPartition::from_marking(g, m).expect("search output is acyclic")));
        false
    });
    let out = if found.is_some() { Outcome::Complete } else { out };
    (found, out, s.nodes())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepCheck {
    /// bridgeless graphs admit a compatible triple
    BridgelessTriple,
    /// an all-length-3 compatible triple exists iff the graph is bipartite
    ShortTripleIffBipartite,
    /// a normal odd partition exists iff a perfect matching does
    OddPartitionIffMatching,
}

#[derive(Clone, Debug)]
pub struct SweepInput {
    pub id: String,
    /// parse failures travel with their record instead of aborting the sweep
    pub graph: Result<CubicGraph, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRecord {
    pub id: String,
    pub check: SweepCheck,
    pub n: Option<usize>,
    pub bridgeless: Option<bool>,
    /// the searched object exists (triple, length-3 triple, or partition)
    pub found: Option<bool>,
    /// what the statement predicts (bridgeless, bipartite, has a matching)
    pub expected: Option<bool>,
    pub agrees: Option<bool>,
    /// `found == false` is definitive: the search space was exhausted
    pub exhausted: bool,
    pub nodes: u64,
    pub certificate: Option<Certificate>,
    pub elapsed_ms: f64,
    pub error: Option<String>,
}

impl SweepRecord {
    /// A bridgeless graph whose exhausted search found no triple.
    pub fn is_counterexample(&self) -> bool {
        self.check == SweepCheck::BridgelessTriple
            && self.bridgeless == Some(true)
            && self.found == Some(false)
            && self.exhausted
    }
}

fn run_one(input: &SweepInput, check: SweepCheck) -> SweepRecord {
    let t0 = Instant::now();
    let mut rec = SweepRecord {
        id: input.id.clone(),
        check,
        n: None,
        bridgeless: None,
        found: None,
        expected: None,
        agrees: None,
        exhausted: false,
        nodes: 0,
        certificate: None,
        elapsed_ms: 0.0,
        error: None,
    };
    let g = match &input.graph {
        Ok(g) => g,
        Err(e) => {
            rec.error = Some(e.clone());
            return rec;
        }
    };
    rec.n = Some(g.n());
    let bridgeless = bridges(g).is_empty();
    rec.bridgeless = Some(bridgeless);
    match check {
        SweepCheck::BridgelessTriple => {
            rec.expected = Some(bridgeless);
            if bridgeless {
                let (t, out, nodes) = search(g, SearchOptions::default());
                rec.nodes = nodes;
                rec.exhausted = out == Outcome::Complete && t.is_none();
                if let Some(t) = t {
                    let c = Certificate::new(g, t.iter());
                    let ok = c.check(Some(g)).is_ok_and(|r| r.valid);
                    rec.found = Some(ok);
                    if !ok {
                        rec.error = Some("witness failed validation".into());
                    }
                    rec.certificate = Some(c);
                } else {
                    rec.found = Some(false);
                    log::error!("{}: bridgeless graph without a compatible triple", input.id);
                }
                rec.agrees = rec.found;
            }
        }
        SweepCheck::ShortTripleIffBipartite => {
            let opts = SearchOptions { max_len: Some(3), ..SearchOptions::default() };
            let (t, out, nodes) = search(g, opts);
            rec.nodes = nodes;
            rec.exhausted = out == Outcome::Complete && t.is_none();
            rec.found = Some(t.is_some());
            rec.expected = Some(is_bipartite(g).is_some());
            if let Some(t) = t {
                rec.certificate = Some(Certificate::new(g, t.iter()));
            }
            rec.agrees = Some(rec.found == rec.expected && (t_ok(&rec.certificate, g)));
        }
        SweepCheck::OddPartitionIffMatching => {
            let p = find_nop(g);
            let has_pm = perfect_matchings(g).next().is_some();
            // independent of matchings: direct search over markings
            let direct = odd_marking_by_search(g).is_some();
            rec.exhausted = !direct;
            rec.found = Some(p.is_some());
            rec.expected = Some(has_pm);
            if let Some(p) = &p {
                rec.certificate = Some(Certificate::new(g, [p]));
            }
            let valid = p.as_ref().is_none_or(|p| p.is_odd() && p.trails().iter().all(|t| t.len() == 3));
            rec.agrees = Some(p.is_some() == has_pm && direct == has_pm && valid && t_ok(&rec.certificate, g));
        }
    }
    rec.elapsed_ms = t0.elapsed().as_secs_f64() * 1e3;
    rec
}

fn t_ok(c: &Option<Certificate>, g: &CubicGraph) -> bool {
    c.as_ref().is_none_or(|c| c.check(Some(g)).is_ok_and(|r| r.valid))
}

/// Runs `check` on every input with `jobs` worker threads; records come
/// back in input order.
pub fn conjecture_sweep(inputs: &[SweepInput], check: SweepCheck, jobs: usize) -> Vec<SweepRecord> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(|| inputs.par_iter().map(|i| run_one(i, check)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn inputs() -> Vec<SweepInput> {
        vec![
            SweepInput { id: "k33".into(), graph: Ok(generators::k33()) },
            SweepInput { id: "k4".into(), graph: Ok(generators::k4()) },
            SweepInput { id: "bridge".into(), graph: Ok(generators::two_blocks_with_bridge()) },
            SweepInput { id: "junk".into(), graph: Err("bad graph6".into()) },
        ]
    }

    #[test]
    fn checks_on_a_small_batch() {
        let r = conjecture_sweep(&inputs(), SweepCheck::ShortTripleIffBipartite, 2);
        assert_eq!(r.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), vec!["k33", "k4", "bridge", "junk"]);
        assert_eq!(r[0].found, Some(true));
        assert_eq!(r[1].found, Some(false));
        assert!(r[..3].iter().all(|r| r.agrees == Some(true)));
        assert!(r[3].error.is_some());

        let r = conjecture_sweep(&inputs(), SweepCheck::BridgelessTriple, 1);
        assert!(r.iter().all(|r| !r.is_counterexample()));
        assert_eq!(r[2].bridgeless, Some(false));
        assert_eq!(r[2].found, None);

        let r = conjecture_sweep(&inputs(), SweepCheck::OddPartitionIffMatching, 3);
        assert!(r[..3].iter().all(|r| r.agrees == Some(true)));
    }
}
