use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use copnc::cert::Certificate;
use copnc::construct::{nop_from_matching, Orientation};
use copnc::corpus::{self, CorpusGraph};
use copnc::families::{flower_triple, goldberg_triple};
use copnc::graph::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use copnc::graph::{perfect_matchings, CubicGraph, PerfectMatching, VertexId};
use copnc::partition::{validate_normal, Marking, NormalPartition};
use copnc::switching::{conformal_switch, odd_switches, switch_candidates};

fn graphs() -> &'static [CorpusGraph] {
    static G: OnceLock<Vec<CorpusGraph>> = OnceLock::new();
    G.get_or_init(corpus::up_to_10)
}

/// A corpus graph with a perfect matching and a partition built from it
/// under a random orientation.
fn odd_partition(gi: usize, mi: usize, seed: u64) -> Option<(CubicGraph, PerfectMatching, NormalPartition)> {
    let g = graphs()[gi % graphs().len()].graph.clone();
    let ms: Vec<PerfectMatching> = perfect_matchings(&g).take(16).collect();
    if ms.is_empty() {
        return None;
    }
    let m = ms[mi % ms.len()].clone();
    let o = Orientation::random(&g, &m, &mut ChaCha8Rng::seed_from_u64(seed));
    let p = nop_from_matching(&g, &m, Some(&o)).unwrap();
    Some((g, m, p))
}

fn odd_edge_count(g: &CubicGraph, p: &NormalPartition, v: VertexId) -> usize {
    let odd: Vec<_> = p.trails().iter().flat_map(|t| t.odd_edges()).collect();
    g.slots(v).iter().filter(|s| odd.contains(&s.edge)).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matching_construction_invariants(gi in 0usize..10_000, mi in 0usize..16, seed in any::<u64>()) {
        let Some((g, m, p)) = odd_partition(gi, mi, seed) else { return Ok(()) };
        prop_assert_eq!(p.len(), g.n() / 2);
        prop_assert_eq!(p.trails().iter().map(|t| t.len()).sum::<usize>(), 3 * g.n() / 2);
        prop_assert!(p.trails().iter().all(|t| t.len() == 3));
        prop_assert_eq!(p.stats().balance(), 0);
        prop_assert_eq!(p.associated_matching().unwrap(), m.clone());
        prop_assert!(p.is_conformal(&m));
        for v in g.vertices() {
            prop_assert_eq!(odd_edge_count(&g, &p, v), 1);
        }
    }

    #[test]
    fn marking_and_trails_round_trip(gi in 0usize..10_000, picks in proptest::collection::vec(0usize..3, 10)) {
        let g = &graphs()[gi % graphs().len()].graph;
        let slots = g.vertices().map(|v| g.slots(v)[picks[v.index()]]).collect();
        let m = Marking::new(g, slots).unwrap();
        match NormalPartition::from_marking(g, m.clone()) {
            Ok(p) => {
                prop_assert_eq!(p.marking(), &m);
                let again = validate_normal(g, p.trails().to_vec()).unwrap();
                prop_assert_eq!(&again, &p);
                prop_assert_eq!(p.stats().balance(), 0);
                let c = Certificate::new(g, [&p]);
                let back = Certificate::parse(&c.to_json()).unwrap();
                prop_assert_eq!(&back, &c);
                prop_assert!(back.check(Some(g)).unwrap().partitions[0].normal);
            }
            Err(_) => prop_assert!(!m.is_acyclic(g)),
        }
    }

    #[test]
    fn switches_are_reversible(gi in 0usize..10_000, seed in any::<u64>(), walk in proptest::collection::vec(any::<prop::sample::Index>(), 1..12)) {
        let Some((g, _, mut p)) = odd_partition(gi, 0, seed) else { return Ok(()) };
        for ix in walk {
            let v = VertexId(ix.index(g.n()) as u32);
            let cands = switch_candidates(&g, &p, v);
            if cands.is_empty() {
                continue;
            }
            let (_, q) = cands[ix.index(cands.len())].clone();
            for u in g.vertices().filter(|&u| u != v) {
                prop_assert_eq!(p.marked_slot(u), q.marked_slot(u));
            }
            // re-ending a trail through its own loop only reverses the loop
            let on_loop = g.slots(v).iter().any(|s| g.is_loop(s.edge));
            prop_assert!(p.marked_slot(v) != q.marked_slot(v) || on_loop);
            prop_assert!(switch_candidates(&g, &q, v).iter().any(|(_, r)| *r == p));
            prop_assert_eq!(q.stats().balance(), 0);
            p = q;
        }
    }

    #[test]
    fn odd_and_conformal_switches_keep_their_class(gi in 0usize..10_000, mi in 0usize..16, seed in any::<u64>(), vi in any::<prop::sample::Index>()) {
        let Some((g, m, p)) = odd_partition(gi, mi, seed) else { return Ok(()) };
        let v = VertexId(vi.index(g.n()) as u32);
        for q in odd_switches(&g, &p, v) {
            prop_assert!(q.is_odd());
            prop_assert!(q.associated_matching().is_ok());
        }
        if let Ok(q) = conformal_switch(&g, &p, &m, v) {
            prop_assert!(q.is_conformal(&m));
            prop_assert_eq!(q.associated_matching().unwrap(), m);
        }
    }

    #[test]
    fn graph_text_formats_round_trip(gi in 0usize..10_000) {
        let g = &graphs()[gi % graphs().len()].graph;
        let back = parse_edge_list(&to_edge_list(g)).unwrap();
        prop_assert!(back == *g);
        match to_graph6(g) {
            Some(line) => {
                prop_assert!(g.is_simple());
                let h = parse_graph6(&line).unwrap();
                prop_assert_eq!(h.n(), g.n());
                prop_assert_eq!(to_graph6(&h), Some(line));
            }
            None => prop_assert!(!g.is_simple()),
        }
    }

    #[test]
    fn family_triples_are_deterministic(half in 1usize..8) {
        let k = 2 * half + 1;
        prop_assert!(flower_triple(k).unwrap() == flower_triple(k).unwrap());
        prop_assert!(goldberg_triple(k).unwrap() == goldberg_triple(k).unwrap());
    }
}
