mod common;

use common::*;
use kt_core::families::{gen_ladder, gen_named, NamedGraph};
use kt_core::graph::Graph;
use kt_core::io::{parse_graph, parse_orientation, write_graph, write_orientation};
use kt_core::orientation::{glue_at_edge, Orientation};
use kt_core::verify::verify_kt;
use proptest::prelude::*;

#[test]
fn bridges_match_removal_oracle_on_random_graphs() {
    let mut rng = seeded(0xB41D);
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        let g = random_graph(&mut rng, n, 30);
        assert_eq!(g.bridges(), naive_bridges(&g), "graph {g:?}");
    }
}

#[test]
fn girth_matches_cycle_enumeration_exhaustively() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert_eq!(g.girth(), naive_girth(&g), "graph {g:?}");
        }
    }
    let mut rng = seeded(0x91272);
    for _ in 0..300 {
        let n = rng.random_range(4..=8);
        let g = random_graph(&mut rng, n, 40);
        assert_eq!(g.girth(), naive_girth(&g), "graph {g:?}");
    }
}

#[test]
fn petersen_girth_is_five() {
    assert_eq!(gen_named(NamedGraph::Petersen).girth(), Some(5));
}

#[test]
fn bipartition_of_three_ladder() {
    let (g, l) = gen_ladder(3);
    let (a, b) = g.bipartition().unwrap();
    // v1 v3 w2 on one side, w1 w3 v2 on the other.
    assert_eq!(a, vec![l.v[0], l.v[2], l.w[1]]);
    assert_eq!(b, vec![l.v[1], l.w[0], l.w[2]]);
}

#[test]
fn glue_ladder_to_five_cycle_stays_kt() {
    let (ladder, _) = gen_ladder(3);
    let ld = kt_core::solve::solve_exact(&ladder, None).unwrap();
    let ld = ld.found().unwrap();
    let c5 = gen_named(NamedGraph::Cycle(5));
    let cd = kt_core::solve::solve_exact(&c5, None).unwrap();
    let cd = cd.found().unwrap();
    let arc1 = ld.arc(0);
    let arc2 = cd.arc(0);
    let glued = glue_at_edge(ld, arc1, cd, arc2).unwrap();
    assert_eq!(glued.orientation.n(), ld.n() + cd.n() - 2);
    assert_eq!(glued.orientation.m(), ld.m() + cd.m() - 1);
    assert!(verify_kt(&glued.orientation).is_kt());
}

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (1u32..=9).prop_flat_map(|n| {
        let max_edges = (n * (n - 1) / 2) as usize;
        proptest::collection::vec(any::<bool>(), max_edges).prop_map(move |bits| {
            let pairs: Vec<(u32, u32)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .collect();
            let edges: Vec<(u32, u32)> = pairs
                .into_iter()
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edges_appear_once_normalized_and_twice_in_adjacency(g in arbitrary_graph()) {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in g.edges() {
            prop_assert!(u < v);
            prop_assert!(seen.insert((u, v)));
        }
        let adjacency_entries: usize = g.vertices().map(|v| g.neighbors(v).len()).sum();
        prop_assert_eq!(adjacency_entries, 2 * g.m());
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                prop_assert!(g.neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn graph_files_round_trip_bit_exactly(g in arbitrary_graph()) {
        let text = write_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(write_graph(&parsed), text);
    }

    #[test]
    fn orientation_files_round_trip(g in arbitrary_graph(), mask: u64) {
        let d = Orientation::from_mask(g, mask);
        let text = write_orientation(&d);
        let parsed = parse_orientation(&text).unwrap();
        prop_assert_eq!(&parsed, &d);
        prop_assert_eq!(write_orientation(&parsed), text);
    }

    #[test]
    fn reverse_is_an_involution(g in arbitrary_graph(), mask: u64) {
        let d = Orientation::from_mask(g, mask);
        prop_assert_eq!(d.reverse().reverse(), d);
    }

    #[test]
    fn glue_counts_hold(ga in arbitrary_graph(), gb in arbitrary_graph(), ma: u64, mb: u64) {
        let da = Orientation::from_mask(ga, ma);
        let db = Orientation::from_mask(gb, mb);
        prop_assume!(da.m() >= 1 && db.m() >= 1);
        let glued = glue_at_edge(&da, da.arc(0), &db, db.arc(0)).unwrap();
        prop_assert_eq!(glued.orientation.n(), da.n() + db.n() - 2);
        prop_assert_eq!(glued.orientation.m() as u64, (da.m() + db.m() - 1) as u64);
    }
}
