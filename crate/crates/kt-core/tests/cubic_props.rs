mod common;

use common::*;
use kt_core::cubic::{classify_component, four_cycle_hypergraph, solve_cubic, ComponentTag};
use kt_core::families::{gen_ladder, gen_named, NamedGraph};
use kt_core::graph::{Graph, Vertex};
use kt_core::solve::solve_exact;
use kt_core::verify::verify_kt;
use rand::Rng;
use std::collections::BTreeSet;

fn agree(g: &Graph, label: &str) {
    let ours = solve_cubic(g).unwrap();
    let exact = solve_exact(g, None).unwrap();
    assert_eq!(
        ours.found().is_some(),
        exact.found().is_some(),
        "{label}: {g:?}"
    );
    if let Some(d) = ours.found() {
        assert!(verify_kt(d).is_kt(), "{label}");
    }
}

#[test]
fn agrees_with_exact_solver_on_random_subcubic_graphs() {
    let mut rng = seeded(0xC4B1C);
    for i in 0..150 {
        let n = rng.random_range(2..=12);
        let extra = rng.random_range(0..=4);
        let g = random_connected_subcubic(&mut rng, n, extra);
        agree(&g, &format!("random {i}"));
    }
}

#[test]
fn hyperedge_intersections_are_0_2_or_3() {
    let mut rng = seeded(0x834);
    let mut interesting = 0;
    let mut tries = 0;
    while interesting < 60 && tries < 4000 {
        tries += 1;
        let n = rng.random_range(4..=14);
        let g = random_connected_subcubic(&mut rng, n, 4);
        if g.has_triangle() {
            continue;
        }
        let h = four_cycle_hypergraph(&g).unwrap();
        if h.hyperedges.len() < 2 {
            continue;
        }
        interesting += 1;
        let sets: Vec<BTreeSet<Vertex>> = h
            .hyperedges
            .iter()
            .map(|w| w.iter().copied().collect())
            .collect();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let shared = sets[i].intersection(&sets[j]).count();
                assert!(
                    matches!(shared, 0 | 2 | 3),
                    "hyperedges share {shared} vertices in {g:?}"
                );
            }
        }
    }
    assert!(interesting >= 30, "need graphs with several four-cycles");
}

#[test]
fn classification_labelings_replay_on_random_graphs() {
    // classify_component verifies the labeling internally; this drives it
    // across random subcubic graphs and checks the advertised tag exists.
    let mut rng = seeded(0x1AB);
    let mut classified = 0;
    let mut tries = 0;
    while classified < 80 && tries < 4000 {
        tries += 1;
        let n = rng.random_range(4..=14);
        let g = random_connected_subcubic(&mut rng, n, 3);
        if g.has_triangle() {
            continue;
        }
        let h = four_cycle_hypergraph(&g).unwrap();
        for c in h.nontrivial_components() {
            let class = classify_component(&h, c).unwrap();
            classified += 1;
            // The labeling covers exactly the component's vertices.
            let labeled: BTreeSet<Vertex> = class.labeling.iter().map(|&(_, v)| v).collect();
            let comp: BTreeSet<Vertex> = h.components[c].iter().copied().collect();
            assert_eq!(labeled, comp);
        }
    }
    assert!(classified >= 40);
}

#[test]
fn one_component_outcomes_cover_the_whole_graph() {
    // If a component classifies as ladder-plus-two-edges, cube, or K33, it
    // must be the only component.
    for g in [gen_named(NamedGraph::Cube), gen_named(NamedGraph::K33), {
        let (lg, l) = gen_ladder(5);
        let mut edges = lg.edges().to_vec();
        edges.push((l.v[0], l.v[4]));
        edges.push((l.w[0], l.w[4]));
        Graph::from_edges(lg.n(), &edges).unwrap()
    }] {
        let h = four_cycle_hypergraph(&g).unwrap();
        let nontrivial: Vec<usize> = h.nontrivial_components().collect();
        assert_eq!(h.components.len(), 1);
        let tag = classify_component(&h, nontrivial[0]).unwrap().tag;
        assert!(matches!(
            tag,
            ComponentTag::Cube | ComponentTag::K33 | ComponentTag::LadderPlusTwoEdges { .. }
        ));
    }
}

#[test]
fn bridge_reassembly_is_sound() {
    // Two C4s joined by a bridge, plus a pendant path: the verdict must
    // match the exact solver and the assembled orientation must verify.
    let g = Graph::from_edges(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 4),
            (5, 6),
            (6, 7),
            (7, 8),
            (5, 8),
            (4, 5),
            (8, 9),
            (9, 10),
        ],
    )
    .unwrap();
    agree(&g, "bridged squares");
}

#[test]
fn disconnected_inputs_are_handled_per_component() {
    let g =
        Graph::from_edges(9, &[(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (5, 7)]).unwrap();
    // Second component is a triangle: the whole graph has no KT orientation.
    let out = solve_cubic(&g).unwrap();
    assert!(out.found().is_none());

    let h = Graph::from_edges(8, &[(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (7, 8)]).unwrap();
    let out = solve_cubic(&h).unwrap();
    assert!(out.found().is_some());
}

#[test]
fn large_all_singleton_piece_uses_the_coloring_path() {
    // C9 has nine singleton hypergraph components, forcing the contraction
    // and Brooks-coloring route.
    let g = gen_named(NamedGraph::Cycle(9));
    let out = solve_cubic(&g).unwrap();
    let d = out
        .found()
        .expect("odd cycles of length >= 5 admit KT orientations");
    assert!(verify_kt(d).is_kt());
}

/// A bridgeless graph whose hypergraph has five components, one of them a
/// 4-ladder with the even-k exceptional chord v1 w4. This drives the full
/// contraction route: exceptional-edge removal, side deletion (both
/// attachment points sit on the same bipartition side), Brooks coloring of
/// the contraction, lifting, and chord restoration.
#[test]
fn contraction_with_even_exceptional_edge() {
    let (ladder, l) = gen_ladder(4);
    let mut edges = ladder.edges().to_vec();
    edges.push((l.v[0], l.w[3])); // the exceptional chord v1 w4
    // Attachment points: the ladder's two degree-2 vertices v4 and w1.
    edges.extend([
        (l.v[3], 9),
        (9, 10),
        (10, 11), // path to a C4
        (11, 12),
        (12, 13),
        (13, 14),
        (11, 14), // the C4
        (13, 15),
        (15, l.w[0]), // path back to the ladder
    ]);
    let g = Graph::from_edges(15, &edges).unwrap();
    assert!(g.bridges().is_empty(), "fixture must be bridgeless");
    assert!(g.max_degree() <= 3);
    let h = four_cycle_hypergraph(&g).unwrap();
    assert_eq!(h.components.len(), 5);
    let has_exceptional = h.nontrivial_components().any(|c| {
        matches!(
            classify_component(&h, c).unwrap().tag,
            ComponentTag::LadderPlusOneEdge { k: 4, .. }
        )
    });
    assert!(has_exceptional, "fixture must contain the chord ladder");
    agree(&g, "even exceptional contraction");
}

/// The odd-k variant: a 5-ladder with chord v1 v5, threaded into a
/// bridgeless graph with five hypergraph components.
#[test]
fn contraction_with_odd_exceptional_edge() {
    let (ladder, l) = gen_ladder(5);
    let mut edges = ladder.edges().to_vec();
    edges.push((l.v[0], l.v[4])); // the exceptional chord v1 v5
    // Degree-2 vertices of the chorded ladder: w1 and w5.
    edges.extend([
        (l.w[0], 11),
        (11, 12),
        (12, 13), // path to a C4
        (13, 14),
        (14, 15),
        (15, 16),
        (13, 16), // the C4
        (15, 17),
        (17, l.w[4]), // path back
    ]);
    let g = Graph::from_edges(17, &edges).unwrap();
    assert!(g.bridges().is_empty(), "fixture must be bridgeless");
    assert!(g.max_degree() <= 3);
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.components.len() >= 5);
    agree(&g, "odd exceptional contraction");
}

/// Non-exceptional chords (parity mismatch) must survive into G* and still
/// solve through whichever route applies.
#[test]
fn contraction_with_non_exceptional_chord() {
    let (ladder, l) = gen_ladder(5);
    let mut edges = ladder.edges().to_vec();
    edges.push((l.v[0], l.w[4])); // odd k with v1 wk: not exceptional
    edges.extend([
        (l.w[0], 11),
        (11, 12),
        (12, 13),
        (13, 14),
        (14, 15),
        (15, 16),
        (13, 16),
        (15, 17),
        (17, l.v[4]),
    ]);
    let g = Graph::from_edges(17, &edges).unwrap();
    assert!(g.max_degree() <= 3);
    agree(&g, "non-exceptional chord");
}

/// K23 embedded in a bridgeless body: its degree-2 vertices take the three
/// outside edges, the x-side loses its contracted vertex (no outside
/// neighbors), and the piece has enough components to force contraction.
#[test]
fn contraction_with_embedded_k23() {
    // K23 on {1..5}: x = {1, 2}, y = {3, 4, 5}.
    let g = Graph::from_edges(
        12,
        &[
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 6),
            (6, 7),
            (7, 8), // y1 out to a C4
            (8, 9),
            (9, 10),
            (10, 11),
            (8, 11), // the C4
            (10, 12),
            (12, 4), // back to y2
            (5, 7), // y3 chords into the path, keeping 2-edge-connectivity
        ],
    )
    .unwrap();
    assert!(g.max_degree() <= 3);
    assert!(g.bridges().is_empty());
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.components.len() >= 5, "{} components", h.components.len());
    let tags: Vec<ComponentTag> = h
        .nontrivial_components()
        .map(|c| classify_component(&h, c).unwrap().tag)
        .collect();
    assert!(tags.contains(&ComponentTag::K23), "{tags:?}");
    agree(&g, "embedded K23");
}

/// A cube-minus-vertex embedded through its three degree-2 corners.
#[test]
fn contraction_with_embedded_cube_minus_vertex() {
    // Cube minus vertex on {1..7}: degree-2 vertices are 4, 5, 7
    // (top cycle 1-2-3-4, bottom path 5-6-7, rungs 1-5, 2-6, 3-7).
    let mut edges = gen_named(NamedGraph::CubeMinusVertex).edges().to_vec();
    edges.extend([
        (4, 8),
        (8, 9), // out from 4 to a C4
        (9, 10),
        (10, 11),
        (11, 12),
        (9, 12), // the C4
        (11, 13),
        (13, 5), // back in at 5
        (7, 14),
        (14, 8), // 7 reaches the path vertex, closing another cycle
    ]);
    let g = Graph::from_edges(14, &edges).unwrap();
    assert!(g.max_degree() <= 3);
    assert!(g.bridges().is_empty());
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.components.len() >= 5, "{} components", h.components.len());
    let tags: Vec<ComponentTag> = h
        .nontrivial_components()
        .map(|c| classify_component(&h, c).unwrap().tag)
        .collect();
    assert!(tags.contains(&ComponentTag::CubeMinusVertex), "{tags:?}");
    agree(&g, "embedded cube minus vertex");
}

/// K33 minus an edge embedded through its two degree-2 vertices.
#[test]
fn contraction_with_embedded_k33_minus_edge() {
    // K33-e on {1..6}: missing edge (3, 6), so 3 and 6 have degree 2.
    let mut edges = gen_named(NamedGraph::K33MinusEdge).edges().to_vec();
    edges.extend([
        (3, 7),
        (7, 8),
        (8, 9), // path to a C4
        (9, 10),
        (10, 11),
        (11, 12),
        (9, 12), // the C4
        (11, 13),
        (13, 6), // path back
    ]);
    let g = Graph::from_edges(13, &edges).unwrap();
    assert!(g.max_degree() <= 3);
    assert!(g.bridges().is_empty());
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.components.len() >= 5);
    let tags: Vec<ComponentTag> = h
        .nontrivial_components()
        .map(|c| classify_component(&h, c).unwrap().tag)
        .collect();
    assert!(tags.contains(&ComponentTag::K33MinusEdge), "{tags:?}");
    agree(&g, "embedded K33 minus edge");
}

/// Several nontrivial components of different classes in one bridgeless
/// piece, solved through the contraction route and cross-checked exactly.
#[test]
fn contraction_with_many_mixed_components() {
    // A 3-ladder {1..6} (v=1,2,3, w=4,5,6; degree-2 corners 1, 3, 4, 6),
    // a K23 {7..11}, and two C4s {12..15}, {16..19} on a ring of paths.
    let g = Graph::from_edges(
        22,
        &[
            // 3-ladder
            (1, 4),
            (2, 5),
            (3, 6),
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 6),
            // K23 (x = 7, 8; y = 9, 10, 11)
            (7, 9),
            (7, 10),
            (7, 11),
            (8, 9),
            (8, 10),
            (8, 11),
            // C4s
            (12, 13),
            (13, 14),
            (14, 15),
            (12, 15),
            (16, 17),
            (17, 18),
            (18, 19),
            (16, 19),
            // ring: ladder(3) - 20 - K23(9) ... K23(10) - 12 ... 13 - 21 -
            // C4b(16) ... C4b(17) - 22 - ladder(1)
            (3, 20),
            (20, 9),
            (10, 12),
            (13, 21),
            (21, 16),
            (17, 22),
            (22, 1),
            // second connection to keep everything 2-edge-connected
            (6, 11),
            (4, 14),
            (18, 15),
        ],
    )
    .unwrap();
    assert!(g.max_degree() <= 3, "max degree {}", g.max_degree());
    assert!(g.bridges().is_empty(), "bridges: {:?}", g.bridges());
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.nontrivial_components().count() >= 4);
    assert!(h.components.len() >= 5);
    agree(&g, "mixed component ring");
}

#[test]
fn mixed_component_piece_through_contraction() {
    // A long cycle threaded through two separated C4s: at least five
    // hypergraph components in one bridgeless piece.
    let g = Graph::from_edges(
        12,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 4), // C4 block A
            (5, 6),
            (6, 7),
            (7, 8),
            (5, 8), // C4 block B
            (3, 9),
            (9, 5), // path A -> B
            (8, 10),
            (10, 11),
            (11, 12),
            (12, 1), // path B -> A
        ],
    )
    .unwrap();
    assert!(g.bridges().is_empty());
    let h = four_cycle_hypergraph(&g).unwrap();
    assert!(h.components.len() >= 5, "{} components", h.components.len());
    agree(&g, "two squares on a necklace");
}
