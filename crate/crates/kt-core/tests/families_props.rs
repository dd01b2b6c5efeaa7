mod common;

use common::*;
use kt_core::families::{gen_copycut, gen_ladder, gen_twincut};
use kt_core::independence::{alpha_exact, is_independent};
use kt_core::solve::count_kt_orientations;
use kt_core::verify::verify_kt;
use rand::Rng;

#[test]
fn ladders_have_exactly_two_kt_orientations() {
    for k in 1..=6 {
        let (g, _) = gen_ladder(k);
        assert_eq!(count_kt_orientations(&g).unwrap(), 2, "k = {k}");
    }
}

#[test]
fn copycut_small_alpha_matches_subset_enumeration() {
    for k in 1..=3 {
        let fam = gen_copycut(k, None).unwrap();
        assert_eq!(naive_alpha(&fam.graph) as u64, fam.alpha_k, "k = {k}");
    }
}

#[test]
fn copycut_branch_independent_and_triangle_free_up_to_k5() {
    for k in 1..=5 {
        let fam = gen_copycut(k, None).unwrap();
        assert!(is_independent(&fam.graph, &fam.branch).unwrap(), "k = {k}");
        assert!(!fam.graph.has_triangle(), "k = {k}");
    }
}

#[test]
fn copycut_with_explicit_d_still_orients() {
    for d in [&[1u64, 1, 1][..], &[2, 1, 2], &[3, 2, 1]] {
        let fam = gen_copycut(4, Some(d)).unwrap();
        assert!(verify_kt(&fam.orientation).is_kt(), "d = {d:?}");
        assert!(is_independent(&fam.graph, &fam.branch).unwrap());
        let inn = fam.orientation.in_adjacency();
        for &b in &fam.branch {
            assert!(inn[b as usize].is_empty(), "branch vertices stay sources");
        }
        assert!(!fam.graph.has_triangle());
    }
}

#[test]
fn twincut_branch_sets_are_independent_and_graphs_triangle_free() {
    for k in 1..=4 {
        let fam = gen_twincut(k).unwrap();
        assert!(is_independent(&fam.graph, &fam.branch).unwrap(), "k = {k}");
        assert!(!fam.graph.has_triangle());
    }
}

#[test]
fn twincut_counts_match_independent_recurrence() {
    // n_{k+1} = (n_k - b_k) + 2 n_k b_k and b_{k+1} = n_k b_k.
    let (mut n, mut b) = (1u64, 1u64);
    for k in 2..=5 {
        let next_n = (n - b) + 2 * n * b;
        let next_b = n * b;
        let fam = gen_twincut(k).unwrap();
        assert_eq!(fam.graph.n() as u64, next_n, "k = {k}");
        assert_eq!(fam.branch.len() as u64, next_b, "k = {k}");
        (n, b) = (next_n, next_b);
    }
}

#[test]
fn copycut_branch_is_maximum_independent_set_small() {
    for k in 1..=3 {
        let fam = gen_copycut(k, None).unwrap();
        let res = alpha_exact(&fam.graph, None).unwrap();
        assert_eq!(res.alpha as u64, fam.alpha_k);
        assert!(is_independent(&fam.graph, &fam.branch).unwrap());
    }
}

#[test]
fn alpha_exact_matches_subset_enumeration_on_random_graphs() {
    let mut rng = seeded(0xA1FA);
    for _ in 0..200 {
        let n = rng.random_range(1..=16);
        let g = random_graph(&mut rng, n, 30);
        let res = alpha_exact(&g, None).unwrap();
        assert_eq!(res.alpha, naive_alpha(&g), "graph {g:?}");
        assert!(is_independent(&g, &res.witness).unwrap());
        assert_eq!(res.witness.len() as u32, res.alpha);
    }
}
