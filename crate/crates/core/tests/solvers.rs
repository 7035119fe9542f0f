use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use thetacolor::chromatic::chromatic_polynomial;
use thetacolor::dpcover::{dp_color_function_exact, theta_dp_closed_form};
use thetacolor::graph::Family;
use thetacolor::listcolor::{
    achievable_matrices, count_list_colorings, list_color_function, list_color_function_exhaustive,
    list_color_function_theta, Pruning,
};
use thetacolor::oracle;
use thetacolor::{Budget, Graph, ThetaGraph, ThetaSpec};

const LIMIT: u64 = 200_000_000;

fn end_lists(m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0..=m)
        .map(|k| {
            let lu: Vec<usize> = (0..m).collect();
            let mut lv: Vec<usize> = (0..k).collect();
            lv.extend(m..2 * m - k);
            (lu, lv)
        })
        .collect()
}

#[test]
fn frontier_is_sound_and_complete_on_short_paths() {
    for (m, max_len, palette) in [(2, 3, 6), (3, 2, 7)] {
        for (lu, lv) in end_lists(m) {
            for length in 1..=max_len {
                let brute = oracle::achievable_matrices_bruteforce(length, &lu, &lv, palette, LIMIT).unwrap();
                let all: BTreeSet<Vec<u64>> = achievable_matrices(length, &lu, &lv, palette, Pruning::Off, usize::MAX)
                    .unwrap()
                    .into_iter()
                    .map(|a| a.matrix.entries().to_vec())
                    .collect();
                assert_eq!(all, brute, "m={m} length={length} lu={lu:?} lv={lv:?}");

                let pruned = achievable_matrices(length, &lu, &lv, palette, Pruning::Dominance, usize::MAX).unwrap();
                for a in &pruned {
                    assert!(brute.contains(a.matrix.entries()));
                }
                for b in &brute {
                    assert!(
                        pruned
                            .iter()
                            .any(|a| a.matrix.entries().iter().zip(b).all(|(x, y)| x <= y)),
                        "{b:?} dominates nothing kept"
                    );
                }
            }
        }
    }
}

#[test]
fn frontier_witness_lists_realize_their_matrix() {
    let lu = vec![0, 1];
    let lv = vec![0, 2];
    for a in achievable_matrices(3, &lu, &lv, 6, Pruning::Dominance, usize::MAX).unwrap() {
        let mut lists = vec![lu.clone()];
        lists.extend(a.internal_lists.iter().cloned());
        lists.push(lv.clone());
        let brute = oracle::path_count_matrix_bruteforce(&lists, LIMIT).unwrap();
        assert_eq!(brute, a.matrix);
    }
}

fn small_specs(max_total: usize) -> Vec<ThetaSpec> {
    ThetaSpec::enumerate(max_total)
        .into_iter()
        .filter(|s| s.total_length() <= max_total)
        .collect()
}

#[test]
fn theta_search_matches_exhaustive_search() {
    let b = Budget::default();
    for spec in small_specs(7) {
        let g = ThetaGraph::build(spec).graph;
        let fast = list_color_function_theta(&spec, 2, &b, Pruning::Dominance).unwrap();
        let slow = list_color_function_exhaustive(&g, 2, &b).unwrap();
        assert_eq!(fast.value, slow.value, "theta({spec})");
        assert_eq!(BigUint::from(count_list_colorings(&g, &fast.witness).unwrap()), fast.value);
    }
    for spec in small_specs(5) {
        let g = ThetaGraph::build(spec).graph;
        let fast = list_color_function_theta(&spec, 3, &b, Pruning::Dominance).unwrap();
        let slow = list_color_function_exhaustive(&g, 3, &b).unwrap();
        assert_eq!(fast.value, slow.value, "theta({spec}) at m = 3");
    }
}

#[test]
fn theta_search_without_pruning_agrees() {
    let b = Budget::default();
    for spec in small_specs(7) {
        for m in 2..=3 {
            let on = list_color_function_theta(&spec, m, &b, Pruning::Dominance).unwrap();
            let off = list_color_function_theta(&spec, m, &b, Pruning::Off).unwrap();
            assert_eq!(on.value, off.value, "theta({spec}) m={m}");
        }
    }
}

#[test]
fn gauge_fixing_matches_every_full_cover() {
    let b = Budget::default();
    let graphs = [
        Family::Cycle(3).build().unwrap(),
        Family::Cycle(4).build().unwrap(),
        ThetaGraph::build(ThetaSpec::new(2, 2, 2).unwrap()).graph,
        Family::Complete(4).build().unwrap(),
    ];
    for g in &graphs {
        for m in 2..=3 {
            if g.edge_count() == 6 && g.vertex_count() == 4 && m == 3 {
                continue;
            }
            let exact = dp_color_function_exact(g, m, &b).unwrap();
            assert_eq!(exact.value, oracle::dp_color_function_ungauged(g, m, LIMIT).unwrap());
            let cover = exact.witness.to_cover(g).unwrap();
            assert_eq!(oracle::count_transversals_bruteforce(g, &cover, &[], LIMIT).unwrap(), exact.value);
        }
    }
}

#[test]
fn partial_matchings_never_lower_the_minimum() {
    let b = Budget::default();
    for g in [
        Family::Cycle(3).build().unwrap(),
        Family::Cycle(4).build().unwrap(),
        Family::Path(3).build().unwrap(),
        ThetaGraph::build(ThetaSpec::new(1, 2, 2).unwrap()).graph,
    ] {
        let exact = dp_color_function_exact(&g, 2, &b).unwrap();
        assert_eq!(exact.value, oracle::dp_color_function_all_covers(&g, 2, LIMIT).unwrap());
    }
}

#[test]
fn dp_closed_form_matches_enumeration() {
    let b = Budget::default();
    for spec in ThetaSpec::enumerate(4).into_iter().filter(|s| s.l1_l3_match_l2_differs()) {
        let g = ThetaGraph::build(spec).graph;
        for m in 2..=3u64 {
            let exact = dp_color_function_exact(&g, m as usize, &b).unwrap();
            assert_eq!(
                theta_dp_closed_form(&spec, m).unwrap(),
                BigInt::from(exact.value),
                "theta({spec}) m={m}"
            );
        }
    }
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_filter_map("connected", move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Some(Graph::new(n, edges).unwrap()).filter(Graph::is_connected)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sandwich_holds(g in connected_graph(5), m in 1..=3usize) {
        let b = Budget::default();
        let p = chromatic_polynomial(&g).eval_u64(m as u64).to_biguint().unwrap();
        let pl = list_color_function(&g, m, &b).unwrap();
        let dp = dp_color_function_exact(&g, m, &b).unwrap();
        prop_assert!(BigUint::from(dp.value) <= pl.value);
        prop_assert!(pl.value <= p);
        prop_assert_eq!(BigUint::from(count_list_colorings(&g, &pl.witness).unwrap()), pl.value);
    }

    #[test]
    fn dispatcher_matches_exhaustive(g in connected_graph(5), m in 1..=2usize) {
        let b = Budget::default();
        prop_assert_eq!(
            list_color_function(&g, m, &b).unwrap().value,
            list_color_function_exhaustive(&g, m, &b).unwrap().value
        );
    }
}
