mod common;

use common::*;
use proptest::prelude::*;
use treeband::decomp::{dipole_overlap_bound, min_fill_decomposition, overlap_number, validate_decomposition};
use treeband::graph::Family;
use treeband::solver::{
    approximate_treebandwidth, collapse_to_layout, decide_treebandwidth, decide_treebandwidth_with_budget,
    exact_treebandwidth, overlap_treewidth_pipeline, verify_reject, Approximation, Decision, OverlapOutcome,
};
use treeband::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn decisions_are_sound_and_monotone(seed in any::<u64>(), n in 1..=7usize, p in 0.0..0.8f64) {
        let g = random_graph(&mut rng(seed), n, p);
        let tbw = brute_tbw(&g).0;
        let mut prev = false;
        for k in 0..=n {
            let d = decide_treebandwidth(&g, k).unwrap();
            prop_assert_eq!(d.is_yes(), tbw <= k);
            prop_assert!(!prev || d.is_yes());
            if let Decision::Yes(t) = d {
                prop_assert!(naive_layout_bandwidth(&g, t.parents()).is_some_and(|b| b <= k));
                prev = true;
            }
        }
        let (val, t) = exact_treebandwidth(&g).unwrap();
        prop_assert_eq!(val, tbw);
        prop_assert_eq!(naive_layout_bandwidth(&g, t.parents()), Some(tbw));
    }

    #[test]
    fn approximation_accepts_above_tbw(seed in any::<u64>(), n in 1..=8usize, p in 0.0..0.8f64) {
        let g = random_graph(&mut rng(seed), n, p);
        let tbw = exact_treebandwidth(&g).unwrap().0;
        for k in 0..=tbw + 1 {
            match approximate_treebandwidth(&g, k).unwrap() {
                Approximation::Reject(r) => {
                    prop_assert!(k < tbw);
                    prop_assert!(verify_reject(&g, k, &r).unwrap());
                }
                Approximation::Layout(a) => {
                    prop_assert_eq!(naive_layout_bandwidth(&g, a.layout.parents()), Some(a.bandwidth));
                }
            }
        }
    }

    #[test]
    fn overlap_pipeline_outcomes_check_out(seed in any::<u64>(), n in 1..=12usize, p in 0.0..0.6f64, k in 0..4usize) {
        let g = random_graph(&mut rng(seed), n, p);
        match overlap_treewidth_pipeline(&g, k).unwrap() {
            OverlapOutcome::Reject(r) => prop_assert!(verify_reject(&g, k, &r).unwrap()),
            OverlapOutcome::Decomposition(d) => {
                let dec = &d.fold.decomposition;
                prop_assert!(validate_decomposition(&g, dec, None).unwrap().is_decomposition());
                prop_assert_eq!(d.overlap, overlap_number(dec));
                let (a, _, c) = d.fold.params;
                prop_assert!(d.overlap <= dipole_overlap_bound(a, c));
            }
        }
    }

    #[test]
    fn collapsed_decompositions_are_layouts(seed in any::<u64>(), n in 1..=14usize, p in 0.0..0.6f64) {
        let g = random_graph(&mut rng(seed), n, p);
        let d = min_fill_decomposition(&g);
        let t = collapse_to_layout(&d, n).unwrap();
        prop_assert!(naive_layout_bandwidth(&g, t.parents()).is_some());
    }
}

#[test]
fn fan_obstruction_is_certified() {
    let g = fam(Family::Fan(64));
    match approximate_treebandwidth(&g, 2).unwrap() {
        Approximation::Reject(r) => assert!(verify_reject(&g, 2, &r).unwrap()),
        Approximation::Layout(_) => panic!("F_64 accepted at k = 2"),
    }
}

#[test]
fn search_budget_is_reported() {
    let g = fam(Family::Grid(3, 3));
    assert!(matches!(decide_treebandwidth_with_budget(&g, 2, 5), Err(Error::Budget(5))));
}
