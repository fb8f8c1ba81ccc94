mod common;

use common::*;
use proptest::prelude::*;
use treeband::coloring::{pcentered_from_layout, verify_pcentered, Colouring};
use treeband::layout::TreeLayout;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn layout_colourings_are_pcentered(seed in any::<u64>(), n in 1..=12usize, k in 1..=3usize, q in 0.0..1.0f64, p in 1..=3usize) {
        let (g, parent) = random_layout_graph(&mut rng(seed), n, k, q);
        let bw = naive_layout_bandwidth(&g, &parent).unwrap();
        let t = TreeLayout::from_parents(parent).unwrap();
        let c = pcentered_from_layout(&g, &t, p).unwrap();
        prop_assert_eq!(c.palette_size, p * bw + 1);
        prop_assert!(verify_pcentered(&g, &c, p).unwrap().is_none());
        prop_assert!(naive_pcentered(&g, &c.colour, p).is_none());
    }

    #[test]
    fn verifier_agrees_with_subset_enumeration(seed in any::<u64>(), n in 1..=10usize, q in 0.0..0.8f64, colours in 1..=4usize, p in 1..=3usize) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, q);
        let colour: Vec<usize> = (0..n).map(|_| rand::Rng::gen_range(&mut r, 0..colours)).collect();
        let c = Colouring::new(colour.clone());
        let lib = verify_pcentered(&g, &c, p).unwrap();
        let naive = naive_pcentered(&g, &colour, p);
        prop_assert_eq!(lib.is_some(), naive.is_some());
        if let Some(set) = lib {
            let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
            prop_assert!(connected_mask(&adjacency(&g), mask));
            let mut seen: Vec<usize> = set.iter().map(|&v| colour[v]).collect();
            seen.sort_unstable();
            let distinct = { let mut d = seen.clone(); d.dedup(); d };
            prop_assert!(distinct.len() <= p);
            prop_assert!(distinct.iter().all(|c| seen.iter().filter(|&x| x == c).count() >= 2));
        }
    }

    #[test]
    fn colouring_text_round_trips(colour in proptest::collection::vec(0..9usize, 0..30)) {
        let c = Colouring::new(colour);
        prop_assert_eq!(Colouring::parse(&c.to_text()).unwrap(), c);
    }
}
