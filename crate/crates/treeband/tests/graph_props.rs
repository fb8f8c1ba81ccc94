mod common;

use common::*;
use proptest::prelude::*;
use treeband::graph::{generate, menger_mu, Family, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let ps = pairs(n);
        proptest::collection::vec(any::<bool>(), ps.len()).prop_map(move |keep| {
            let es: Vec<_> = ps.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &es).unwrap()
        })
    })
}

fn vertex_set(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        let mut s: Vec<usize> = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        if s.is_empty() {
            s.push(0);
        }
        s
    })
}

#[test]
fn family_sizes_match_closed_forms() {
    let size = |f: Family| {
        let g = generate(&f).unwrap();
        (g.n(), g.m())
    };
    for n in 1..30 {
        assert_eq!(size(Family::Path(n)), (n, n - 1));
        assert_eq!(size(Family::Complete(n)), (n, n * (n - 1) / 2));
        assert_eq!(size(Family::Star(n)), (n + 1, n));
        assert_eq!(size(Family::Fan(n)), (n + 1, 2 * n - 1));
        assert_eq!(size(Family::DipoleSubdivided(n)), (n + 2, 2 * n));
    }
    for n in 3..30 {
        assert_eq!(size(Family::Cycle(n)), (n, n));
    }
    for s in 1..6 {
        for t in 1..6 {
            assert_eq!(size(Family::CompleteBipartite(s, t)), (s + t, s * t));
            assert_eq!(size(Family::Grid(s, t)), (s * t, s * (t - 1) + t * (s - 1)));
        }
    }
    for k in 2..8 {
        assert_eq!(size(Family::Wall(k)), (2 * k * k - 2, 3 * k * k - 2 * k - 2));
    }
    for h in 0..6 {
        let nodes = (1 << (h + 1)) - 1;
        assert_eq!(size(Family::SubdividedBinaryTree(h)), (2 * nodes - 1, 2 * (nodes - 1)));
    }
    let base = generate(&Family::Cycle(5)).unwrap();
    for k in 1..4 {
        let g = generate(&Family::MultipleSubdivided { k, base: base.clone() }).unwrap();
        assert_eq!((g.n(), g.m()), (5 + 5 * k, 10 * k));
    }
}

#[test]
fn small_walls_by_hand() {
    // W_2 is a 6-cycle
    let w2 = generate(&Family::Wall(2)).unwrap();
    assert!(w2.is_connected() && (0..6).all(|v| w2.degree(v) == 2));
    let w3 = generate(&Family::Wall(3)).unwrap();
    assert!(w3.max_degree() == 3 && w3.is_connected());
}

#[test]
fn family_numbering_is_frozen() {
    let fan = generate(&Family::Fan(4)).unwrap();
    assert_eq!(fan.neighbors(0), &[1, 2, 3, 4]);
    let dip = generate(&Family::DipoleSubdivided(3)).unwrap();
    assert_eq!(dip.neighbors(1), &[2, 3, 4]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn menger_is_symmetric((g, xs, ys) in graph_strategy(9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), vertex_set(n), vertex_set(n))
    })) {
        prop_assert_eq!(menger_mu(&g, &xs, &ys), menger_mu(&g, &ys, &xs));
    }

    #[test]
    fn menger_matches_path_packing((g, xs, ys) in graph_strategy(7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), vertex_set(n), vertex_set(n))
    })) {
        prop_assert_eq!(menger_mu(&g, &xs, &ys), naive_menger(&g, &xs, &ys));
    }

    #[test]
    fn parse_inverts_serialize(g in graph_strategy(12)) {
        let text = g.to_text();
        let back = Graph::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_text(), text);
    }
}

#[test]
fn menger_exhaustive_on_five_vertices() {
    for g in all_graphs(5) {
        for xm in 1u32..32 {
            let xs: Vec<usize> = (0..5).filter(|&v| xm >> v & 1 == 1).collect();
            for ym in [1u32, 3, 24, 16, 31] {
                let ys: Vec<usize> = (0..5).filter(|&v| ym >> v & 1 == 1).collect();
                assert_eq!(menger_mu(&g, &xs, &ys), naive_menger(&g, &xs, &ys), "{:?} {xs:?} {ys:?}", g.edges());
            }
        }
    }
}
