//! Well-formedness (T3 to T6) via a minimal triangulation.

use std::collections::BTreeMap;

use super::validate::validate_decomposition;
use super::TreeDecomposition;
use crate::graph::Graph;

/// Maximum cardinality search followed by a perfect elimination check.
pub fn is_chordal(h: &Graph) -> bool {
    let n = h.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for &w in h.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    // reverse MCS order is a perfect elimination order iff h is chordal
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<usize> = h
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&w| pos[w]) {
            for &w in &earlier {
                if w != p && !h.has_edge(w, p) {
                    return false;
                }
            }
        }
    }
    true
}

/// Removes fill edges of the chordal supergraph `h` one at a time while the
/// result stays chordal. A fill edge `uv` can go exactly when the common
/// neighbourhood of `u` and `v` is a clique, and a triangulation with no
/// removable edge is minimal.
pub fn minimal_triangulation(g: &Graph, h: &Graph) -> Graph {
    let mut edges: std::collections::BTreeSet<(usize, usize)> = h.edges().into_iter().collect();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..h.n())
        .map(|v| h.neighbors(v).iter().copied().collect())
        .collect();
    loop {
        let mut changed = false;
        let fill: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        for (u, v) in fill {
            let common: Vec<usize> = adj[u].intersection(&adj[v]).copied().collect();
            let clique = common
                .iter()
                .enumerate()
                .all(|(i, &a)| common[i + 1..].iter().all(|b| adj[a].contains(b)));
            if clique {
                edges.remove(&(u, v));
                adj[u].remove(&v);
                adj[v].remove(&u);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let es: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(h.n(), &es).expect("subgraph of a simple graph")
}

/// Returns `d` itself (rooted) when it already satisfies T1 to T6.
/// Otherwise rebuilds from a minimal triangulation `H'` of the bag
/// completion: each node takes the separator `S = N(C)` of its component
/// `C`, extends `S ∪ {x}` (least `x ∈ C` complete to `S`) greedily to a
/// maximal clique, and recurses on the components of what remains.
/// Siblings sharing an adhesion are gathered under a bag equal to it.
pub fn enforce_wellformed(g: &Graph, d: &TreeDecomposition) -> TreeDecomposition {
    if let Ok(rep) = validate_decomposition(g, d, None) {
        if rep.is_wellformed() {
            let root = d.effective_root();
            return match root {
                Some(r) => d.clone().with_root(r),
                None => d.clone(),
            };
        }
    }
    let mut extra = Vec::new();
    for b in d.bags() {
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if u < g.n() && v < g.n() {
                    extra.push((u, v));
                }
            }
        }
    }
    let h = minimal_triangulation(g, &g.with_edges(&extra));
    build_from_chordal(&h)
}

struct Builder<'a> {
    h: &'a Graph,
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Builder<'_> {
    fn rec(&mut self, comp: &[usize], sep: &[usize]) -> usize {
        let h = self.h;
        let x = *comp
            .iter()
            .find(|&&x| sep.iter().all(|&s| h.has_edge(x, s)))
            .expect("chordal graphs have a vertex complete to a minimal separator");
        let mut clique: Vec<usize> = sep.to_vec();
        clique.push(x);
        for &y in comp {
            if y != x && clique.iter().all(|&c| h.has_edge(y, c)) {
                clique.push(y);
            }
        }
        clique.sort_unstable();
        let node = self.bags.len();
        self.bags.push(clique.clone());
        let mut removed = vec![true; h.n()];
        for &v in comp {
            removed[v] = false;
        }
        for &v in &clique {
            removed[v] = true;
        }
        for sub in h.components_without(&removed) {
            let mut mark = vec![false; h.n()];
            for &v in &sub {
                for &w in h.neighbors(v) {
                    if clique.binary_search(&w).is_ok() {
                        mark[w] = true;
                    }
                }
            }
            let s: Vec<usize> = (0..h.n()).filter(|&v| mark[v]).collect();
            let child = self.rec(&sub, &s);
            self.edges.push((node, child));
        }
        node
    }
}

fn build_from_chordal(h: &Graph) -> TreeDecomposition {
    let mut b = Builder {
        h,
        bags: Vec::new(),
        edges: Vec::new(),
    };
    let comps = h.components();
    let root = if comps.len() == 1 {
        b.rec(&comps[0], &[])
    } else {
        b.bags.push(Vec::new());
        for c in &comps {
            let child = b.rec(c, &[]);
            b.edges.push((0, child));
        }
        0
    };
    if h.n() == 0 {
        return TreeDecomposition::new(Vec::new(), Vec::new(), None).unwrap();
    }
    let (bags, edges) = gather(b.bags, b.edges, root);
    TreeDecomposition::new(bags, edges, Some(root)).expect("construction yields a tree")
}

/// Puts every group of at least two neighbours of a node that share an
/// adhesion different from the node's bag under a new bag equal to it.
fn gather(
    mut bags: Vec<Vec<usize>>,
    mut edges: Vec<(usize, usize)>,
    root: usize,
) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let mut s = 0;
    while s < bags.len() {
        let nbrs: Vec<usize> = edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == s {
                    Some(b)
                } else if b == s {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for &t in &nbrs {
            let a = super::intersect(&bags[s], &bags[t]);
            groups.entry(a).or_default().push(t);
        }
        for (adh, members) in groups {
            if members.len() < 2 || adh == bags[s] {
                continue;
            }
            let hub = bags.len();
            bags.push(adh);
            for &m in &members {
                for e in edges.iter_mut() {
                    if *e == (s, m) || *e == (m, s) {
                        *e = (hub, m);
                    }
                }
            }
            edges.push((s, hub));
        }
        s += 1;
    }
    let _ = root;
    (bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate::validate_decomposition;
    use crate::graph::{generate, Family};

    #[test]
    fn chordality() {
        assert!(is_chordal(&generate(&Family::Complete(5)).unwrap()));
        assert!(!is_chordal(&generate(&Family::Cycle(4)).unwrap()));
        assert!(is_chordal(&generate(&Family::Fan(6)).unwrap()));
        assert!(!is_chordal(&generate(&Family::Grid(3, 3)).unwrap()));
    }

    #[test]
    fn duplicate_bags_merge() {
        let g = generate(&Family::Path(2)).unwrap();
        let d = TreeDecomposition::new(vec![vec![0, 1], vec![0, 1]], vec![(0, 1)], None).unwrap();
        let w = enforce_wellformed(&g, &d);
        assert_eq!(w.nodes(), 1);
        assert!(validate_decomposition(&g, &w, None).unwrap().is_wellformed());
    }

    #[test]
    fn star_gets_a_hub() {
        let g = generate(&Family::Star(4)).unwrap();
        let bags = (1..5).map(|i| vec![0, i]).collect();
        let chain = TreeDecomposition::new(bags, vec![(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert!(!validate_decomposition(&g, &chain, None).unwrap().is_wellformed());
        let w = enforce_wellformed(&g, &chain);
        let rep = validate_decomposition(&g, &w, None).unwrap();
        assert!(rep.is_wellformed(), "{w:?} {rep:?}");
        assert_eq!(w.width(), 1);
        assert!(w.bags().contains(&vec![0]));
    }

    #[test]
    fn idempotent() {
        let g = generate(&Family::Grid(3, 3)).unwrap();
        let w = enforce_wellformed(&g, &TreeDecomposition::trivial(&g));
        assert!(validate_decomposition(&g, &w, None).unwrap().is_wellformed());
        assert_eq!(enforce_wellformed(&g, &w), w);
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let w = enforce_wellformed(&g, &TreeDecomposition::trivial(&g));
        let rep = validate_decomposition(&g, &w, None).unwrap();
        assert!(rep.is_wellformed(), "{rep:?}");
    }

    #[test]
    fn random_inputs_become_wellformed() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..11);
            let mut es = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        es.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &es).unwrap();
            for d in [
                TreeDecomposition::trivial(&g),
                crate::decomp::min_fill_decomposition(&g),
            ] {
                let w = enforce_wellformed(&g, &d);
                let rep = validate_decomposition(&g, &w, None).unwrap();
                assert!(rep.is_wellformed(), "{g:?} {w:?} {rep:?}");
                assert!(w.width() <= d.width());
                assert_eq!(enforce_wellformed(&g, &w), w);
            }
        }
    }
}
