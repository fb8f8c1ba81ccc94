//! Exact treewidth by memoized search over eliminated vertex sets.

use std::collections::{BTreeSet, HashSet};

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub const DEFAULT_EXACT_LIMIT: usize = 20;
const STATE_BUDGET: u64 = 20_000_000;

/// An elimination order; vertices not listed form the final bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElimOrder {
    pub order: Vec<usize>,
    pub width: usize,
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    k: usize,
    failed: HashSet<u64>,
    states: u64,
}

impl Search<'_> {
    /// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
    fn q(&self, s: u64, v: usize) -> u64 {
        let inside = s | (1 << v);
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        let mut reach = 0u64;
        while frontier != 0 {
            let mut next = 0u64;
            for x in bits(frontier) {
                next |= self.adj[x];
            }
            reach |= next;
            next &= inside & !comp;
            comp |= next;
            frontier = next;
        }
        reach & !inside
    }

    fn simplicial(&self, s: u64, q: u64) -> bool {
        bits(q).all(|a| {
            let qa = self.q(s, a) | (1 << a);
            q & !qa == 0
        })
    }

    fn dfs(&mut self, s: u64, order: &mut Vec<usize>) -> Result<bool> {
        let rest = self.all & !s;
        if rest.count_ones() as usize <= self.k + 1 {
            return Ok(true);
        }
        if self.failed.contains(&s) {
            return Ok(false);
        }
        self.states += 1;
        if self.states > STATE_BUDGET {
            return Err(Error::Budget(STATE_BUDGET));
        }
        let mut cands = Vec::new();
        for v in bits(rest) {
            let q = self.q(s, v);
            if q.count_ones() as usize <= self.k {
                if self.simplicial(s, q) {
                    // eliminating a small simplicial vertex never hurts
                    cands.clear();
                    cands.push(v);
                    break;
                }
                cands.push(v);
            }
        }
        for v in cands {
            order.push(v);
            if self.dfs(s | (1 << v), order)? {
                return Ok(true);
            }
            order.pop();
        }
        self.failed.insert(s);
        Ok(false)
    }
}

/// Some elimination order of width at most `k`, if one exists.
pub fn treewidth_at_most(g: &Graph, k: usize) -> Result<Option<ElimOrder>> {
    if g.n() > 64 {
        return Err(Error::SizeLimit {
            what: "graph",
            size: g.n(),
            limit: 64,
        });
    }
    let adj = g.adj_masks();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut search = Search {
        adj: &adj,
        all,
        k,
        failed: HashSet::new(),
        states: 0,
    };
    let mut order = Vec::new();
    if search.dfs(0, &mut order)? {
        Ok(Some(ElimOrder { order, width: k }))
    } else {
        Ok(None)
    }
}

fn lower_bound(g: &Graph) -> usize {
    // degeneracy: repeatedly delete a minimum-degree vertex
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| deg[v]).unwrap();
        best = best.max(deg[v]);
        gone[v] = true;
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Exact treewidth for graphs up to 64 vertices (search may hit its budget).
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    Ok(exact_tree_decomposition_with_limit(g, 64)?.width())
}

pub fn exact_tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    exact_tree_decomposition_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Minimum-width decomposition; errors when `g` has more than `limit` vertices.
pub fn exact_tree_decomposition_with_limit(g: &Graph, limit: usize) -> Result<TreeDecomposition> {
    if g.n() > limit.min(64) {
        return Err(Error::SizeLimit {
            what: "graph",
            size: g.n(),
            limit: limit.min(64),
        });
    }
    if g.n() == 0 {
        return TreeDecomposition::new(Vec::new(), Vec::new(), None);
    }
    let heuristic = min_fill_order(g);
    let upper = heuristic.width;
    for k in lower_bound(g)..upper {
        if let Some(o) = treewidth_at_most(g, k)? {
            return Ok(decomposition_from_order(g, &o.order));
        }
    }
    Ok(decomposition_from_order(g, &heuristic.order))
}

/// Greedy minimum fill-in order over all vertices.
pub fn min_fill_order(g: &Graph) -> ElimOrder {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    while !alive.is_empty() {
        let fill = |v: usize| -> usize {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut f = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(&b) {
                        f += 1;
                    }
                }
            }
            f
        };
        let v = *alive
            .iter()
            .min_by_key(|&&v| (fill(v), adj[v].len(), v))
            .unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len());
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        adj[v].clear();
        alive.remove(&v);
        order.push(v);
    }
    ElimOrder { order, width }
}

pub fn min_fill_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g, &min_fill_order(g).order)
}

/// Plays the elimination game along `order`; unlisted vertices form the
/// final (root) bag. Bags contained in their parent are contracted.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(Vec::new(), Vec::new(), None).unwrap();
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| pos[v] == usize::MAX).collect();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    let mut higher: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
            for &b in &nb {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag = nb.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        higher.push(nb);
    }
    let root = bags.len();
    bags.push(rest);
    let mut parent = vec![None; bags.len()];
    for (i, nb) in higher.iter().enumerate() {
        let p = nb
            .iter()
            .map(|&w| pos[w])
            .filter(|&p| p != usize::MAX)
            .min()
            .unwrap_or(root);
        parent[i] = Some(p);
    }
    let mut edges: Vec<(usize, usize)> = parent
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .collect();
    let mut alive = vec![true; bags.len()];
    let mut root = root;
    // contract every tree edge whose one bag contains the other
    while let Some(idx) = edges.iter().position(|&(a, b)| {
        super::is_subset(&bags[a], &bags[b]) || super::is_subset(&bags[b], &bags[a])
    }) {
        let (a, b) = edges.swap_remove(idx);
        let (gone, keep) = if super::is_subset(&bags[b], &bags[a]) {
            (b, a)
        } else {
            (a, b)
        };
        alive[gone] = false;
        for e in edges.iter_mut() {
            if e.0 == gone {
                e.0 = keep;
            }
            if e.1 == gone {
                e.1 = keep;
            }
        }
        if root == gone {
            root = keep;
        }
    }
    let ids: Vec<usize> = (0..bags.len()).filter(|&i| alive[i]).collect();
    let mut new_id = vec![usize::MAX; bags.len()];
    for (j, &i) in ids.iter().enumerate() {
        new_id[i] = j;
    }
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (new_id[a], new_id[b]))
        .collect();
    let out_bags: Vec<Vec<usize>> = ids.iter().map(|&i| bags[i].clone()).collect();
    TreeDecomposition::new(out_bags, edges, Some(new_id[root])).expect("elimination tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate::validate_decomposition;
    use crate::graph::{generate, Family};

    fn tw(f: Family) -> usize {
        let g = generate(&f).unwrap();
        let d = exact_tree_decomposition(&g).unwrap();
        let rep = validate_decomposition(&g, &d, None).unwrap();
        assert!(rep.is_decomposition(), "{f:?}");
        d.width()
    }

    #[test]
    fn small_families() {
        assert_eq!(tw(Family::Path(7)), 1);
        assert_eq!(tw(Family::Cycle(6)), 2);
        assert_eq!(tw(Family::Complete(5)), 4);
        assert_eq!(tw(Family::Grid(3, 3)), 3);
        assert_eq!(tw(Family::Grid(4, 4)), 4);
        assert_eq!(tw(Family::CompleteBipartite(3, 3)), 3);
        assert_eq!(tw(Family::Fan(6)), 2);
        assert_eq!(tw(Family::Star(5)), 1);
    }

    #[test]
    fn limit_is_enforced() {
        let g = generate(&Family::Path(25)).unwrap();
        assert!(matches!(
            exact_tree_decomposition(&g),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(exact_tree_decomposition_with_limit(&g, 30).unwrap().width(), 1);
    }

    #[test]
    fn edgeless_and_empty() {
        let g = Graph::empty(3);
        let d = exact_tree_decomposition(&g).unwrap();
        assert_eq!(d.width(), 0);
        assert!(validate_decomposition(&g, &d, None).unwrap().is_decomposition());
        assert_eq!(exact_tree_decomposition(&Graph::empty(0)).unwrap().nodes(), 0);
    }

    #[test]
    fn min_fill_is_valid() {
        let g = generate(&Family::Wall(3)).unwrap();
        let d = min_fill_decomposition(&g);
        assert!(validate_decomposition(&g, &d, None).unwrap().is_decomposition());
    }
}
