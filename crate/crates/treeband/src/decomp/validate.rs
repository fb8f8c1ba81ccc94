//! Checks for the decomposition properties T1 to T8.

use serde::Serialize;

use super::{is_subset, Rooted, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{menger_mu, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Property {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// No bag holds the vertex, or its bags are not connected.
    VertexSpan { vertex: usize, nodes: Vec<usize> },
    EdgeUncovered { u: usize, v: usize },
    EqualBags { s: usize, t: usize },
    /// `G[β(T_child) \ β(node)]` is disconnected.
    Residue { node: usize, child: usize },
    /// `vertex` of `α(s,t)` has no neighbour on the side containing `side`.
    AdhesionNeighbour {
        s: usize,
        t: usize,
        vertex: usize,
        side: usize,
    },
    RepeatedAdhesion { node: usize, a: usize, b: usize },
    LargeAdhesion { s: usize, t: usize, size: usize },
    Lean {
        t1: usize,
        t2: usize,
        x1: Vec<usize>,
        x2: Vec<usize>,
        mu: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    pub checked: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompReport {
    pub results: Vec<PropertyResult>,
}

impl DecompReport {
    pub fn get(&self, p: Property) -> &PropertyResult {
        self.results.iter().find(|r| r.property == p).unwrap()
    }

    /// Checked and without violations.
    pub fn passes(&self, p: Property) -> bool {
        let r = self.get(p);
        r.checked && r.violations.is_empty()
    }

    pub fn is_decomposition(&self) -> bool {
        self.passes(Property::T1) && self.passes(Property::T2)
    }

    pub fn is_wellformed(&self) -> bool {
        use Property::*;
        [T1, T2, T3, T4, T5, T6].iter().all(|&p| self.passes(p))
    }
}

/// Upper bound on Menger computations spent on T8.
const LEAN_BUDGET: u64 = 20_000_000;

/// T4 is read relative to the root: for every node and child, the part of
/// the child's subtree outside the node's bag induces a connected graph.
/// Children whose bag lies inside the parent's bag (gathering bags) are
/// skipped; their own children are checked against them.
pub fn validate_decomposition(
    g: &Graph,
    d: &TreeDecomposition,
    k: Option<usize>,
) -> Result<DecompReport> {
    if let Some(&v) = d.bags().iter().flatten().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange(v));
    }
    let adj = d.adjacency();
    let nodes = d.nodes();
    let mut results = Vec::new();
    let mut push = |property, checked, violations| {
        results.push(PropertyResult {
            property,
            checked,
            violations,
        })
    };

    // T1
    let mut v1 = Vec::new();
    for v in 0..g.n() {
        let holders = d.nodes_with(v);
        if holders.is_empty() || !connected_in_tree(&adj, &holders) {
            v1.push(Violation::VertexSpan { vertex: v, nodes: holders });
        }
    }
    push(Property::T1, true, v1);

    // T2
    let v2: Vec<Violation> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !(0..nodes).any(|t| d.contains(t, u) && d.contains(t, v)))
        .map(|(u, v)| Violation::EdgeUncovered { u, v })
        .collect();
    push(Property::T2, true, v2);

    // T3
    let mut v3 = Vec::new();
    for s in 0..nodes {
        for t in s + 1..nodes {
            if d.bag(s) == d.bag(t) {
                v3.push(Violation::EqualBags { s, t });
            }
        }
    }
    push(Property::T3, true, v3);

    // T4
    let mut v4 = Vec::new();
    if nodes > 0 {
        let r = d.rooted();
        let below = subtree_vertices(d, &r, g.n());
        for t in 0..nodes {
            for &c in &r.children[t] {
                if is_subset(d.bag(c), d.bag(t)) {
                    continue;
                }
                let residue: Vec<usize> = below[c]
                    .iter()
                    .copied()
                    .filter(|v| !d.contains(t, *v))
                    .collect();
                if !induces_connected(g, &residue) {
                    v4.push(Violation::Residue { node: t, child: c });
                }
            }
        }
    }
    push(Property::T4, true, v4);

    // T5
    let mut v5 = Vec::new();
    for &(s, t) in d.edges() {
        let alpha = d.adhesion(s, t);
        for (side, other) in [(s, t), (t, s)] {
            let verts = side_vertices(d, &adj, side, other, g.n());
            for &v in &alpha {
                let ok = g
                    .neighbors(v)
                    .iter()
                    .any(|w| verts[*w] && alpha.binary_search(w).is_err());
                if !ok {
                    v5.push(Violation::AdhesionNeighbour {
                        s,
                        t,
                        vertex: v,
                        side,
                    });
                }
            }
        }
    }
    push(Property::T5, true, v5);

    // T6
    let mut v6 = Vec::new();
    for s in 0..nodes {
        for (i, &a) in adj[s].iter().enumerate() {
            for &b in &adj[s][i + 1..] {
                let x = d.adhesion(s, a);
                if x == d.adhesion(s, b) && x.as_slice() != d.bag(s) {
                    v6.push(Violation::RepeatedAdhesion { node: s, a, b });
                }
            }
        }
    }
    push(Property::T6, true, v6);

    match k {
        None => {
            push(Property::T7, false, Vec::new());
            push(Property::T8, false, Vec::new());
        }
        Some(k) => {
            let v7: Vec<Violation> = d
                .edges()
                .iter()
                .filter_map(|&(s, t)| {
                    let size = d.adhesion(s, t).len();
                    (size > k).then_some(Violation::LargeAdhesion { s, t, size })
                })
                .collect();
            push(Property::T7, true, v7);
            let v8 = check_lean(g, d, k)?;
            push(Property::T8, true, v8);
        }
    }
    Ok(DecompReport { results })
}

/// T8 with the trigger read strictly: whenever `μ(X1,X2) < min(|X1|,|X2|)`
/// and `μ ≤ k`, some adhesion on the `t1`–`t2` path must be an inclusion
/// minimal `X1`–`X2` separator of size at most `k`. (With a non-strict
/// trigger every singleton pair would fire, since `X1` always separates.)
fn check_lean(g: &Graph, d: &TreeDecomposition, k: usize) -> Result<Vec<Violation>> {
    let nodes = d.nodes();
    let r = d.rooted();
    let mut out = Vec::new();
    let mut spent = 0u64;
    let subsets: Vec<Vec<Vec<usize>>> = (0..nodes)
        .map(|t| small_subsets(d.bag(t), k + 1))
        .collect();
    for t1 in 0..nodes {
        for t2 in t1..nodes {
            let path = r.path(t1, t2);
            let adhesions: Vec<Vec<usize>> = path
                .windows(2)
                .map(|w| d.adhesion(w[0], w[1]))
                .filter(|a| a.len() <= k)
                .collect();
            for x1 in &subsets[t1] {
                for x2 in &subsets[t2] {
                    spent += 1;
                    if spent > LEAN_BUDGET {
                        return Err(Error::Budget(LEAN_BUDGET));
                    }
                    let lo = x1.len().min(x2.len());
                    let mu = menger_mu(g, x1, x2);
                    if mu >= lo || mu > k {
                        continue;
                    }
                    let ok = adhesions.iter().any(|a| minimal_separator(g, a, x1, x2));
                    if !ok {
                        out.push(Violation::Lean {
                            t1,
                            t2,
                            x1: x1.clone(),
                            x2: x2.clone(),
                            mu,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn small_subsets(bag: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(bag: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == bag.len() {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            return;
        }
        rec(bag, i + 1, max, cur, out);
        if cur.len() < max {
            cur.push(bag[i]);
            rec(bag, i + 1, max, cur, out);
            cur.pop();
        }
    }
    rec(bag, 0, max, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn separates(g: &Graph, sep: &[usize], xs: &[usize], ys: &[usize]) -> bool {
    let mut blocked = vec![false; g.n()];
    for &s in sep {
        blocked[s] = true;
    }
    let mut target = vec![false; g.n()];
    for &y in ys {
        target[y] = true;
    }
    let mut seen = blocked.clone();
    let mut stack: Vec<usize> = Vec::new();
    for &x in xs {
        if !seen[x] {
            seen[x] = true;
            stack.push(x);
        }
    }
    while let Some(v) = stack.pop() {
        if target[v] {
            return false;
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

fn minimal_separator(g: &Graph, sep: &[usize], xs: &[usize], ys: &[usize]) -> bool {
    if !separates(g, sep, xs, ys) {
        return false;
    }
    (0..sep.len()).all(|i| {
        let smaller: Vec<usize> = sep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect();
        !separates(g, &smaller, xs, ys)
    })
}

fn connected_in_tree(adj: &[Vec<usize>], set: &[usize]) -> bool {
    if set.is_empty() {
        return true;
    }
    let inside = |t: usize| set.binary_search(&t).is_ok();
    let mut seen = vec![false; adj.len()];
    seen[set[0]] = true;
    let mut stack = vec![set[0]];
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if inside(b) && !seen[b] {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    count == set.len()
}

pub(crate) fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    if set.len() <= 1 {
        return true;
    }
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    seen[set[0]] = true;
    let mut stack = vec![set[0]];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == set.len()
}

/// Sorted vertex union of the bags in each rooted subtree.
pub(crate) fn subtree_vertices(d: &TreeDecomposition, r: &Rooted, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); d.nodes()];
    for &t in r.order.iter().rev() {
        let mut mark = vec![false; n];
        for &v in d.bag(t) {
            mark[v] = true;
        }
        for &c in &r.children[t] {
            for &v in &out[c] {
                mark[v] = true;
            }
        }
        out[t] = (0..n).filter(|&v| mark[v]).collect();
    }
    out
}

/// Membership mask of `β` over the component of `T - st` containing `s`.
fn side_vertices(
    d: &TreeDecomposition,
    adj: &[Vec<usize>],
    s: usize,
    t: usize,
    n: usize,
) -> Vec<bool> {
    let mut mark = vec![false; n];
    let mut seen = vec![false; d.nodes()];
    seen[s] = true;
    seen[t] = true;
    let mut stack = vec![s];
    while let Some(a) = stack.pop() {
        for &v in d.bag(a) {
            mark[v] = true;
        }
        for &b in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    mark
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn trivial_k3() {
        let g = generate(&Family::Complete(3)).unwrap();
        let rep = validate_decomposition(&g, &TreeDecomposition::trivial(&g), None).unwrap();
        assert!(rep.is_decomposition());
        assert!(!rep.get(Property::T8).checked);
    }

    #[test]
    fn p3_two_bags() {
        let g = generate(&Family::Path(3)).unwrap();
        let d = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)], None).unwrap();
        let rep = validate_decomposition(&g, &d, Some(1)).unwrap();
        for p in [Property::T1, Property::T2, Property::T3, Property::T4, Property::T5] {
            assert!(rep.passes(p), "{p:?}");
        }
        assert!(rep.passes(Property::T8));
    }

    #[test]
    fn uncovered_edge_witness() {
        let g = generate(&Family::Path(3)).unwrap();
        let d = TreeDecomposition::new(vec![vec![0, 1], vec![2]], vec![(0, 1)], None).unwrap();
        let rep = validate_decomposition(&g, &d, None).unwrap();
        assert_eq!(
            rep.get(Property::T2).violations,
            vec![Violation::EdgeUncovered { u: 1, v: 2 }]
        );
    }

    #[test]
    fn single_bag_path_is_not_lean() {
        let g = generate(&Family::Path(3)).unwrap();
        let rep = validate_decomposition(&g, &TreeDecomposition::trivial(&g), Some(1)).unwrap();
        assert!(!rep.passes(Property::T8));
    }

    #[test]
    fn disconnected_residue() {
        // star K_{1,2} with the centre's bag below the leaves' bag
        let g = generate(&Family::Path(3)).unwrap();
        let d = TreeDecomposition::new(vec![vec![0, 2], vec![0, 1, 2]], vec![(0, 1)], Some(1)).unwrap();
        let rep = validate_decomposition(&g, &d, None).unwrap();
        assert!(rep.is_decomposition());
        let d = TreeDecomposition::new(vec![vec![1], vec![0, 1, 2]], vec![(0, 1)], Some(0)).unwrap();
        let rep = validate_decomposition(&g, &d, None).unwrap();
        assert_eq!(
            rep.get(Property::T4).violations,
            vec![Violation::Residue { node: 0, child: 1 }]
        );
    }
}
