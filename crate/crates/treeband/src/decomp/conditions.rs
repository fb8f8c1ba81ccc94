//! The bag conditions characterising excluded fans and dipoles.

use serde::Serialize;

use super::query::TreeQueryIndex;
use super::validate::{separates, validate_decomposition};
use super::{intersect, intro_map, union, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{min_separator, Graph};

/// Adhesion subsets are searched exhaustively up to this bag degree.
const EXACT_WEIGHT_DEGREE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ConditionViolation {
    LargeAdhesion {
        s: usize,
        t: usize,
        size: usize,
    },
    /// `vertex` has `degree` neighbours in the torso at `node`.
    TorsoDegree {
        vertex: usize,
        node: usize,
        degree: usize,
    },
    /// The tree path `from..to` meets `count` bags relevant to `vertex`.
    PathCount {
        vertex: usize,
        from: usize,
        to: usize,
        count: usize,
    },
    /// More than one vertex of the bag has weight above `b`.
    HeavyVertices {
        node: usize,
        vertices: Vec<usize>,
    },
    /// No small set of bags separates `N(u)` from `N(v)`.
    PairSeparator {
        u: usize,
        v: usize,
        bags: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// The requested `(a, b, c)`.
    pub params: (usize, usize, usize),
    /// The smallest `(a, b, c)` the decomposition satisfies.
    pub measured: (usize, usize, usize),
    pub violations: Vec<ConditionViolation>,
    /// False when some weight fell back to the greedy bound.
    pub exact: bool,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Weight {
    pub value: usize,
    pub exact: bool,
}

/// `T^x`: nodes introducing an edge at `owner`, closed under branching
/// nodes, joined along contracted tree paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighbourhoodTree {
    pub owner: usize,
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub intro_nodes: Vec<usize>,
}

impl NeighbourhoodTree {
    /// Diameter in contracted edges.
    pub fn diameter(&self) -> usize {
        if self.nodes.len() <= 1 {
            return 0;
        }
        let idx = |t: usize| self.nodes.binary_search(&t).unwrap();
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[idx(a)].push(idx(b));
            adj[idx(b)].push(idx(a));
        }
        let far = |s: usize| {
            let mut dist = vec![usize::MAX; adj.len()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            let mut best = (s, 0);
            while let Some(a) = queue.pop_front() {
                if dist[a] > best.1 {
                    best = (a, dist[a]);
                }
                for &b in &adj[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        queue.push_back(b);
                    }
                }
            }
            best
        };
        far(far(0).0).1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighbourhoodTrees {
    pub trees: Vec<NeighbourhoodTree>,
    pub report: ConditionReport,
}

fn require_decomposition(g: &Graph, d: &TreeDecomposition) -> Result<()> {
    let rep = validate_decomposition(g, d, None)?;
    if !rep.is_decomposition() {
        return Err(Error::Precondition(
            "input is not a tree decomposition of the graph".into(),
        ));
    }
    Ok(())
}

/// For every vertex, the sorted nodes introducing an edge incident to it.
pub(crate) fn intro_nodes(g: &Graph, d: &TreeDecomposition) -> Result<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); g.n()];
    for ((x, y), t) in intro_map(g, d)? {
        out[x].push(t);
        out[y].push(t);
    }
    for l in &mut out {
        l.sort_unstable();
        l.dedup();
    }
    Ok(out)
}

/// Number of nodes of `path(a, b)` onto which some node of `set` projects.
/// The projection of `x` onto the path is the branching node of `x, a, b`.
fn projected_count(q: &TreeQueryIndex, set: &[usize], a: usize, b: usize) -> usize {
    let mut hits: Vec<usize> = set.iter().map(|&x| q.branching(x, a, b)).collect();
    hits.sort_unstable();
    hits.dedup();
    hits.len()
}

/// Worst path for one vertex: `(count, from, to)`. Paths with both ends
/// among the intro nodes are enough, since extending a path never merges
/// projections and every path meets the spanning subtree in such a path.
fn worst_path(q: &TreeQueryIndex, set: &[usize]) -> (usize, usize, usize) {
    let mut best = (0, 0, 0);
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i..] {
            let c = projected_count(q, set, a, b);
            if c > best.0 {
                best = (c, a, b);
            }
        }
    }
    best
}

/// Per-vertex maximum, over tree paths, of the number of path nodes that
/// introduce an edge at the vertex or lead off the path to such a node.
pub fn fan_path_profile(g: &Graph, d: &TreeDecomposition) -> Result<Vec<usize>> {
    require_decomposition(g, d)?;
    let q = TreeQueryIndex::new(&d.rooted());
    let intro = intro_nodes(g, d)?;
    Ok(intro.iter().map(|set| worst_path(&q, set).0).collect())
}

fn torso_degree(g: &Graph, d: &TreeDecomposition, adj: &[Vec<usize>], t: usize, v: usize) -> usize {
    let mut nb: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| d.contains(t, w))
        .collect();
    for &s in &adj[t] {
        let a = d.adhesion(t, s);
        if a.binary_search(&v).is_ok() {
            nb = union(&nb, &a);
        }
    }
    nb.iter().filter(|&&w| w != v).count()
}

fn adhesion_violations(d: &TreeDecomposition, a: usize) -> Vec<ConditionViolation> {
    d.edges()
        .iter()
        .filter_map(|&(s, t)| {
            let size = d.adhesion(s, t).len();
            (size > a).then_some(ConditionViolation::LargeAdhesion { s, t, size })
        })
        .collect()
}

/// Adhesion size at most `a`, torso degrees at most `b`, and at most `c`
/// relevant bags per vertex on every tree path.
pub fn check_fan_conditions(
    g: &Graph,
    d: &TreeDecomposition,
    a: usize,
    b: usize,
    c: usize,
) -> Result<ConditionReport> {
    require_decomposition(g, d)?;
    let adj = d.adjacency();
    let mut violations = adhesion_violations(d, a);
    let mut max_torso = 0;
    for t in 0..d.nodes() {
        for &v in d.bag(t) {
            let deg = torso_degree(g, d, &adj, t, v);
            max_torso = max_torso.max(deg);
            if deg > b {
                violations.push(ConditionViolation::TorsoDegree {
                    vertex: v,
                    node: t,
                    degree: deg,
                });
            }
        }
    }
    let q = TreeQueryIndex::new(&d.rooted());
    let intro = intro_nodes(g, d)?;
    let mut max_count = 0;
    for (v, set) in intro.iter().enumerate() {
        let (count, from, to) = worst_path(&q, set);
        max_count = max_count.max(count);
        if count > c {
            violations.push(ConditionViolation::PathCount {
                vertex: v,
                from,
                to,
                count,
            });
        }
    }
    Ok(ConditionReport {
        params: (a, b, c),
        measured: (d.max_adhesion(), max_torso, max_count),
        violations,
        exact: true,
    })
}

/// The smallest `(a, b, c)` for which [`check_fan_conditions`] passes.
pub fn measure_fan_parameters(g: &Graph, d: &TreeDecomposition) -> Result<(usize, usize, usize)> {
    Ok(check_fan_conditions(g, d, usize::MAX, usize::MAX, usize::MAX)?.measured)
}

/// Builds every `T^x` and checks the torso bound `b` and the path bound `c`.
pub fn neighbourhood_trees(
    g: &Graph,
    d: &TreeDecomposition,
    b: usize,
    c: usize,
) -> Result<NeighbourhoodTrees> {
    let report = check_fan_conditions(g, d, usize::MAX, b, c)?;
    let adj = d.adjacency();
    let q = TreeQueryIndex::new(&d.rooted());
    let intro = intro_nodes(g, d)?;
    let trees = intro
        .into_iter()
        .enumerate()
        .map(|(x, set)| build_tree(&adj, &q, x, set))
        .collect();
    Ok(NeighbourhoodTrees { trees, report })
}

fn build_tree(
    adj: &[Vec<usize>],
    q: &TreeQueryIndex,
    owner: usize,
    set: Vec<usize>,
) -> NeighbourhoodTree {
    let mut nodes = set.clone();
    loop {
        let mut extra = Vec::new();
        for (i, &a) in nodes.iter().enumerate() {
            for (j, &b) in nodes.iter().enumerate().skip(i + 1) {
                for &c in &nodes[j + 1..] {
                    let m = q.branching(a, b, c);
                    if nodes.binary_search(&m).is_err() {
                        extra.push(m);
                    }
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        nodes.extend(extra);
        nodes.sort_unstable();
        nodes.dedup();
    }
    let mut edges = Vec::new();
    if let Some(&top) = nodes.first() {
        // rooted at a member, every pairwise LCA of the set is a branching
        // node of a triple, so each member hangs under its nearest member
        // ancestor
        let r = super::Rooted::new(adj, top);
        for &t in &nodes[1..] {
            let mut p = r.parent[t].unwrap();
            while nodes.binary_search(&p).is_err() {
                p = r.parent[p].unwrap();
            }
            edges.push((p.min(t), p.max(t)));
        }
    }
    edges.sort_unstable();
    NeighbourhoodTree {
        owner,
        nodes,
        edges,
        intro_nodes: set,
    }
}

/// `|β(t) ∩ U|` plus the fewest adhesions at `t` whose union hits every
/// path from `β(t)` to `U \ β(t)`.
pub fn weight_w(g: &Graph, d: &TreeDecomposition, t: usize, u_set: &[usize]) -> Weight {
    let mut u: Vec<usize> = u_set.to_vec();
    u.sort_unstable();
    u.dedup();
    let inside = intersect(d.bag(t), &u).len();
    let outside: Vec<usize> = u.iter().copied().filter(|&x| !d.contains(t, x)).collect();
    if outside.is_empty() {
        return Weight {
            value: inside,
            exact: true,
        };
    }
    let adh: Vec<Vec<usize>> = d.adjacency()[t].iter().map(|&s| d.adhesion(t, s)).collect();
    let hits = |chosen: &[usize]| {
        let mut sep = Vec::new();
        for &i in chosen {
            sep = union(&sep, &adh[i]);
        }
        separates(g, &sep, d.bag(t), &outside)
    };
    if adh.len() <= EXACT_WEIGHT_DEGREE {
        for size in 0..=adh.len() {
            let mut found = false;
            for_each_combination(adh.len(), size, &mut |comb| {
                if !found && hits(comb) {
                    found = true;
                }
            });
            if found {
                return Weight {
                    value: inside + size,
                    exact: true,
                };
            }
        }
    }
    // greedy: add the adhesion that cuts off the most of U until done
    let mut chosen: Vec<usize> = Vec::new();
    while !hits(&chosen) {
        let best = (0..adh.len())
            .filter(|i| !chosen.contains(i))
            .max_by_key(|&i| {
                let mut c = chosen.clone();
                c.push(i);
                let mut sep = Vec::new();
                for &j in &c {
                    sep = union(&sep, &adh[j]);
                }
                outside
                    .iter()
                    .filter(|&&x| separates(g, &sep, d.bag(t), &[x]))
                    .count()
            });
        match best {
            Some(i) => chosen.push(i),
            None => break,
        }
    }
    Weight {
        value: inside + chosen.len(),
        exact: false,
    }
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// Bags covering a minimum `N(u)`–`N(v)` separator, picked greedily.
pub(crate) fn separating_bags(g: &Graph, d: &TreeDecomposition, u: usize, v: usize) -> Vec<usize> {
    let (nu, nv) = (g.neighbors(u), g.neighbors(v));
    let mut left = min_separator(g, nu, nv);
    let mut bags = Vec::new();
    while !left.is_empty() {
        let t = (0..d.nodes())
            .max_by_key(|&t| (intersect(d.bag(t), &left).len(), std::cmp::Reverse(t)))
            .unwrap();
        left.retain(|&x| !d.contains(t, x));
        bags.push(t);
    }
    bags.sort_unstable();
    bags
}

/// Adhesions at most `a`; in each bag at most one vertex `v` with
/// `w(t, N(v)) > b`; every pair sharing two bags has at most `c` bags whose
/// union separates `N(u)` from `N(v)`.
pub fn check_dipole_conditions(
    g: &Graph,
    d: &TreeDecomposition,
    a: usize,
    b: usize,
    c: usize,
) -> Result<ConditionReport> {
    require_decomposition(g, d)?;
    let mut violations = adhesion_violations(d, a);
    let mut exact = true;
    let mut second = 0;
    for t in 0..d.nodes() {
        let mut weights: Vec<(usize, usize)> = Vec::new();
        for &v in d.bag(t) {
            let w = weight_w(g, d, t, g.neighbors(v));
            exact &= w.exact;
            weights.push((w.value, v));
        }
        weights.sort_unstable_by(|x, y| y.cmp(x));
        if weights.len() >= 2 {
            second = second.max(weights[1].0);
        }
        let heavy: Vec<usize> = weights.iter().filter(|w| w.0 > b).map(|w| w.1).collect();
        if heavy.len() > 1 {
            let mut vertices = heavy;
            vertices.sort_unstable();
            violations.push(ConditionViolation::HeavyVertices { node: t, vertices });
        }
    }
    let mut max_bags = 0;
    for u in 0..g.n() {
        let hu = d.nodes_with(u);
        for v in u + 1..g.n() {
            if intersect(&hu, &d.nodes_with(v)).len() < 2 {
                continue;
            }
            let bags = separating_bags(g, d, u, v);
            let mut cover = Vec::new();
            for &t in &bags {
                cover = union(&cover, d.bag(t));
            }
            debug_assert!(separates(g, &cover, g.neighbors(u), g.neighbors(v)));
            max_bags = max_bags.max(bags.len());
            if bags.len() > c {
                violations.push(ConditionViolation::PairSeparator { u, v, bags });
            }
        }
    }
    Ok(ConditionReport {
        params: (a, b, c),
        measured: (d.max_adhesion(), second, max_bags),
        violations,
        exact,
    })
}

/// The smallest `(a, b, c)` for which [`check_dipole_conditions`] passes.
pub fn measure_dipole_parameters(g: &Graph, d: &TreeDecomposition) -> Result<(usize, usize, usize)> {
    Ok(check_dipole_conditions(g, d, usize::MAX, usize::MAX, usize::MAX)?.measured)
}
