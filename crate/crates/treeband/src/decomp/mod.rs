//! Tree decompositions and the machinery for folding them.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::tree_adjacency;

mod conditions;
mod exact;
mod fold;
mod query;
mod validate;
mod wellformed;

pub use conditions::{
    check_dipole_conditions, check_fan_conditions, fan_path_profile, measure_dipole_parameters,
    measure_fan_parameters, neighbourhood_trees, weight_w, ConditionReport, ConditionViolation,
    NeighbourhoodTree, NeighbourhoodTrees, Weight,
};
pub use exact::{
    decomposition_from_order, exact_tree_decomposition, exact_tree_decomposition_with_limit,
    exact_treewidth, min_fill_decomposition, min_fill_order, treewidth_at_most, ElimOrder,
    DEFAULT_EXACT_LIMIT,
};
pub use fold::{dipole_overlap_bound, fold_dipole, fold_fan, FoldReport};
pub use query::TreeQueryIndex;
pub use validate::{validate_decomposition, DecompReport, Property, Violation};
pub use wellformed::{enforce_wellformed, is_chordal, minimal_triangulation};

/// Bags indexed by node; tree edges between nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    root: Option<usize>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; the tree shape is checked.
    pub fn new(
        bags: Vec<Vec<usize>>,
        edges: Vec<(usize, usize)>,
        root: Option<usize>,
    ) -> Result<TreeDecomposition> {
        let bags: Vec<Vec<usize>> = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        tree_adjacency(bags.len(), &edges)?;
        if let Some(r) = root {
            if r >= bags.len() {
                return Err(Error::Structure(format!("root {r} is not a node")));
            }
        }
        Ok(TreeDecomposition { bags, edges, root })
    }

    pub fn trivial(g: &Graph) -> TreeDecomposition {
        TreeDecomposition {
            bags: vec![(0..g.n()).collect()],
            edges: Vec::new(),
            root: Some(0),
        }
    }

    pub fn nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: usize) -> TreeDecomposition {
        self.root = Some(root);
        self
    }

    /// Largest bag size minus one; 0 when there are no nonempty bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn max_adhesion(&self) -> usize {
        self.edges
            .iter()
            .map(|&(s, t)| self.adhesion(s, t).len())
            .max()
            .unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        tree_adjacency(self.bags.len(), &self.edges).expect("checked at construction")
    }

    pub fn adhesion(&self, s: usize, t: usize) -> Vec<usize> {
        intersect(&self.bags[s], &self.bags[t])
    }

    pub fn contains(&self, t: usize, v: usize) -> bool {
        self.bags[t].binary_search(&v).is_ok()
    }

    /// The given root, else the first node holding vertex 0, else node 0.
    pub fn effective_root(&self) -> Option<usize> {
        if self.bags.is_empty() {
            return None;
        }
        self.root
            .or_else(|| self.bags.iter().position(|b| b.contains(&0)))
            .or(Some(0))
    }

    pub fn rooted(&self) -> Rooted {
        Rooted::new(&self.adjacency(), self.effective_root().unwrap_or(0))
    }

    /// Nodes whose bag holds `v`, ascending.
    pub fn nodes_with(&self, v: usize) -> Vec<usize> {
        (0..self.nodes()).filter(|&t| self.contains(t, v)).collect()
    }

    /// `"td <nodes> <width+1> <n>"`, then `"b <id> v..."` lines, then edges.
    pub fn to_text(&self, n: usize) -> String {
        let mut s = format!("td {} {} {}\n", self.nodes(), self.width() + 1, n);
        for (i, b) in self.bags.iter().enumerate() {
            let _ = write!(s, "b {i}");
            for v in b {
                let _ = write!(s, " {v}");
            }
            s.push('\n');
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "{a} {b}");
        }
        if let Some(r) = self.root {
            let _ = writeln!(s, "r {r}");
        }
        s
    }

    /// Parses `to_text` output; returns the decomposition and declared `n`.
    pub fn parse(text: &str) -> Result<(TreeDecomposition, usize)> {
        let mut header = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut edges = Vec::new();
        let mut root = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
                continue;
            }
            let bad = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad integer"));
            match toks[0] {
                "td" | "s" => {
                    let t = if toks[0] == "s" { &toks[1..] } else { &toks[..] };
                    if t.len() != 4 || t[0] != "td" {
                        return Err(bad("bad header"));
                    }
                    let nodes = num(t[1])?;
                    header = Some((nodes, num(t[3])?));
                    bags = vec![None; nodes];
                }
                "b" => {
                    let id = num(toks.get(1).ok_or(bad("missing bag id"))?)?;
                    if id >= bags.len() {
                        return Err(bad("bag id out of range"));
                    }
                    let vs = toks[2..].iter().map(|s| num(s)).collect::<Result<Vec<_>>>()?;
                    bags[id] = Some(vs);
                }
                "r" => root = Some(num(toks.get(1).ok_or(bad("missing root"))?)?),
                _ => {
                    if toks.len() != 2 {
                        return Err(bad("expected tree edge"));
                    }
                    edges.push((num(toks[0])?, num(toks[1])?));
                }
            }
        }
        let (_, n) = header.ok_or(Error::Parse {
            line: 1,
            msg: "missing td header".into(),
        })?;
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or(Error::Structure(format!("bag {i} missing"))))
            .collect::<Result<Vec<_>>>()?;
        for b in &bags {
            if let Some(&v) = b.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        Ok((TreeDecomposition::new(bags, edges, root)?, n))
    }
}

/// A rooted view of a tree given by adjacency lists.
#[derive(Debug, Clone)]
pub struct Rooted {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<usize>,
    /// Preorder.
    pub order: Vec<usize>,
}

impl Rooted {
    pub fn new(adj: &[Vec<usize>], root: usize) -> Rooted {
        let n = adj.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        if n == 0 {
            return Rooted {
                root,
                parent,
                children,
                depth,
                order,
            };
        }
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            order.push(a);
            let mut kids: Vec<usize> = adj[a].iter().copied().filter(|&b| !seen[b]).collect();
            kids.sort_unstable();
            for &b in &kids {
                seen[b] = true;
                parent[b] = Some(a);
                depth[b] = depth[a] + 1;
            }
            for &b in kids.iter().rev() {
                stack.push(b);
            }
            children[a] = kids;
        }
        Rooted {
            root,
            parent,
            children,
            depth,
            order,
        }
    }

    /// Nodes on the tree path from `a` to `b`, inclusive.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[x] > self.depth[y] {
            left.push(x);
            x = self.parent[x].unwrap();
        }
        while self.depth[y] > self.depth[x] {
            right.push(y);
            y = self.parent[y].unwrap();
        }
        while x != y {
            left.push(x);
            right.push(y);
            x = self.parent[x].unwrap();
            y = self.parent[y].unwrap();
        }
        left.push(x);
        left.extend(right.into_iter().rev());
        left
    }
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

pub(crate) fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Number of nodes in the largest bag-subtree intersection over vertex pairs.
pub fn overlap_number(d: &TreeDecomposition) -> usize {
    let mut best = 0;
    for b in d.bags() {
        if !b.is_empty() {
            best = best.max(1);
        }
    }
    let n = d.bags().iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
    let holders: Vec<Vec<usize>> = (0..n).map(|v| d.nodes_with(v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            let shared = intersect(&holders[u], &holders[v]).len();
            best = best.max(shared);
        }
    }
    best
}

/// Overlap treewidth: the larger of width and overlap number.
pub fn overlap_treewidth(d: &TreeDecomposition) -> usize {
    d.width().max(overlap_number(d))
}

/// Diameter (in edges) of the subtree of nodes holding `v`; 0 if absent.
pub fn vertex_span_diameter(d: &TreeDecomposition, v: usize) -> usize {
    let nodes = d.nodes_with(v);
    if nodes.len() <= 1 {
        return 0;
    }
    let adj = d.adjacency();
    let inside: Vec<bool> = (0..d.nodes()).map(|t| d.contains(t, v)).collect();
    let far = |s: usize| -> (usize, usize) {
        let mut dist = vec![usize::MAX; d.nodes()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        let mut best = (s, 0);
        while let Some(a) = queue.pop_front() {
            if dist[a] > best.1 {
                best = (a, dist[a]);
            }
            for &b in &adj[a] {
                if inside[b] && dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        best
    };
    let (x, _) = far(nodes[0]);
    far(x).1
}

pub fn max_vertex_span_diameter(d: &TreeDecomposition, n: usize) -> usize {
    (0..n).map(|v| vertex_span_diameter(d, v)).max().unwrap_or(0)
}

/// For every edge `xy` of `g`, the topmost node holding both ends.
pub fn intro_map(g: &Graph, d: &TreeDecomposition) -> Result<Vec<((usize, usize), usize)>> {
    let r = d.rooted();
    let mut top = vec![usize::MAX; g.n()];
    for &t in &r.order {
        for &v in d.bag(t) {
            if v < g.n() && top[v] == usize::MAX {
                top[v] = t;
            }
        }
    }
    let mut out = Vec::with_capacity(g.m());
    for (x, y) in g.edges() {
        let (a, b) = (top[x], top[y]);
        if a == usize::MAX || b == usize::MAX {
            return Err(Error::Structure(format!("edge {x} {y} not covered")));
        }
        let t = if r.depth[a] >= r.depth[b] { a } else { b };
        if !(d.contains(t, x) && d.contains(t, y)) {
            return Err(Error::Structure(format!("edge {x} {y} not covered")));
        }
        out.push(((x, y), t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    pub(crate) fn path_decomposition(n: usize) -> TreeDecomposition {
        let bags: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, edges, None).unwrap()
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlap_number(&path_decomposition(6)), 1);
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(overlap_number(&TreeDecomposition::trivial(&k4)), 1);
        let twin = TreeDecomposition::new(vec![vec![0, 1], vec![0, 1]], vec![(0, 1)], None).unwrap();
        assert_eq!(overlap_number(&twin), 2);
    }

    #[test]
    fn text_round_trip() {
        let d = path_decomposition(5).with_root(2);
        let (back, n) = TreeDecomposition::parse(&d.to_text(5)).unwrap();
        assert_eq!((back, n), (d, 5));
    }

    #[test]
    fn intro_is_topmost_common_node() {
        let g = generate(&Family::Path(4)).unwrap();
        let d = path_decomposition(4);
        let intro = intro_map(&g, &d).unwrap();
        assert_eq!(intro, vec![((0, 1), 0), ((1, 2), 1), ((2, 3), 2)]);
    }

    #[test]
    fn span_diameter() {
        let star = TreeDecomposition::new(
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![(0, 1), (0, 2), (0, 3)],
            Some(0),
        )
        .unwrap();
        assert_eq!(vertex_span_diameter(&star, 0), 2);
        assert_eq!(vertex_span_diameter(&star, 1), 0);
        assert_eq!(vertex_span_diameter(&path_decomposition(6), 3), 1);
    }

    #[test]
    fn rooted_paths() {
        let d = path_decomposition(6);
        let r = d.rooted();
        assert_eq!(r.path(4, 1), vec![4, 3, 2, 1]);
        assert_eq!(r.path(2, 2), vec![2]);
    }
}
