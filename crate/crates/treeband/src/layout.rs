//! Tree-layouts, linear layouts and tree-partitions.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rooted tree on the vertex set. The empty layout has no root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLayout {
    parent: Vec<Option<usize>>,
    root: Option<usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl TreeLayout {
    pub fn empty() -> TreeLayout {
        TreeLayout {
            parent: Vec::new(),
            root: None,
            depth: Vec::new(),
            children: Vec::new(),
            tin: Vec::new(),
            tout: Vec::new(),
        }
    }

    /// Checks there is exactly one root and no cycle.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<TreeLayout> {
        let n = parent.len();
        if n == 0 {
            return Ok(TreeLayout::empty());
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Structure(format!(
                "layout needs exactly one root, found {}",
                roots.len()
            )));
        }
        let mut children = vec![Vec::new(); n];
        for v in 0..n {
            if let Some(p) = parent[v] {
                if p >= n {
                    return Err(Error::VertexOutOfRange(p));
                }
                children[p].push(v);
            }
        }
        let root = roots[0];
        let mut depth = vec![usize::MAX; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        depth[root] = 0;
        let mut timer = 0;
        let mut stack = vec![(root, 0usize)];
        tin[root] = timer;
        timer += 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < children[v].len() {
                let c = children[v][*i];
                *i += 1;
                depth[c] = depth[v] + 1;
                tin[c] = timer;
                timer += 1;
                stack.push((c, 0));
            } else {
                tout[v] = timer;
                stack.pop();
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(Error::Structure("parent map contains a cycle".into()));
        }
        Ok(TreeLayout {
            parent,
            root: Some(root),
            depth,
            children,
            tin,
            tout,
        })
    }

    /// Path layout with `order[0]` as root.
    pub fn path(order: &[usize]) -> TreeLayout {
        let mut parent = vec![None; order.len()];
        for w in order.windows(2) {
            parent[w[1]] = Some(w[0]);
        }
        TreeLayout::from_parents(parent).expect("a permutation gives a path")
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// `a` is an ancestor of `b` (reflexive).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.tin[a] <= self.tin[b] && self.tout[b] <= self.tout[a]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.is_ancestor(a, b) || self.is_ancestor(b, a)
    }

    /// Vertices in preorder.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| self.tin[v]);
        order
    }

    pub fn height(&self) -> usize {
        self.depth.iter().map(|&d| d + 1).max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let Some(r) = self.root else {
            return "empty\n".to_string();
        };
        let mut s = format!("root {r}\n");
        for v in 0..self.n() {
            if let Some(p) = self.parent[v] {
                let _ = writeln!(s, "{v} {p}");
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<TreeLayout> {
        let mut root = None;
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            if line == "empty" {
                return Ok(TreeLayout::empty());
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(bad("expected two tokens"));
            }
            if toks[0] == "root" {
                if root.is_some() {
                    return Err(bad("second root line"));
                }
                root = Some(toks[1].parse::<usize>().map_err(|_| bad("bad root"))?);
            } else {
                let c = toks[0].parse::<usize>().map_err(|_| bad("bad child"))?;
                let p = toks[1].parse::<usize>().map_err(|_| bad("bad parent"))?;
                pairs.push((c, p));
            }
        }
        let root = root.ok_or(Error::Parse {
            line: 1,
            msg: "missing root line".into(),
        })?;
        let n = pairs.len() + 1;
        let mut parent = vec![None; n];
        if root >= n {
            return Err(Error::VertexOutOfRange(root));
        }
        for (c, p) in pairs {
            if c >= n || p >= n {
                return Err(Error::VertexOutOfRange(c.max(p)));
            }
            if c == root || parent[c].is_some() {
                return Err(Error::Structure(format!("vertex {c} has two parents")));
            }
            parent[c] = Some(p);
        }
        TreeLayout::from_parents(parent)
    }
}

/// Turns a rooted forest into one layout: each root in `roots` is hung
/// under the previous one.
pub fn chain_forest(mut parent: Vec<Option<usize>>, roots: &[usize]) -> Result<TreeLayout> {
    for w in roots.windows(2) {
        parent[w[1]] = Some(w[0]);
    }
    TreeLayout::from_parents(parent)
}

/// Bijection `V -> 1..n`, stored as positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearLayout {
    pos: Vec<usize>,
}

impl LinearLayout {
    /// `order[i]` gets position `i + 1`.
    pub fn from_order(order: &[usize]) -> Result<LinearLayout> {
        let n = order.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != 0 {
                return Err(Error::Structure("order is not a permutation".into()));
            }
            pos[v] = i + 1;
        }
        Ok(LinearLayout { pos })
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.pos.len()];
        for (v, &p) in self.pos.iter().enumerate() {
            order[p - 1] = v;
        }
        order
    }

    pub fn to_tree_layout(&self) -> TreeLayout {
        TreeLayout::path(&self.order())
    }
}

pub fn linear_bandwidth(g: &Graph, s: &LinearLayout) -> usize {
    g.edges()
        .into_iter()
        .map(|(u, v)| s.position(u).abs_diff(s.position(v)))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    pub parts: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreePartition {
    pub fn width(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Part index of every vertex, checking the partition and tree shape.
    pub fn validate(&self, g: &Graph) -> Result<Vec<usize>> {
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                if owner[v] != usize::MAX {
                    return Err(Error::Structure(format!("vertex {v} in two parts")));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::Structure(format!("vertex {v} in no part")));
        }
        let nodes = self.parts.len();
        let adj = tree_adjacency(nodes, &self.edges)?;
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != b && !adj[a].contains(&b) {
                return Err(Error::Structure(format!(
                    "edge {u} {v} joins non-adjacent parts"
                )));
            }
        }
        Ok(owner)
    }
}

/// Adjacency lists of a tree on `nodes` nodes; errors unless it is a tree.
pub fn tree_adjacency(nodes: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    if nodes == 0 {
        if edges.is_empty() {
            return Ok(Vec::new());
        }
        return Err(Error::Structure("edges on an empty tree".into()));
    }
    if edges.len() + 1 != nodes {
        return Err(Error::Structure(format!(
            "{} edges on {} nodes is not a tree",
            edges.len(),
            nodes
        )));
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(Error::Structure(format!("bad tree edge {a} {b}")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; nodes];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    if count != nodes {
        return Err(Error::Structure("tree is disconnected".into()));
    }
    Ok(adj)
}

/// Edges of `g` that are not ancestor-descendant pairs in `t`.
pub fn validate_layout(g: &Graph, t: &TreeLayout) -> Result<Vec<(usize, usize)>> {
    if t.n() != g.n() {
        return Err(Error::Structure(format!(
            "layout spans {} vertices, graph has {}",
            t.n(),
            g.n()
        )));
    }
    Ok(g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !t.comparable(u, v))
        .collect())
}

fn require_valid(g: &Graph, t: &TreeLayout) -> Result<()> {
    let bad = validate_layout(g, t)?;
    if let Some(&(u, v)) = bad.first() {
        return Err(Error::Structure(format!(
            "edge {u} {v} is not an ancestor pair in the layout"
        )));
    }
    Ok(())
}

pub fn bandwidth_of_layout(g: &Graph, t: &TreeLayout) -> Result<usize> {
    require_valid(g, t)?;
    Ok(g
        .edges()
        .into_iter()
        .map(|(u, v)| t.depth(u).abs_diff(t.depth(v)))
        .max()
        .unwrap_or(0))
}

/// Ascending parts chained down the tree; the root part holds vertex 0.
pub fn layout_from_tree_partition(g: &Graph, tp: &TreePartition) -> Result<TreeLayout> {
    tp.validate(g)?;
    if g.n() == 0 {
        return Ok(TreeLayout::empty());
    }
    let root = tp.parts.iter().position(|p| p.contains(&0)).unwrap();
    Ok(partition_layout(g.n(), tp, root, &[]))
}

/// Layout from a valid partition with a chosen root node; vertices in
/// `first` lead the root part's order.
pub(crate) fn partition_layout(
    n: usize,
    tp: &TreePartition,
    root: usize,
    first: &[usize],
) -> TreeLayout {
    let nodes = tp.parts.len();
    let adj = tree_adjacency(nodes, &tp.edges).expect("validated tree");
    let mut parent = vec![None; n];
    // last placed vertex on the path to each node
    let mut anchor: Vec<Option<usize>> = vec![None; nodes];
    let mut seen = vec![false; nodes];
    seen[root] = true;
    let mut queue = VecDeque::from([(root, None::<usize>)]);
    while let Some((node, above)) = queue.pop_front() {
        let mut order: Vec<usize> = tp.parts[node].clone();
        order.sort_unstable();
        if node == root {
            let mut lead: Vec<usize> = first.iter().copied().filter(|v| order.contains(v)).collect();
            lead.dedup();
            order.retain(|v| !lead.contains(v));
            lead.extend(order);
            order = lead;
        }
        let mut last = above;
        for &v in &order {
            parent[v] = last;
            last = Some(v);
        }
        anchor[node] = last;
        for &c in &adj[node] {
            if !seen[c] {
                seen[c] = true;
                queue.push_back((c, anchor[node]));
            }
        }
    }
    TreeLayout::from_parents(parent).expect("partition layout is a tree")
}

/// Subdivides edge `xy` `times` times. New vertices get ids `n..n+times`
/// in order from `min(x, y)` towards `max(x, y)`. The new path hangs below
/// the deeper endpoint, zigzagging so consecutive path vertices stay close.
pub fn extend_layout_to_subdivision(
    g: &Graph,
    t: &TreeLayout,
    edge: (usize, usize),
    times: usize,
) -> Result<(Graph, TreeLayout)> {
    let (a, b) = (edge.0.min(edge.1), edge.0.max(edge.1));
    if !g.has_edge(a, b) {
        return Err(Error::MissingEdge(edge.0, edge.1));
    }
    if times == 0 {
        return Err(Error::InvalidParameter("times must be positive".into()));
    }
    require_valid(g, t)?;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (a, b)).collect();
    let path: Vec<usize> = std::iter::once(a)
        .chain(n..n + times)
        .chain(std::iter::once(b))
        .collect();
    for w in path.windows(2) {
        edges.push((w[0], w[1]));
    }
    let h = Graph::from_edges(n + times, &edges)?;

    // internal vertices listed from the ancestor end
    let (top, bottom) = if t.is_ancestor(a, b) { (a, b) } else { (b, a) };
    let mut inner: Vec<usize> = (n..n + times).collect();
    if top != a {
        inner.reverse();
    }
    // chain slot i (1-based below `bottom`): odd slots take inner[0], inner[1], ...
    // going down, even slots take the rest on the way back up
    let len = inner.len();
    let down = len.div_ceil(2);
    let mut slots = vec![0usize; len];
    for (i, &w) in inner.iter().enumerate() {
        let slot = if i < down { 2 * i + 1 } else { 2 * (len - 1 - i) + 2 };
        slots[slot - 1] = w;
    }
    let mut parent: Vec<Option<usize>> = t.parents().to_vec();
    parent.resize(n + times, None);
    let mut above = bottom;
    for &w in &slots {
        parent[w] = Some(above);
        above = w;
    }
    let mut layout = TreeLayout::from_parents(parent)?;
    // a tree edge can instead be stretched in place; keep whichever is narrower
    if t.parent(bottom) == Some(top) {
        let mut parent: Vec<Option<usize>> = t.parents().to_vec();
        parent.resize(n + times, None);
        let mut above = top;
        for &w in &inner {
            parent[w] = Some(above);
            above = w;
        }
        parent[bottom] = Some(above);
        let stretched = TreeLayout::from_parents(parent)?;
        if bandwidth_of_layout(&h, &stretched)? < bandwidth_of_layout(&h, &layout)? {
            layout = stretched;
        }
    }
    Ok((h, layout))
}

/// Largest pruned subtree minus one. The pruned subtree of `v` keeps `v`
/// and every descendant whose subtree holds a neighbour of `v`.
pub fn treespan_of_layout(g: &Graph, t: &TreeLayout) -> Result<usize> {
    require_valid(g, t)?;
    let n = g.n();
    let mut best = 0;
    let mut mark = vec![usize::MAX; n];
    for v in 0..n {
        let mut size = 1;
        mark[v] = v;
        for &u in g.neighbors(v) {
            if !t.is_ancestor(v, u) {
                continue;
            }
            let mut w = u;
            while mark[w] != v {
                mark[w] = v;
                size += 1;
                w = t.parent(w).expect("v is an ancestor");
            }
        }
        best = best.max(size - 1);
    }
    Ok(best)
}

/// For every node `u`, the number of edges with one end in the subtree of
/// `u` and the other at a strict ancestor of `u`.
pub fn edge_treewidth_profile(g: &Graph, t: &TreeLayout) -> Result<Vec<usize>> {
    require_valid(g, t)?;
    let mut count = vec![0usize; g.n()];
    for (u, v) in g.edges() {
        let (top, mut w) = if t.is_ancestor(u, v) { (u, v) } else { (v, u) };
        while w != top {
            count[w] += 1;
            w = t.parent(w).unwrap();
        }
    }
    Ok(count)
}

pub fn edge_treewidth_of_layout(g: &Graph, t: &TreeLayout) -> Result<usize> {
    Ok(edge_treewidth_profile(g, t)?.into_iter().max().unwrap_or(0))
}

/// Fills every tree interval `[x, y]` spanned by an edge into a clique.
/// Returns the completion and `ω(H) - 1`.
pub fn proper_chordal_completion(g: &Graph, t: &TreeLayout) -> Result<(Graph, usize)> {
    require_valid(g, t)?;
    let mut extra = Vec::new();
    for (u, v) in g.edges() {
        let (top, bottom) = if t.is_ancestor(u, v) { (u, v) } else { (v, u) };
        let mut interval = vec![bottom];
        let mut w = bottom;
        while w != top {
            w = t.parent(w).unwrap();
            interval.push(w);
        }
        for i in 0..interval.len() {
            for j in i + 1..interval.len() {
                extra.push((interval[i], interval[j]));
            }
        }
    }
    let h = g.with_edges(&extra);
    let omega = completion_cliques(&h, t)
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    Ok((h, omega.saturating_sub(1)))
}

/// Maximal cliques of a completion whose edges are all ancestor pairs:
/// each is some `v` together with its ancestor neighbours.
pub fn completion_cliques(h: &Graph, t: &TreeLayout) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut cands: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut c: Vec<usize> = h
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&a| t.is_ancestor(a, v))
                .collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    cands.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for c in cands {
        let dominated = out
            .iter()
            .any(|d| c.iter().all(|x| d.binary_search(x).is_ok()));
        if !dominated {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// `set` is a run of consecutive vertices on one root-to-leaf path.
pub fn consecutive_on_path(t: &TreeLayout, set: &[usize]) -> bool {
    let mut s = set.to_vec();
    s.sort_by_key(|&v| t.depth(v));
    s.windows(2).all(|w| t.parent(w[1]) == Some(w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn k(n: usize) -> Graph {
        generate(&Family::Complete(n)).unwrap()
    }

    fn p(n: usize) -> Graph {
        generate(&Family::Path(n)).unwrap()
    }

    #[test]
    fn validate_examples() {
        let t = TreeLayout::path(&[0, 1, 2]);
        assert!(validate_layout(&k(3), &t).unwrap().is_empty());
        let star = TreeLayout::from_parents(vec![Some(1), None, Some(1)]).unwrap();
        assert!(validate_layout(&p(3), &star).unwrap().is_empty());
        let bad = TreeLayout::from_parents(vec![None, Some(0), Some(0)]).unwrap();
        assert_eq!(validate_layout(&k(3), &bad).unwrap(), vec![(1, 2)]);
        assert!(validate_layout(&k(4), &t).is_err());
    }

    #[test]
    fn from_parents_rejects_cycles() {
        assert!(TreeLayout::from_parents(vec![None, Some(2), Some(1)]).is_err());
        assert!(TreeLayout::from_parents(vec![None, None]).is_err());
    }

    #[test]
    fn bandwidth_examples() {
        let order: Vec<usize> = (0..6).collect();
        assert_eq!(bandwidth_of_layout(&p(6), &TreeLayout::path(&order)).unwrap(), 1);
        assert_eq!(bandwidth_of_layout(&k(6), &TreeLayout::path(&order)).unwrap(), 5);
        let star = generate(&Family::Star(8)).unwrap();
        let mut parent = vec![Some(0); 9];
        parent[0] = None;
        let t = TreeLayout::from_parents(parent).unwrap();
        assert_eq!(bandwidth_of_layout(&star, &t).unwrap(), 1);
    }

    #[test]
    fn linear_examples() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let s = LinearLayout::from_order(&[0, 1, 3, 2]).unwrap();
        assert_eq!(linear_bandwidth(&c4, &s), 2);
        assert_eq!(linear_bandwidth(&k(3), &LinearLayout::from_order(&[2, 0, 1]).unwrap()), 2);
        let t = s.to_tree_layout();
        assert_eq!(bandwidth_of_layout(&c4, &t).unwrap(), 2);
    }

    #[test]
    fn partition_examples() {
        let g = p(4);
        let tp = TreePartition {
            parts: vec![vec![0], vec![1], vec![2], vec![3]],
            edges: vec![(0, 1), (1, 2), (2, 3)],
        };
        let t = layout_from_tree_partition(&g, &tp).unwrap();
        assert_eq!(bandwidth_of_layout(&g, &t).unwrap(), 1);
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let one = TreePartition {
            parts: vec![vec![0, 1, 2, 3]],
            edges: vec![],
        };
        let t = layout_from_tree_partition(&c4, &one).unwrap();
        assert!(bandwidth_of_layout(&c4, &t).unwrap() <= 3);
        let broken = TreePartition {
            parts: vec![vec![0], vec![1, 2], vec![3]],
            edges: vec![(0, 1), (0, 2)],
        };
        assert!(layout_from_tree_partition(&g, &broken).is_err());
    }

    #[test]
    fn subdivision_examples() {
        let (h, t) = extend_layout_to_subdivision(&p(2), &TreeLayout::path(&[0, 1]), (0, 1), 1).unwrap();
        assert_eq!(h, p(3).induced(&[0, 2, 1]));
        assert_eq!(bandwidth_of_layout(&h, &t).unwrap(), 1);
        let (h, t) = extend_layout_to_subdivision(&k(3), &TreeLayout::path(&[0, 1, 2]), (0, 2), 1).unwrap();
        assert!(bandwidth_of_layout(&h, &t).unwrap() <= 3);
        let base = TreeLayout::path(&[0, 1, 2, 3]);
        for e in k(4).edges() {
            let (h, t) = extend_layout_to_subdivision(&k(4), &base, e, 5).unwrap();
            assert_eq!(h.n(), 9);
            assert!(bandwidth_of_layout(&h, &t).unwrap() <= 4);
        }
    }

    #[test]
    fn treespan_examples() {
        let order: Vec<usize> = (0..5).collect();
        assert_eq!(treespan_of_layout(&p(5), &TreeLayout::path(&order)).unwrap(), 1);
        assert_eq!(treespan_of_layout(&k(5), &TreeLayout::path(&order)).unwrap(), 4);
        // every leaf is kept in the centre's pruned subtree
        let star = generate(&Family::Star(4)).unwrap();
        let t = TreeLayout::from_parents(vec![None, Some(0), Some(0), Some(0), Some(0)]).unwrap();
        assert_eq!(treespan_of_layout(&star, &t).unwrap(), 4);
    }

    #[test]
    fn edge_treewidth_examples() {
        let order: Vec<usize> = (0..4).collect();
        let t = TreeLayout::path(&order);
        assert_eq!(edge_treewidth_of_layout(&p(4), &t).unwrap(), 1);
        assert_eq!(edge_treewidth_profile(&k(4), &t).unwrap(), vec![0, 3, 4, 3]);
        let star = generate(&Family::Star(4)).unwrap();
        let s = TreeLayout::from_parents(vec![None, Some(0), Some(0), Some(0), Some(0)]).unwrap();
        assert_eq!(edge_treewidth_of_layout(&star, &s).unwrap(), 1);
    }

    #[test]
    fn chordal_examples() {
        let (h, w) = proper_chordal_completion(&p(3), &TreeLayout::path(&[0, 1, 2])).unwrap();
        assert_eq!((h.m(), w), (2, 1));
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let t = TreeLayout::path(&[0, 1, 3, 2]);
        let (h, w) = proper_chordal_completion(&c4, &t).unwrap();
        assert_eq!(w, 2);
        assert!(completion_cliques(&h, &t).iter().all(|c| consecutive_on_path(&t, c)));
        let (h, w) = proper_chordal_completion(&k(5), &TreeLayout::path(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!((h.m(), w), (10, 4));
    }

    #[test]
    fn text_round_trip() {
        let t = TreeLayout::from_parents(vec![Some(2), Some(2), None, Some(1)]).unwrap();
        assert_eq!(TreeLayout::parse(&t.to_text()).unwrap(), t);
        assert_eq!(TreeLayout::parse("empty").unwrap(), TreeLayout::empty());
    }

    #[test]
    fn chaining() {
        let parent = vec![None, Some(0), None, Some(2), None];
        let t = chain_forest(parent, &[0, 2, 4]).unwrap();
        assert_eq!(t.root(), Some(0));
        assert_eq!(t.parent(2), Some(0));
        assert_eq!(t.parent(4), Some(2));
    }
}
