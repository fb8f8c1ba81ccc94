//! SPQR trees by recursive splitting, gem-freeness and planar layouts.

mod planar;

pub use planar::{
    gem_free_check, planar_fan_conditions, planar_layout_construct, tree_partition_construct,
    GemReport, GemViolation, PlanarLayout, PlanarReport, PlanarViolation,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    S,
    P,
    R,
}

/// A skeleton edge; virtual edges carry the id of their tree edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkeletonEdge {
    pub u: usize,
    pub v: usize,
    pub tree_edge: Option<usize>,
}

impl SkeletonEdge {
    fn pair(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpqrNode {
    pub kind: NodeKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<SkeletonEdge>,
}

impl SpqrNode {
    /// Degree of `v` in the skeleton multigraph.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices.iter().map(|&v| self.degree(v)).max().unwrap_or(0)
    }

    /// Cyclic vertex order of an S-skeleton starting at `start`.
    pub fn cycle_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut used = vec![false; self.edges.len()];
        let mut cur = start;
        loop {
            let Some(i) = (0..self.edges.len())
                .find(|&i| !used[i] && (self.edges[i].u == cur || self.edges[i].v == cur))
            else {
                break;
            };
            used[i] = true;
            let e = self.edges[i];
            cur = if e.u == cur { e.v } else { e.u };
            if cur == start {
                break;
            }
            order.push(cur);
        }
        order
    }

    /// Simple graph on the skeleton, vertex `i` being `vertices[i]`.
    pub fn skeleton_graph(&self) -> Graph {
        let idx = |x: usize| self.vertices.binary_search(&x).unwrap();
        let es: Vec<(usize, usize)> = self.edges.iter().map(|e| (idx(e.u), idx(e.v))).collect();
        Graph::from_edges_dedup(self.vertices.len(), &es)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpqrTree {
    pub nodes: Vec<SpqrNode>,
    /// Tree edge `i` joins `tree_edges[i].0` and `.1` and carries `pairs[i]`.
    pub tree_edges: Vec<(usize, usize)>,
    pub pairs: Vec<(usize, usize)>,
}

impl SpqrTree {
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for (i, &(a, b)) in self.tree_edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    /// Bags are skeleton vertex sets.
    pub fn as_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|t| t.vertices.clone()).collect();
        TreeDecomposition::new(bags, self.tree_edges.clone(), Some(0)).expect("spqr tree is a tree")
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|t| t.kind == kind).count()
    }
}

type Edge = (usize, usize, Option<usize>);

fn vertex_set(es: &[Edge]) -> Vec<usize> {
    let mut vs: Vec<usize> = es.iter().flat_map(|e| [e.0, e.1]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn is_cycle(es: &[Edge], vs: &[usize]) -> bool {
    if es.len() != vs.len() {
        return false;
    }
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for e in es {
        *deg.entry(e.0).or_default() += 1;
        *deg.entry(e.1).or_default() += 1;
    }
    if deg.values().any(|&d| d != 2) {
        return false;
    }
    // connected when a walk from the first vertex covers all of them
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        i += 1;
        for e in es {
            for (a, b) in [(e.0, e.1), (e.1, e.0)] {
                if a == x && !seen.contains(&b) {
                    seen.push(b);
                }
            }
        }
    }
    seen.len() == vs.len()
}

/// Edge classes of `{x, y}`: one per component of the rest, then the `xy` edges.
fn separation_classes(es: &[Edge], vs: &[usize], x: usize, y: usize) -> (Vec<Vec<usize>>, Vec<usize>) {
    let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != x && v != y).collect();
    let pos = |v: usize| rest.binary_search(&v).ok();
    let mut comp = vec![usize::MAX; rest.len()];
    let mut ncomp = 0;
    for s in 0..rest.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = ncomp;
        let mut stack = vec![rest[s]];
        while let Some(a) = stack.pop() {
            for e in es {
                for (p, q) in [(e.0, e.1), (e.1, e.0)] {
                    if p == a {
                        if let Some(j) = pos(q) {
                            if comp[j] == usize::MAX {
                                comp[j] = ncomp;
                                stack.push(q);
                            }
                        }
                    }
                }
            }
        }
        ncomp += 1;
    }
    let mut classes = vec![Vec::new(); ncomp];
    let mut direct = Vec::new();
    for (i, e) in es.iter().enumerate() {
        match pos(e.0).or(pos(e.1)) {
            Some(j) => classes[comp[j]].push(i),
            None => direct.push(i),
        }
    }
    (classes, direct)
}

struct Splitter {
    next_id: usize,
    done: Vec<(NodeKind, Vec<Edge>)>,
}

impl Splitter {
    fn fresh(&mut self) -> usize {
        self.next_id += 1;
        self.next_id - 1
    }

    fn split(&mut self, es: Vec<Edge>) {
        let mut stack = vec![es];
        while let Some(es) = stack.pop() {
            let vs = vertex_set(&es);
            if vs.len() == 2 {
                self.done.push((NodeKind::P, es));
                continue;
            }
            let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for (i, e) in es.iter().enumerate() {
                groups.entry((e.0.min(e.1), e.0.max(e.1))).or_default().push(i);
            }
            if let Some((&(x, y), idx)) = groups.iter().find(|(_, v)| v.len() > 1) {
                let id = self.fresh();
                let mut bond: Vec<Edge> = idx.iter().map(|&i| es[i]).collect();
                bond.push((x, y, Some(id)));
                let mut rest: Vec<Edge> = es
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !idx.contains(i))
                    .map(|(_, &e)| e)
                    .collect();
                rest.push((x, y, Some(id)));
                stack.push(rest);
                stack.push(bond);
                continue;
            }
            if is_cycle(&es, &vs) {
                self.done.push((NodeKind::S, es));
                continue;
            }
            let mut split = None;
            'pairs: for (i, &x) in vs.iter().enumerate() {
                for &y in &vs[i + 1..] {
                    let (classes, _) = separation_classes(&es, &vs, x, y);
                    if classes.len() >= 2 {
                        split = Some((x, y, classes[0].clone()));
                        break 'pairs;
                    }
                }
            }
            match split {
                Some((x, y, first)) => {
                    let id = self.fresh();
                    let mut a: Vec<Edge> = first.iter().map(|&i| es[i]).collect();
                    a.push((x, y, Some(id)));
                    let mut b: Vec<Edge> = es
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !first.contains(i))
                        .map(|(_, &e)| e)
                        .collect();
                    b.push((x, y, Some(id)));
                    stack.push(b);
                    stack.push(a);
                }
                None => self.done.push((NodeKind::R, es)),
            }
        }
    }
}

/// The SPQR tree of a 2-connected graph with at least three vertices.
pub fn build_spqr(g: &Graph) -> Result<SpqrTree> {
    if g.n() < 3 || !g.is_biconnected() {
        return Err(Error::Precondition(
            "SPQR tree needs a 2-connected graph on at least 3 vertices".into(),
        ));
    }
    let mut sp = Splitter {
        next_id: 0,
        done: Vec::new(),
    };
    sp.split(g.edges().into_iter().map(|(u, v)| (u, v, None)).collect());
    let mut comps: Vec<Option<(NodeKind, Vec<Edge>)>> = sp.done.into_iter().map(Some).collect();
    // merge S-S and P-P neighbours along their shared virtual edge
    loop {
        let mut owner: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in comps.iter().enumerate() {
            if let Some((_, es)) = c {
                for e in es {
                    if let Some(id) = e.2 {
                        owner.entry(id).or_default().push(i);
                    }
                }
            }
        }
        let hit = owner.iter().find_map(|(&id, w)| {
            let (a, b) = (w[0], w[1]);
            let ka = comps[a].as_ref().unwrap().0;
            let kb = comps[b].as_ref().unwrap().0;
            (ka == kb && ka != NodeKind::R).then_some((id, a, b))
        });
        let Some((id, a, b)) = hit else { break };
        let (kind, mut ea) = comps[a].take().unwrap();
        let (_, eb) = comps[b].take().unwrap();
        ea.retain(|e| e.2 != Some(id));
        ea.extend(eb.into_iter().filter(|e| e.2 != Some(id)));
        comps[a] = Some((kind, ea));
    }
    let comps: Vec<(NodeKind, Vec<Edge>)> = comps.into_iter().flatten().collect();
    // renumber virtual edges in order of first appearance
    let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
    let mut ends: Vec<Vec<usize>> = Vec::new();
    let mut pairs = Vec::new();
    for (i, (_, es)) in comps.iter().enumerate() {
        for e in es {
            if let Some(id) = e.2 {
                let next = rename.len();
                let j = *rename.entry(id).or_insert(next);
                if j == ends.len() {
                    ends.push(Vec::new());
                    pairs.push((e.0.min(e.1), e.0.max(e.1)));
                }
                ends[j].push(i);
            }
        }
    }
    let nodes = comps
        .into_iter()
        .map(|(kind, es)| {
            let vertices = vertex_set(&es);
            let mut edges: Vec<SkeletonEdge> = es
                .into_iter()
                .map(|(u, v, id)| SkeletonEdge {
                    u: u.min(v),
                    v: u.max(v),
                    tree_edge: id.map(|x| rename[&x]),
                })
                .collect();
            edges.sort_by_key(|e| (e.u, e.v, e.tree_edge));
            SpqrNode {
                kind,
                vertices,
                edges,
            }
        })
        .collect();
    let tree = SpqrTree {
        nodes,
        tree_edges: ends.iter().map(|w| (w[0], w[1])).collect(),
        pairs,
    };
    validate_spqr(g, &tree)?;
    Ok(tree)
}

fn three_connected(h: &Graph) -> bool {
    let n = h.n();
    if n < 4 {
        return false;
    }
    for x in 0..n {
        for y in x + 1..n {
            let mut gone = vec![false; n];
            gone[x] = true;
            gone[y] = true;
            if h.components_without(&gone).len() > 1 {
                return false;
            }
        }
    }
    true
}

/// Checks skeleton shapes, adjacency rules, the edge bijection and the tree.
pub fn validate_spqr(g: &Graph, t: &SpqrTree) -> Result<()> {
    let bad = |s: String| Err(Error::Structure(s));
    let m = t.tree_edges.len();
    if m + 1 != t.nodes.len() {
        return bad("node and edge counts do not form a tree".into());
    }
    crate::layout::tree_adjacency(t.nodes.len(), &t.tree_edges)?;
    let mut seen_virtual = vec![Vec::new(); m];
    let mut real: Vec<(usize, usize)> = Vec::new();
    for (i, node) in t.nodes.iter().enumerate() {
        for e in &node.edges {
            match e.tree_edge {
                Some(j) if j < m => {
                    if e.pair() != t.pairs[j] {
                        return bad(format!("virtual edge {j} has the wrong pair"));
                    }
                    seen_virtual[j].push(i);
                }
                Some(j) => return bad(format!("unknown tree edge {j}")),
                None => real.push(e.pair()),
            }
        }
        let nv = node.vertices.len();
        let ok = match node.kind {
            NodeKind::S => {
                let es: Vec<Edge> = node.edges.iter().map(|e| (e.u, e.v, e.tree_edge)).collect();
                nv >= 3 && is_cycle(&es, &node.vertices)
            }
            NodeKind::P => nv == 2 && node.edges.len() >= 3,
            NodeKind::R => {
                let h = node.skeleton_graph();
                h.m() == node.edges.len() && three_connected(&h)
            }
        };
        if !ok {
            return bad(format!("node {i} is not a valid {:?} skeleton", node.kind));
        }
    }
    for (j, w) in seen_virtual.iter().enumerate() {
        let (a, b) = t.tree_edges[j];
        let mut w = w.clone();
        w.sort_unstable();
        if w != [a.min(b), a.max(b)] {
            return bad(format!("virtual edge {j} does not match its tree edge"));
        }
        if t.nodes[a].kind == t.nodes[b].kind && t.nodes[a].kind != NodeKind::R {
            return bad(format!("adjacent {:?}-nodes at tree edge {j}", t.nodes[a].kind));
        }
    }
    real.sort_unstable();
    if real != g.edges() {
        return bad("real skeleton edges differ from the graph".into());
    }
    Ok(())
}
