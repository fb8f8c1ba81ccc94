//! Gem-freeness, the planar fan conditions and the planar layout gluing.

use std::collections::VecDeque;

use serde::Serialize;

use super::{build_spqr, NodeKind, SpqrNode, SpqrTree};
use crate::error::{Error, Result};
use crate::graph::{biconnected_components, Graph};
use crate::layout::{bandwidth_of_layout, chain_forest, partition_layout, TreeLayout, TreePartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GemViolation {
    /// An R-skeleton vertex of degree at least 4.
    RDegree {
        vertex: usize,
        degree: usize,
        skeleton: Vec<usize>,
    },
    /// A vertex lying in two P- or R-skeletons of the same block.
    SharedVertex {
        vertex: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GemReport {
    pub gem_free: bool,
    pub violation: Option<GemViolation>,
}

/// SPQR trees of the blocks with at least three vertices, in `g`'s numbering.
fn block_trees(g: &Graph) -> Result<Vec<SpqrTree>> {
    let bc = biconnected_components(g);
    let mut out = Vec::new();
    for vs in &bc.block_vertices {
        if vs.len() < 3 {
            continue;
        }
        let mut t = build_spqr(&g.induced(vs))?;
        for node in &mut t.nodes {
            for v in node.vertices.iter_mut() {
                *v = vs[*v];
            }
            for e in node.edges.iter_mut() {
                e.u = vs[e.u];
                e.v = vs[e.v];
            }
        }
        for p in t.pairs.iter_mut() {
            *p = (vs[p.0], vs[p.1]);
        }
        out.push(t);
    }
    Ok(out)
}

/// Exact test for excluding the gem `F_4` as a topological minor.
pub fn gem_free_check(g: &Graph) -> Result<GemReport> {
    for t in block_trees(g)? {
        for node in t.nodes.iter().filter(|x| x.kind == NodeKind::R) {
            for &v in &node.vertices {
                let d = node.degree(v);
                if d > 3 {
                    return Ok(GemReport {
                        gem_free: false,
                        violation: Some(GemViolation::RDegree {
                            vertex: v,
                            degree: d,
                            skeleton: node.vertices.clone(),
                        }),
                    });
                }
            }
        }
        let heavy: Vec<&SpqrNode> = t.nodes.iter().filter(|x| x.kind != NodeKind::S).collect();
        for (i, a) in heavy.iter().enumerate() {
            for b in &heavy[i + 1..] {
                if let Some(&v) = a.vertices.iter().find(|v| b.vertices.contains(v)) {
                    return Ok(GemReport {
                        gem_free: false,
                        violation: Some(GemViolation::SharedVertex {
                            vertex: v,
                            first: a.vertices.clone(),
                            second: b.vertices.clone(),
                        }),
                    });
                }
            }
        }
    }
    Ok(GemReport {
        gem_free: true,
        violation: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PlanarViolation {
    /// Condition (1): an R-skeleton vertex of degree at least `k`.
    RDegree { node: usize, vertex: usize, degree: usize },
    /// Condition (2): a tree path carrying more than `2k+1` pairs through `vertex`.
    SeparatingPairs { vertex: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarReport {
    pub passed: bool,
    pub violations: Vec<PlanarViolation>,
}

/// Longest path, in edges, inside the subtree of nodes containing `x`.
fn pair_path_length(t: &SpqrTree, adj: &[Vec<(usize, usize)>], x: usize) -> usize {
    let inside: Vec<bool> = t.nodes.iter().map(|s| s.vertices.contains(&x)).collect();
    let far = |start: usize| -> (usize, usize) {
        let mut dist = vec![usize::MAX; t.nodes.len()];
        dist[start] = 0;
        let mut q = VecDeque::from([start]);
        let mut best = (start, 0);
        while let Some(a) = q.pop_front() {
            if dist[a] > best.1 {
                best = (a, dist[a]);
            }
            for &(b, _) in &adj[a] {
                if inside[b] && dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    q.push_back(b);
                }
            }
        }
        best
    };
    match inside.iter().position(|&b| b) {
        Some(s) => far(far(s).0).1,
        None => 0,
    }
}

fn tree_conditions(t: &SpqrTree, k: usize, out: &mut Vec<PlanarViolation>) {
    for (i, node) in t.nodes.iter().enumerate() {
        if node.kind != NodeKind::R {
            continue;
        }
        for &v in &node.vertices {
            let d = node.degree(v);
            if d >= k {
                out.push(PlanarViolation::RDegree {
                    node: i,
                    vertex: v,
                    degree: d,
                });
            }
        }
    }
    let adj = t.adjacency();
    let mut vs: Vec<usize> = t.nodes.iter().flat_map(|s| s.vertices.clone()).collect();
    vs.sort_unstable();
    vs.dedup();
    for x in vs {
        let count = pair_path_length(t, &adj, x);
        if count > 2 * k + 1 {
            out.push(PlanarViolation::SeparatingPairs { vertex: x, count });
        }
    }
}

/// Both structural conditions on the SPQR tree of a 2-connected graph.
/// Planarity is the caller's promise; only condition (1) depends on it.
pub fn planar_fan_conditions(g: &Graph, k: usize) -> Result<PlanarReport> {
    let t = build_spqr(g)?;
    let mut violations = Vec::new();
    tree_conditions(&t, k, &mut violations);
    Ok(PlanarReport {
        passed: violations.is_empty(),
        violations,
    })
}

/// BFS-layered tree-partition with `root_set` as the root part (index 0).
/// Vertices not reached from `root_set` hang below it, component by component.
pub fn tree_partition_construct(g: &Graph, root_set: &[usize]) -> Result<TreePartition> {
    let n = g.n();
    if n == 0 {
        return Ok(TreePartition {
            parts: Vec::new(),
            edges: Vec::new(),
        });
    }
    let mut roots: Vec<usize> = root_set.to_vec();
    roots.sort_unstable();
    roots.dedup();
    if let Some(&v) = roots.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange(v));
    }
    if roots.is_empty() {
        roots.push(0);
    }
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    let mut sources = roots;
    let mut above: Option<usize> = None;
    loop {
        layered(g, &sources, above, &mut part_of, &mut parts, &mut edges);
        above = Some(0);
        match part_of.iter().position(|&p| p == usize::MAX) {
            Some(v) => sources = vec![v],
            None => break,
        }
    }
    Ok(TreePartition { parts, edges })
}

fn layered(
    g: &Graph,
    sources: &[usize],
    above: Option<usize>,
    part_of: &mut [usize],
    parts: &mut Vec<Vec<usize>>,
    edges: &mut Vec<(usize, usize)>,
) {
    let n = g.n();
    let mut layer = vec![usize::MAX; n];
    let mut q = VecDeque::new();
    for &s in sources {
        layer[s] = 0;
        q.push_back(s);
    }
    let mut region = Vec::new();
    while let Some(a) = q.pop_front() {
        region.push(a);
        for &b in g.neighbors(a) {
            if layer[b] == usize::MAX && part_of[b] == usize::MAX {
                layer[b] = layer[a] + 1;
                q.push_back(b);
            }
        }
    }
    let root = parts.len();
    parts.push(sources.to_vec());
    for &s in sources {
        part_of[s] = root;
    }
    if let Some(p) = above {
        edges.push((p, root));
    }
    let depth = region.iter().map(|&v| layer[v]).max().unwrap_or(0);
    for i in 1..=depth {
        // parts at layer i are the traces of components of the region at layers >= i
        let mut comp = vec![usize::MAX; n];
        for &s in region.iter().filter(|&&v| layer[v] == i) {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = Vec::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(a) = stack.pop() {
                if layer[a] == i {
                    part.push(a);
                }
                for &b in g.neighbors(a) {
                    if layer[b] != usize::MAX && layer[b] >= i && comp[b] == usize::MAX {
                        comp[b] = id;
                        stack.push(b);
                    }
                }
            }
            part.sort_unstable();
            let w = g
                .neighbors(part[0])
                .iter()
                .copied()
                .find(|&w| layer[w] != usize::MAX && layer[w] + 1 == i)
                .expect("BFS parent");
            edges.push((part_of[w], id));
            for &v in &part {
                part_of[v] = id;
            }
            parts.push(part);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarLayout {
    pub layout: TreeLayout,
    pub bandwidth: usize,
}

/// Parent pointers for one skeleton with `lead` forming the top of a chain.
fn node_layout(node: &SpqrNode, lead: &[usize]) -> Vec<(usize, Option<usize>)> {
    let chain = |order: &[usize]| -> Vec<(usize, Option<usize>)> {
        order
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, (i > 0).then(|| order[i - 1])))
            .collect()
    };
    match node.kind {
        NodeKind::P => {
            let mut order = lead.to_vec();
            order.extend(node.vertices.iter().filter(|v| !lead.contains(v)));
            chain(&order)
        }
        NodeKind::S => {
            let mut cyc = node.cycle_from(lead[0]);
            if lead.len() > 1 && cyc[1] != lead[1] {
                cyc[1..].reverse();
            }
            // c0, c1, c_{m-1}, c2, c_{m-2}, ... keeps cycle neighbours two apart
            let m = cyc.len();
            let mut order = vec![cyc[0]];
            let (mut lo, mut hi) = (1, m - 1);
            while lo <= hi {
                order.push(cyc[lo]);
                if lo != hi {
                    order.push(cyc[hi]);
                }
                lo += 1;
                hi -= 1;
            }
            chain(&order)
        }
        NodeKind::R => {
            let h = node.skeleton_graph();
            let idx = |x: usize| node.vertices.binary_search(&x).unwrap();
            let local: Vec<usize> = lead.iter().map(|&x| idx(x)).collect();
            let tp = tree_partition_construct(&h, &local).expect("skeleton partition");
            let t = partition_layout(h.n(), &tp, 0, &local);
            (0..h.n())
                .map(|i| (node.vertices[i], t.parent(i).map(|p| node.vertices[p])))
                .collect()
        }
    }
}

/// Lays out one block rooted at `r`, writing parents of its other vertices.
fn block_layout(t: &SpqrTree, r: usize, parent: &mut [Option<usize>], depth: &mut [usize]) {
    let start = t.nodes.iter().position(|s| s.vertices.contains(&r)).unwrap();
    let mut set = |v: usize, p: usize, parent: &mut [Option<usize>], depth: &mut [usize]| {
        parent[v] = Some(p);
        depth[v] = depth[p] + 1;
    };
    // the root skeleton hangs from r, which is already placed
    let lead = {
        let node = &t.nodes[start];
        let mut lead = vec![r];
        if node.kind == NodeKind::S {
            let y = node.cycle_from(r)[1];
            lead.push(y);
        }
        lead
    };
    let top = node_layout(&t.nodes[start], &lead);
    place(&top, r, parent, depth, &mut set);
    let adj = t.adjacency();
    let mut seen = vec![false; t.nodes.len()];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(a) = q.pop_front() {
        for &(b, e) in &adj[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            let (p, s) = t.pairs[e];
            let (x, y) = if depth[p] <= depth[s] { (p, s) } else { (s, p) };
            let lay = node_layout(&t.nodes[b], &[x, y]);
            // drop x and glue at y
            let rest: Vec<(usize, Option<usize>)> = lay.into_iter().filter(|&(v, _)| v != x).collect();
            place(&rest, y, parent, depth, &mut set);
            q.push_back(b);
        }
    }
}

/// Writes `lay` (a tree rooted at `anchor`) below the already placed `anchor`,
/// parents before children.
fn place(
    lay: &[(usize, Option<usize>)],
    anchor: usize,
    parent: &mut [Option<usize>],
    depth: &mut [usize],
    set: &mut impl FnMut(usize, usize, &mut [Option<usize>], &mut [usize]),
) {
    let mut done = vec![anchor];
    let mut pending: Vec<(usize, Option<usize>)> = lay.iter().copied().filter(|&(v, _)| v != anchor).collect();
    while !pending.is_empty() {
        let before = pending.len();
        pending.retain(|&(v, p)| {
            let p = p.expect("only the anchor is a root");
            if done.contains(&p) {
                set(v, p, parent, depth);
                done.push(v);
                false
            } else {
                true
            }
        });
        assert!(pending.len() < before, "skeleton layout is not rooted at its anchor");
    }
}

/// Block-by-block layout glued along separating pairs and cutvertices.
pub fn planar_layout_construct(g: &Graph, k: usize) -> Result<PlanarLayout> {
    let n = g.n();
    let trees = block_trees(g)?;
    let mut violations = Vec::new();
    for t in &trees {
        tree_conditions(t, k, &mut violations);
    }
    if !violations.is_empty() {
        return Err(Error::Precondition(format!(
            "planar fan conditions fail for k = {k}: {violations:?}"
        )));
    }
    let bc = biconnected_components(g);
    // block index -> spqr tree for blocks of size >= 3
    let mut tree_of = vec![None; bc.block_vertices.len()];
    let mut next = 0;
    for (i, vs) in bc.block_vertices.iter().enumerate() {
        if vs.len() >= 3 {
            tree_of[i] = Some(next);
            next += 1;
        }
    }
    let mut blocks_at = vec![Vec::new(); n];
    for (i, vs) in bc.block_vertices.iter().enumerate() {
        for &v in vs {
            blocks_at[v].push(i);
        }
    }
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut used = vec![false; bc.block_vertices.len()];
    let mut roots = Vec::new();
    for comp in g.components() {
        let r0 = comp[0];
        roots.push(r0);
        let mut q = VecDeque::new();
        for &b in &blocks_at[r0] {
            if !used[b] {
                used[b] = true;
                q.push_back((b, r0));
            }
        }
        while let Some((b, r)) = q.pop_front() {
            match tree_of[b] {
                Some(ti) => block_layout(&trees[ti], r, &mut parent, &mut depth),
                None => {
                    let w = bc.block_vertices[b].iter().copied().find(|&v| v != r).unwrap();
                    parent[w] = Some(r);
                    depth[w] = depth[r] + 1;
                }
            }
            for &v in &bc.block_vertices[b] {
                for &c in &blocks_at[v] {
                    if !used[c] {
                        used[c] = true;
                        q.push_back((c, v));
                    }
                }
            }
        }
    }
    let layout = chain_forest(parent, &roots)?;
    let bandwidth = bandwidth_of_layout(g, &layout)?;
    Ok(PlanarLayout { layout, bandwidth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::layout::validate_layout;

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn wheel(k: usize) -> Graph {
        let mut es: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
        for i in 1..=k {
            es.push((i, i % k + 1));
        }
        Graph::from_edges(k + 1, &es).unwrap()
    }

    /// Hub 0, path y_1..y_m, each spoke doubled by a subdivided copy.
    fn doubled_fan(m: usize) -> Graph {
        let mut es = Vec::new();
        for i in 1..=m {
            es.push((0, i));
            es.push((0, m + i));
            es.push((m + i, i));
            if i < m {
                es.push((i, i + 1));
            }
        }
        Graph::from_edges(2 * m + 1, &es).unwrap()
    }

    #[test]
    fn gem_examples() {
        assert!(!gem_free_check(&gen(Family::Fan(4))).unwrap().gem_free);
        assert!(gem_free_check(&gen(Family::Fan(3))).unwrap().gem_free);
        assert!(gem_free_check(&gen(Family::Cycle(7))).unwrap().gem_free);
        assert!(gem_free_check(&gen(Family::Path(7))).unwrap().gem_free);
        assert!(gem_free_check(&gen(Family::Complete(4))).unwrap().gem_free);
        let w5 = gem_free_check(&wheel(5)).unwrap();
        assert!(matches!(
            w5.violation,
            Some(GemViolation::RDegree { vertex: 0, degree: 5, .. })
        ));
    }

    #[test]
    fn planar_conditions() {
        for k in 3..6 {
            assert!(planar_fan_conditions(&gen(Family::Cycle(9)), k).unwrap().passed);
        }
        let w = wheel(6);
        assert!(planar_fan_conditions(&w, 7).unwrap().passed);
        for k in 3..=6 {
            let rep = planar_fan_conditions(&w, k).unwrap();
            assert!(rep.violations.contains(&PlanarViolation::RDegree {
                node: 0,
                vertex: 0,
                degree: 6
            }));
        }
        let g = doubled_fan(8);
        let rep = planar_fan_conditions(&g, 3).unwrap();
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, PlanarViolation::SeparatingPairs { vertex: 0, .. })));
    }

    #[test]
    fn partitions() {
        let p = gen(Family::Path(5));
        let tp = tree_partition_construct(&p, &[0]).unwrap();
        assert_eq!(tp.parts, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(tp.width(), 1);
        let s = gen(Family::Star(4));
        let tp = tree_partition_construct(&s, &[0]).unwrap();
        assert_eq!(tp.parts[0], vec![0]);
        tp.validate(&s).unwrap();
        let grid = gen(Family::Grid(3, 3));
        let tp = tree_partition_construct(&grid, &[0]).unwrap();
        tp.validate(&grid).unwrap();
        assert_eq!(tp.width(), 3);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let tp = tree_partition_construct(&two, &[1]).unwrap();
        tp.validate(&two).unwrap();
        assert_eq!(tp.parts[0], vec![1]);
    }

    #[test]
    fn planar_layouts() {
        for n in 3..9 {
            let c = gen(Family::Cycle(n));
            let pl = planar_layout_construct(&c, 3).unwrap();
            assert!(pl.bandwidth <= 2);
        }
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(planar_layout_construct(&diamond, 3).unwrap().bandwidth, 2);
        let w = gen(Family::Wall(4));
        let pl = planar_layout_construct(&w, 4).unwrap();
        assert!(validate_layout(&w, &pl.layout).unwrap().is_empty());
        assert!(pl.bandwidth >= 2);
        let t = gen(Family::SubdividedBinaryTree(3));
        assert!(planar_layout_construct(&t, 3).unwrap().bandwidth >= 1);
        assert!(matches!(
            planar_layout_construct(&wheel(6), 4),
            Err(Error::Precondition(_))
        ));
    }
}
