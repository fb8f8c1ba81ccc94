//! Simple undirected graphs on dense ids `0..n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::flow::FlowNet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            n,
            adj,
            m: edges.len(),
        })
    }

    /// Like `from_edges` but silently drops loops and repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut es: Vec<(usize, usize)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        es.sort_unstable();
        es.dedup();
        Graph::from_edges(n, &es).expect("deduplicated edge list")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighbourhood, sorted.
    pub fn closed_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Induced subgraph on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vs.len(), &edges).expect("induced subgraph is simple")
    }

    /// Graph with the given extra edges (existing ones ignored).
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Graph {
        let mut es = self.edges();
        es.extend_from_slice(extra);
        Graph::from_edges_dedup(self.n, &es)
    }

    /// Neighbourhood bitmasks; requires `n <= 64`.
    pub fn adj_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask routines need n <= 64");
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = parse_pair(line, line_no)?;
            match header {
                None => header = Some(nums),
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("more than the declared {m} edges"),
                        });
                    }
                    let (u, v) = nums;
                    if u >= n {
                        return Err(Error::VertexOutOfRange(u));
                    }
                    if v >= n {
                        return Err(Error::VertexOutOfRange(v));
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: last_line.max(1),
            msg: "missing header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Components ordered by their minimum vertex; each part is sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Components of the subgraph induced by `V \ removed`.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let bc = biconnected_components(self);
        bc.blocks.len() == 1
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or(Error::Parse {
            line: line_no,
            msg: "expected two integers".into(),
        })?;
        tok.parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad integer {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

/// Iterates the set bits of a mask in ascending order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
}

/// Connected components of `set` in the graph given by `adj` masks.
pub fn mask_components(adj: &[u64], set: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = set;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= set & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,m}`: centre 0, leaves `1..=m`.
    Star(usize),
    /// `K_{s,t}`: sides `0..s` and `s..s+t`.
    CompleteBipartite(usize, usize),
    /// `rows x cols`, vertex `(i, j)` is `i * cols + j`.
    Grid(usize, usize),
    /// `W_k` from the `2k x k` grid; survivors numbered by `(y, x)`.
    Wall(usize),
    /// `F_k`: universal vertex 0, path `1..=k`.
    Fan(usize),
    /// `K_{2,k}`: poles 0 and 1, middle vertices `2..k+2`.
    DipoleSubdivided(usize),
    /// `G^{(k)}` with every parallel edge subdivided; new vertices appended
    /// per sorted edge, per copy.
    MultipleSubdivided { k: usize, base: Graph },
    /// Complete binary tree of height `h` in heap order, each edge
    /// subdivided once; subdivision vertices appended by child index.
    SubdividedBinaryTree(usize),
}

pub fn generate(f: &Family) -> Result<Graph> {
    let bad = |s: &str| Err(Error::InvalidParameter(s.to_string()));
    match *f {
        Family::Path(n) => {
            if n == 0 {
                return bad("path needs n >= 1");
            }
            let es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &es)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            let mut es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            es.push((0, n - 1));
            Graph::from_edges(n, &es)
        }
        Family::Complete(n) => {
            if n == 0 {
                return bad("complete graph needs n >= 1");
            }
            let mut es = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    es.push((u, v));
                }
            }
            Graph::from_edges(n, &es)
        }
        Family::Star(m) => {
            if m == 0 {
                return bad("star needs m >= 1");
            }
            let es: Vec<_> = (1..=m).map(|i| (0, i)).collect();
            Graph::from_edges(m + 1, &es)
        }
        Family::CompleteBipartite(s, t) => {
            if s == 0 || t == 0 {
                return bad("complete bipartite needs s, t >= 1");
            }
            let mut es = Vec::new();
            for u in 0..s {
                for v in s..s + t {
                    es.push((u, v));
                }
            }
            Graph::from_edges(s + t, &es)
        }
        Family::Grid(r, c) => {
            if r == 0 || c == 0 {
                return bad("grid needs positive sides");
            }
            let mut es = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    let v = i * c + j;
                    if j + 1 < c {
                        es.push((v, v + 1));
                    }
                    if i + 1 < r {
                        es.push((v, v + c));
                    }
                }
            }
            Graph::from_edges(r * c, &es)
        }
        Family::Wall(k) => {
            if k < 2 {
                return bad("wall needs k >= 2");
            }
            Ok(wall(k))
        }
        Family::Fan(k) => {
            if k == 0 {
                return bad("fan needs k >= 1");
            }
            let mut es: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            es.extend((2..=k).map(|i| (i - 1, i)));
            Graph::from_edges(k + 1, &es)
        }
        Family::DipoleSubdivided(k) => {
            if k == 0 {
                return bad("dipole needs k >= 1");
            }
            let mut es = Vec::new();
            for i in 2..k + 2 {
                es.push((0, i));
                es.push((1, i));
            }
            Graph::from_edges(k + 2, &es)
        }
        Family::MultipleSubdivided { k, ref base } => {
            if k == 0 {
                return bad("multiplicity needs k >= 1");
            }
            let mut n = base.n();
            let mut es = Vec::new();
            for (u, v) in base.edges() {
                for _ in 0..k {
                    es.push((u, n));
                    es.push((v, n));
                    n += 1;
                }
            }
            Graph::from_edges(n, &es)
        }
        Family::SubdividedBinaryTree(h) => {
            if h > 20 {
                return bad("binary tree height at most 20");
            }
            let nodes = (1usize << (h + 1)) - 1;
            let mut n = nodes;
            let mut es = Vec::new();
            for child in 1..nodes {
                let parent = (child - 1) / 2;
                es.push((parent, n));
                es.push((child, n));
                n += 1;
            }
            Graph::from_edges(n, &es)
        }
    }
}

fn wall(k: usize) -> Graph {
    let (w, h) = (2 * k, k);
    let id = |x: usize, y: usize| y * w + x;
    let mut es = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                es.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h && (x + y) % 2 == 0 {
                es.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    let grid = Graph::from_edges(w * h, &es).expect("grid edges");
    let keep: Vec<usize> = (0..w * h).filter(|&v| grid.degree(v) != 1).collect();
    grid.induced(&keep)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Edge set of each block, each edge `(u, v)` with `u < v`, sorted.
    pub blocks: Vec<Vec<(usize, usize)>>,
    /// Sorted vertex set of each block.
    pub block_vertices: Vec<Vec<usize>>,
    pub cutvertices: Vec<usize>,
    /// `(block, cutvertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
}

/// Blocks via the edge-stack DFS, iterative.
pub fn biconnected_components(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if p != usize::MAX {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    let block_vertices: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut vs: Vec<usize> = b.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut count = vec![0usize; n];
    for vs in &block_vertices {
        for &v in vs {
            count[v] += 1;
        }
    }
    let cutvertices: Vec<usize> = (0..n).filter(|&v| count[v] >= 2).collect();
    let mut tree_edges = Vec::new();
    for (b, vs) in block_vertices.iter().enumerate() {
        for &v in vs {
            if count[v] >= 2 {
                tree_edges.push((b, v));
            }
        }
    }
    BlockCutTree {
        blocks,
        block_vertices,
        cutvertices,
        tree_edges,
    }
}

/// Split-vertex network: `v_in = 2v`, `v_out = 2v+1`, unit vertex arcs.
fn split_network(g: &Graph, edge_cap: usize) -> FlowNet {
    let mut net = FlowNet::new(2 * g.n() + 2);
    for v in 0..g.n() {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, edge_cap);
        net.add_arc(2 * v + 1, 2 * u, edge_cap);
    }
    net
}

fn xy_network(g: &Graph, xs: &[usize], ys: &[usize]) -> (FlowNet, usize, usize) {
    // Non-vertex arcs are uncuttable so a minimum cut consists of vertices.
    let big = g.n() + 1;
    let mut net = split_network(g, big);
    let (s, t) = (2 * g.n(), 2 * g.n() + 1);
    for &x in xs {
        net.add_arc(s, 2 * x, big);
    }
    for &y in ys {
        net.add_arc(2 * y + 1, t, big);
    }
    (net, s, t)
}

/// Maximum number of vertex-disjoint X–Y paths (Menger).
pub fn menger_mu(g: &Graph, xs: &[usize], ys: &[usize]) -> usize {
    let (mut net, s, t) = xy_network(g, xs, ys);
    net.max_flow(s, t, usize::MAX)
}

/// A minimum X–Y separator (vertex set hitting every X–Y path).
pub fn min_separator(g: &Graph, xs: &[usize], ys: &[usize]) -> Vec<usize> {
    let (mut net, s, t) = xy_network(g, xs, ys);
    net.max_flow(s, t, usize::MAX);
    let reach = net.residual_reachable(s);
    (0..g.n())
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect()
}

/// Number of internally disjoint u–v paths; a direct edge counts once.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    let mut net = split_network(g, 1);
    net.max_flow(2 * u + 1, 2 * v, usize::MAX)
}
