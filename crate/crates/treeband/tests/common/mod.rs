//! Independent oracles and graph sources shared by the integration tests.
//! Nothing here calls into the library except to build `Graph` values.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treeband::graph::{generate, Family, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fam(f: Family) -> Graph {
    generate(&f).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub fn connected_mask(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

pub fn is_connected(g: &Graph) -> bool {
    let adj = adjacency(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    connected_mask(&adj, all)
}

/// Connected and no cutvertex, at least three vertices.
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !is_connected(g) {
        return false;
    }
    let adj = adjacency(g);
    let all = (1u64 << n) - 1;
    (0..n).all(|v| connected_mask(&adj, all & !(1 << v)))
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Every labelled graph on `n` vertices, by edge mask over [`pairs`].
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| {
        let es: Vec<_> = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &es).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge code over all relabellings.
pub fn canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let mut index = vec![vec![0usize; n]; n];
    for (i, (a, b)) in pairs(n).into_iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let edges = g.edges();
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |c, &(u, v)| c | 1 << index[p[u]][p[v]]))
        .min()
        .unwrap_or(0)
}

fn all_classes() -> &'static Vec<Vec<Graph>> {
    static CLASSES: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut by_n: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
        for n in 1..=7usize {
            let perms = permutations(n);
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for h in &by_n[n - 1] {
                for s in 0u64..1 << (n - 1) {
                    let mut es = h.edges();
                    es.extend((0..n - 1).filter(|&v| s >> v & 1 == 1).map(|v| (v, n - 1)));
                    let g = Graph::from_edges(n, &es).unwrap();
                    if seen.insert(canonical(&g, &perms)) {
                        out.push(g);
                    }
                }
            }
            by_n.push(out);
        }
        by_n
    })
}

/// One graph per isomorphism class on `n <= 7` vertices.
pub fn iso_classes(n: usize) -> &'static [Graph] {
    assert!(n <= 7);
    &all_classes()[n]
}

pub fn connected_classes(n: usize) -> Vec<Graph> {
    iso_classes(n).iter().filter(|g| is_connected(g)).cloned().collect()
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let es: Vec<_> = pairs(n).into_iter().filter(|_| r.gen_bool(p)).collect();
    Graph::from_edges(n, &es).unwrap()
}

/// Random spanning tree plus random extra edges.
pub fn random_connected(r: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut es: Vec<(usize, usize)> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
    for (a, b) in pairs(n) {
        if !es.contains(&(a, b)) && r.gen_bool(p) {
            es.push((a, b));
        }
    }
    Graph::from_edges(n, &es).unwrap()
}

/// Random subgraph of a triangulated grid (planar).
pub fn random_planarish(r: &mut ChaCha8Rng, rows: usize, cols: usize, keep: f64) -> Graph {
    let id = |i: usize, j: usize| i * cols + j;
    let mut es = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                es.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                es.push((id(i, j), id(i + 1, j)));
            }
            if i + 1 < rows && j + 1 < cols {
                es.push((id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    let kept: Vec<_> = es.into_iter().filter(|_| r.gen_bool(keep)).collect();
    Graph::from_edges(rows * cols, &kept).unwrap()
}

/// Random rooted tree as parent pointers, vertex labels shuffled.
pub fn random_tree_parents(r: &mut ChaCha8Rng, n: usize) -> Vec<Option<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        label.swap(i, r.gen_range(0..=i));
    }
    let mut parent = vec![None; n];
    for i in 1..n {
        parent[label[i]] = Some(label[r.gen_range(0..i)]);
    }
    parent
}

pub fn depths(parent: &[Option<usize>]) -> Vec<usize> {
    let n = parent.len();
    let mut d = vec![usize::MAX; n];
    fn get(v: usize, parent: &[Option<usize>], d: &mut [usize]) -> usize {
        if d[v] == usize::MAX {
            d[v] = match parent[v] {
                None => 0,
                Some(p) => get(p, parent, d) + 1,
            };
        }
        d[v]
    }
    for v in 0..n {
        get(v, parent, &mut d);
    }
    d
}

pub fn is_ancestor(parent: &[Option<usize>], a: usize, mut b: usize) -> bool {
    loop {
        if a == b {
            return true;
        }
        match parent[b] {
            Some(p) => b = p,
            None => return false,
        }
    }
}

/// Bandwidth of a parent-pointer layout, `None` if some edge is not an
/// ancestor pair.
pub fn naive_layout_bandwidth(g: &Graph, parent: &[Option<usize>]) -> Option<usize> {
    let d = depths(parent);
    let mut bw = 0;
    for (u, v) in g.edges() {
        if !is_ancestor(parent, u, v) && !is_ancestor(parent, v, u) {
            return None;
        }
        bw = bw.max(d[u].abs_diff(d[v]));
    }
    Some(bw)
}

/// Random graph together with a layout of bandwidth at most `k`: edges are
/// drawn between ancestor pairs at most `k` apart.
pub fn random_layout_graph(r: &mut ChaCha8Rng, n: usize, k: usize, p: f64) -> (Graph, Vec<Option<usize>>) {
    let parent = random_tree_parents(r, n);
    let mut es = Vec::new();
    for v in 0..n {
        let mut a = parent[v];
        let mut dist = 1;
        while let Some(x) = a {
            if dist > k {
                break;
            }
            if dist == 1 || r.gen_bool(p) {
                es.push((x.min(v), x.max(v)));
            }
            a = parent[x];
            dist += 1;
        }
    }
    (Graph::from_edges(n, &es).unwrap(), parent)
}

/// Treebandwidth by enumerating every rooted labelled tree (Prüfer codes
/// times roots). Returns the value and an optimal parent vector.
pub fn brute_tbw(g: &Graph) -> (usize, Vec<Option<usize>>) {
    let n = g.n();
    if n <= 1 {
        return (0, vec![None; n]);
    }
    let edges = g.edges();
    let floor = usize::from(!edges.is_empty());
    let mut best = (usize::MAX, Vec::new());
    let mut code = vec![0usize; n.saturating_sub(2)];
    let total = n.pow((n - 2) as u32);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut tin = vec![0usize; n];
    let mut tout = vec![0usize; n];
    for idx in 0..total {
        let mut x = idx;
        for c in code.iter_mut() {
            *c = x % n;
            x /= n;
        }
        for a in adj.iter_mut() {
            a.clear();
        }
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        for &c in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            adj[leaf].push(c);
            adj[c].push(leaf);
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        adj[rest[0]].push(rest[1]);
        adj[rest[1]].push(rest[0]);
        for root in 0..n {
            // iterative DFS for depth and entry/exit times
            let mut clock = 0;
            let mut stack = vec![(root, usize::MAX, 0usize)];
            parent[root] = None;
            depth[root] = 0;
            tin[root] = clock;
            clock += 1;
            while let Some(&mut (v, p, ref mut i)) = stack.last_mut() {
                if *i < adj[v].len() {
                    let w = adj[v][*i];
                    *i += 1;
                    if w != p {
                        parent[w] = Some(v);
                        depth[w] = depth[v] + 1;
                        tin[w] = clock;
                        clock += 1;
                        stack.push((w, v, 0));
                    }
                } else {
                    tout[v] = clock;
                    clock += 1;
                    stack.pop();
                }
            }
            let anc = |a: usize, b: usize| tin[a] <= tin[b] && tout[b] <= tout[a];
            let mut bw = 0;
            for &(u, v) in &edges {
                if !anc(u, v) && !anc(v, u) {
                    bw = usize::MAX;
                    break;
                }
                bw = bw.max(depth[u].abs_diff(depth[v]));
                if bw >= best.0 {
                    break;
                }
            }
            if bw < best.0 {
                best = (bw, parent.clone());
                if bw == floor {
                    return best;
                }
            }
        }
    }
    best
}

/// Exact treewidth by dynamic programming over elimination prefixes.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj = adjacency(g);
    // q(S, v): neighbours of v reachable through S
    let q = |s: u64, v: usize| -> usize {
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        let mut count = 0;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    count += 1;
                }
            }
        }
        count
    };
    let full = (1usize << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        for v in 0..n {
            if s >> v & 1 == 1 {
                let rest = s & !(1 << v);
                let val = tw[rest].max(q(rest as u64, v));
                best = best.min(val);
            }
        }
        tw[s] = best;
    }
    tw[full]
}

/// Exact bandwidth over all linear orders (n <= 8).
pub fn brute_bandwidth(g: &Graph) -> usize {
    let n = g.n();
    permutations(n)
        .into_iter()
        .map(|p| g.edges().iter().map(|&(u, v)| p[u].abs_diff(p[v])).max().unwrap_or(0))
        .min()
        .unwrap_or(0)
}

/// `td(G, U)` from the recursive definition.
pub fn naive_rooted_treedepth(g: &Graph, u: &[usize]) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let adj = adjacency(g);
    let umask = u.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut memo = std::collections::HashMap::new();
    fn comps(adj: &[u64], set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = set;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut seen = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[v] & set & !seen;
                seen |= new;
                frontier |= new;
            }
            out.push(seen);
            rest &= !seen;
        }
        out
    }
    fn td(adj: &[u64], umask: u64, set: u64, memo: &mut std::collections::HashMap<u64, usize>) -> usize {
        if set & umask == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&set) {
            return v;
        }
        let cs = comps(adj, set);
        let val = if cs.len() > 1 {
            cs.into_iter().map(|c| td(adj, umask, c, memo)).max().unwrap()
        } else {
            let mut best = usize::MAX;
            let mut rest = set;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                best = best.min(1 + td(adj, umask, set & !(1 << v), memo));
            }
            best
        };
        memo.insert(set, val);
        val
    }
    td(&adj, umask, (1u64 << n) - 1, &mut memo)
}

/// Largest `k` with a `U`-rooted `P_k` minor, by trying every assignment of
/// vertices to branch-set labels (n <= 9).
pub fn naive_largest_rooted_path_minor(g: &Graph, u: &[usize]) -> usize {
    let n = g.n();
    assert!(n <= 9);
    let adj = adjacency(g);
    let umask = u.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut best = 0;
    // labels 0 = unused, i = branch set i
    for k in (1..=n).rev() {
        if k <= best {
            break;
        }
        let total = (k + 1).pow(n as u32);
        for code in 0..total {
            let mut sets = vec![0u64; k];
            let mut x = code;
            for v in 0..n {
                let l = x % (k + 1);
                x /= k + 1;
                if l > 0 {
                    sets[l - 1] |= 1 << v;
                }
            }
            let ok = sets.iter().all(|&s| s != 0 && s & umask != 0 && connected_mask(&adj, s))
                && sets.windows(2).all(|w| {
                    let mut a = w[0];
                    let mut touch = false;
                    while a != 0 {
                        let v = a.trailing_zeros() as usize;
                        a &= a - 1;
                        touch |= adj[v] & w[1] != 0;
                    }
                    touch
                });
            if ok {
                best = k;
                break;
            }
        }
    }
    best
}

/// Maximum number of vertex-disjoint X-Y paths by exhaustive packing.
pub fn naive_menger(g: &Graph, xs: &[usize], ys: &[usize]) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let xm = xs.iter().fold(0u64, |m, &v| m | 1 << v);
    let ym = ys.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut memo = std::collections::HashMap::new();
    // vertex sets of paths from x to Y inside `avail` with no other X or Y vertex
    fn paths_from(adj: &[u64], x: usize, xm: u64, ym: u64, avail: u64) -> Vec<u64> {
        let mut out = Vec::new();
        if ym >> x & 1 == 1 {
            out.push(1u64 << x);
            return out;
        }
        fn rec(adj: &[u64], v: usize, used: u64, xm: u64, ym: u64, avail: u64, out: &mut Vec<u64>) {
            let mut nb = adj[v] & avail & !used;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                let u2 = used | 1 << w;
                if ym >> w & 1 == 1 {
                    out.push(u2);
                } else if xm >> w & 1 == 0 {
                    rec(adj, w, u2, xm, ym, avail, out);
                }
            }
        }
        rec(adj, x, 1 << x, xm, ym, avail, &mut out);
        out
    }
    fn best(
        adj: &[u64],
        xm: u64,
        ym: u64,
        avail: u64,
        memo: &mut std::collections::HashMap<u64, usize>,
    ) -> usize {
        let free_x = xm & avail;
        if free_x == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let x = free_x.trailing_zeros() as usize;
        let mut val = best(adj, xm, ym, avail & !(1 << x), memo);
        for p in paths_from(adj, x, xm, ym, avail) {
            val = val.max(1 + best(adj, xm, ym, avail & !p, memo));
        }
        memo.insert(avail, val);
        val
    }
    best(&adj, xm, ym, (1u64 << n) - 1, &mut memo)
}

/// Does `g` contain a subdivision of the multigraph `pattern` (edge list on
/// `k` vertices)? With `fixed`, branch vertex `i` must be `fixed[i]`.
pub fn has_topological_minor(g: &Graph, k: usize, pattern: &[(usize, usize)], fixed: Option<&[usize]>) -> bool {
    let n = g.n();
    let adj = adjacency(g);
    let mut pdeg = vec![0usize; k];
    for &(a, b) in pattern {
        pdeg[a] += 1;
        pdeg[b] += 1;
    }
    // assignment order: high degree first
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pdeg[v]));
    let pos: Vec<usize> = {
        let mut p = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    // edges routed right after their later endpoint is assigned
    let mut due: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(a, b) in pattern {
        let late = if pos[a] > pos[b] { a } else { b };
        due[pos[late]].push((a, b));
    }
    struct S<'a> {
        adj: Vec<u64>,
        n: usize,
        order: Vec<usize>,
        due: Vec<Vec<(usize, usize)>>,
        pdeg: Vec<usize>,
        fixed: Option<&'a [usize]>,
        map: Vec<usize>,
        used: u64,
        direct: HashSet<(usize, usize)>,
    }
    impl S<'_> {
        fn assign(&mut self, i: usize) -> bool {
            if i == self.order.len() {
                return true;
            }
            let pv = self.order[i];
            let cands: Vec<usize> = match self.fixed {
                Some(f) => vec![f[pv]],
                None => (0..self.n).collect(),
            };
            for v in cands {
                if self.used >> v & 1 == 1 || (self.adj[v].count_ones() as usize) < self.pdeg[pv] {
                    continue;
                }
                self.map[pv] = v;
                self.used |= 1 << v;
                if self.route(i, 0) {
                    return true;
                }
                self.used &= !(1 << v);
            }
            false
        }

        fn route(&mut self, i: usize, j: usize) -> bool {
            if j == self.due[i].len() {
                return self.assign(i + 1);
            }
            let (a, b) = self.due[i][j];
            let (s, t) = (self.map[a], self.map[b]);
            let key = (s.min(t), s.max(t));
            if self.adj[s] >> t & 1 == 1 && !self.direct.contains(&key) {
                self.direct.insert(key);
                if self.route(i, j + 1) {
                    return true;
                }
                self.direct.remove(&key);
            }
            self.walk(i, j, s, t)
        }

        /// Extends a path at `v` through unused vertices towards `t`,
        /// with at least one internal vertex.
        fn walk(&mut self, i: usize, j: usize, v: usize, t: usize) -> bool {
            let mut nb = self.adj[v] & !self.used;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                self.used |= 1 << w;
                let done = (self.adj[w] >> t & 1 == 1 && self.route(i, j + 1)) || self.walk(i, j, w, t);
                self.used &= !(1 << w);
                if done {
                    return true;
                }
            }
            false
        }
    }
    let mut s = S {
        adj,
        n,
        order,
        due,
        pdeg,
        fixed,
        map: vec![usize::MAX; k],
        used: 0,
        direct: HashSet::new(),
    };
    s.assign(0)
}

/// The gem `F_4`: hub 0 and path 1-2-3-4.
pub const GEM: [(usize, usize); 7] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)];

/// Maximal cliques by Bron–Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let mut out = Vec::new();
    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<Vec<usize>>) {
        if p == 0 && x == 0 {
            let mut c = Vec::new();
            let mut m = r;
            while m != 0 {
                c.push(m.trailing_zeros() as usize);
                m &= m - 1;
            }
            out.push(c);
            return;
        }
        let px = p | x;
        let pivot = (0..64)
            .filter(|&u| px >> u & 1 == 1)
            .max_by_key(|&u| (adj[u] & p).count_ones())
            .unwrap();
        let mut cand = p & !adj[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = g.n();
    if n > 0 {
        bk(&adj, 0, (1u64 << n) - 1, 0, &mut out);
    }
    out.sort();
    out
}

/// Every connected vertex set sees more than `p` colours or has a colour
/// used once; returns a violating set otherwise.
pub fn naive_pcentered(g: &Graph, colour: &[usize], p: usize) -> Option<u64> {
    let n = g.n();
    assert!(n <= 20);
    let adj = adjacency(g);
    for s in 1u64..1 << n {
        if !connected_mask(&adj, s) {
            continue;
        }
        let mut count = std::collections::BTreeMap::new();
        for v in 0..n {
            if s >> v & 1 == 1 {
                *count.entry(colour[v]).or_insert(0usize) += 1;
            }
        }
        if count.len() <= p && !count.values().any(|&c| c == 1) {
            return Some(s);
        }
    }
    None
}

/// Path between two tree nodes via parent pointers and depths.
pub fn tree_path(parent: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
    let d = depths(parent);
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while d[x] > d[y] {
        x = parent[x].unwrap();
        left.push(x);
    }
    while d[y] > d[x] {
        y = parent[y].unwrap();
        right.push(y);
    }
    while x != y {
        x = parent[x].unwrap();
        y = parent[y].unwrap();
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Families swept by several tests, each at most `max_n` vertices.
pub fn family_sweep(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |name: String, f: Family| {
        let g = fam(f);
        if g.n() <= max_n {
            out.push((name, g));
        }
    };
    for n in 1..=max_n {
        push(format!("P{n}"), Family::Path(n));
    }
    for n in 3..=max_n {
        push(format!("C{n}"), Family::Cycle(n));
    }
    for m in 1..max_n {
        push(format!("star{m}"), Family::Star(m));
    }
    for k in 2..max_n {
        push(format!("F{k}"), Family::Fan(k));
    }
    for n in 2..=6.min(max_n) {
        push(format!("K{n}"), Family::Complete(n));
    }
    for k in 2..=max_n.saturating_sub(2) {
        push(format!("K2,{k}"), Family::DipoleSubdivided(k));
    }
    for (r, c) in [(2, 3), (2, 4), (3, 3), (2, 6), (3, 4), (4, 4)] {
        push(format!("grid{r}x{c}"), Family::Grid(r, c));
    }
    for k in 2..=4 {
        push(format!("W{k}"), Family::Wall(k));
    }
    for h in 1..=2 {
        push(format!("bintree{h}"), Family::SubdividedBinaryTree(h));
    }
    out
}
