//! Folding a decomposition so that the bags around each adhesion pull in
//! the neighbourhoods of its vertices.

use serde::Serialize;

use super::conditions::{check_dipole_conditions, check_fan_conditions, intro_nodes};
use super::validate::validate_decomposition;
use super::{intersect, max_vertex_span_diameter, overlap_number, union, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{min_separator, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldReport {
    pub decomposition: TreeDecomposition,
    /// The `(a, b, c)` the input was checked against.
    pub params: (usize, usize, usize),
    /// `6·c·a` for the fan fold.
    pub diameter_bound: Option<usize>,
    pub max_span_diameter: usize,
    /// [`dipole_overlap_bound`] for the dipole fold.
    pub overlap_bound: Option<usize>,
    pub overlap: usize,
    pub width: usize,
    pub max_adhesion: usize,
}

/// Overlap bound for the dipole fold. A call marks at most `a(2a-1)c`
/// separator bags plus its root and two boundary nodes; closing under
/// branching at most doubles this to `s`. A pair of vertices shares bags in
/// one contracted tree and in at most `s` recursive calls below it.
pub fn dipole_overlap_bound(a: usize, c: usize) -> usize {
    let s = 2 * (a * (2 * a).saturating_sub(1) * c + 3);
    s * (1 + s)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Fan,
    Dipole,
}

struct Folder<'a> {
    g: &'a Graph,
    mode: Mode,
    adj: Vec<Vec<usize>>,
    /// Bags of the input, shrunk as vertices are removed from subtrees.
    cur: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    done: Vec<bool>,
    /// Per vertex, the nodes introducing its edges.
    intro: Vec<Vec<usize>>,
}

impl Folder<'_> {
    /// Folds the subtree `comp` (rooted at `r`, next to `attach`) whose
    /// only placed vertices are those of `a`.
    fn process(&mut self, comp: &[usize], a: &[usize], r: usize, boundary: &[usize], attach: usize) {
        let nodes = self.adj.len();
        let mut inq = vec![false; nodes];
        for &t in comp {
            inq[t] = true;
        }
        let mut qparent = vec![usize::MAX; nodes];
        let mut depth = vec![0usize; nodes];
        let mut order = vec![r];
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            i += 1;
            for &s in &self.adj[t] {
                if inq[s] && s != qparent[t] && s != r {
                    qparent[s] = t;
                    depth[s] = depth[t] + 1;
                    order.push(s);
                }
            }
        }
        let mut mark = vec![false; nodes];
        mark[r] = true;
        for &t in boundary {
            mark[t] = true;
        }
        match self.mode {
            Mode::Fan => {
                for &x in a {
                    for &t in &self.intro[x] {
                        if inq[t] {
                            mark[t] = true;
                        }
                    }
                }
            }
            Mode::Dipole => {
                for (i, &u) in a.iter().enumerate() {
                    for &v in &a[i + 1..] {
                        let sep = min_separator(self.g, self.g.neighbors(u), self.g.neighbors(v));
                        for x in sep {
                            if let Some(&t) = comp.iter().filter(|&&t| self.has(t, x)).min() {
                                mark[t] = true;
                            }
                        }
                    }
                }
            }
        }
        // union of root paths, then its branching nodes
        let mut in_t1 = vec![false; nodes];
        for &t in &order {
            if mark[t] {
                let mut x = t;
                while !in_t1[x] {
                    in_t1[x] = true;
                    if x == r {
                        break;
                    }
                    x = qparent[x];
                }
            }
        }
        let mut kids = vec![0usize; nodes];
        for &t in &order {
            if in_t1[t] && t != r {
                kids[qparent[t]] += 1;
            }
        }
        let in_b: Vec<bool> = (0..nodes).map(|t| inq[t] && (mark[t] || kids[t] >= 2)).collect();
        for &t in &order {
            if !in_b[t] {
                continue;
            }
            let p = if t == r {
                attach
            } else {
                let mut x = qparent[t];
                while !in_b[x] {
                    x = qparent[x];
                }
                x
            };
            self.parent[t] = Some(p);
            self.out[t] = union(&self.cur[t], a);
            self.done[t] = true;
        }
        // components of the subtree without the contracted tree
        let mut seen = vec![false; nodes];
        for &start in &order {
            if in_b[start] || seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut j = 0;
            while j < c.len() {
                let t = c[j];
                j += 1;
                for &s in &self.adj[t] {
                    if inq[s] && !in_b[s] && !seen[s] {
                        seen[s] = true;
                        c.push(s);
                    }
                }
            }
            let mut links: Vec<(usize, usize)> = Vec::new();
            for &t in &c {
                for &s in &self.adj[t] {
                    if inq[s] && in_b[s] {
                        links.push((s, t));
                    }
                }
            }
            links.sort_by_key(|&(s, _)| depth[s]);
            self.component(&c, a, &links);
        }
    }

    fn component(&mut self, c: &[usize], a: &[usize], links: &[(usize, usize)]) {
        let removable: Vec<usize> = match self.mode {
            Mode::Fan if links.len() == 2 => a.to_vec(),
            Mode::Fan => Vec::new(),
            Mode::Dipole => a
                .iter()
                .copied()
                .filter(|&x| !self.intro[x].iter().any(|t| c.contains(t)))
                .collect(),
        };
        match *links {
            [(b, u)] => {
                for &t in c {
                    self.cur[t].retain(|x| removable.binary_search(x).is_err());
                }
                let next = intersect(&self.cur[b], &self.cur[u]);
                self.process(c, &next, u, &[u], b);
            }
            [(p, u1), (b, u2)] => {
                let both = union(
                    &intersect(&self.cur[p], &self.cur[u1]),
                    &intersect(&self.cur[u2], &self.cur[b]),
                );
                self.out[b] = union(&self.out[b], &both);
                for &t in c {
                    self.cur[t].retain(|x| removable.binary_search(x).is_err());
                }
                let next: Vec<usize> = both
                    .into_iter()
                    .filter(|x| removable.binary_search(x).is_err())
                    .collect();
                let mut bnd = vec![u1, u2];
                bnd.dedup();
                self.process(c, &next, u2, &bnd, b);
            }
            _ => unreachable!("a component touches one or two contracted nodes"),
        }
    }

    fn has(&self, t: usize, x: usize) -> bool {
        self.cur[t].binary_search(&x).is_ok()
    }
}

fn fold(g: &Graph, d: &TreeDecomposition, mode: Mode) -> Result<TreeDecomposition> {
    if d.nodes() <= 1 {
        return Ok(d.clone());
    }
    let t0 = d.nodes_with(0).first().copied().unwrap_or(0);
    let rooted = d.clone().with_root(t0);
    let mut f = Folder {
        g,
        mode,
        adj: d.adjacency(),
        cur: d.bags().to_vec(),
        out: vec![Vec::new(); d.nodes()],
        parent: vec![None; d.nodes()],
        done: vec![false; d.nodes()],
        intro: intro_nodes(g, &rooted)?,
    };
    f.out[t0] = d.bag(t0).to_vec();
    f.done[t0] = true;
    let r = rooted.rooted();
    for &u in &r.children[t0] {
        let mut side = vec![u];
        let mut j = 0;
        while j < side.len() {
            let t = side[j];
            j += 1;
            side.extend(r.children[t].iter().copied());
        }
        let a = d.adhesion(t0, u);
        f.process(&side, &a, u, &[u], t0);
    }
    if let Some(t) = f.done.iter().position(|&x| !x) {
        return Err(Error::Structure(format!("fold left node {t} unplaced")));
    }
    let edges: Vec<(usize, usize)> = (0..d.nodes())
        .filter_map(|t| f.parent[t].map(|p| (p, t)))
        .collect();
    let out = TreeDecomposition::new(f.out, edges, Some(t0))?;
    if !validate_decomposition(g, &out, None)?.is_decomposition() {
        return Err(Error::Structure("fold broke the decomposition".into()));
    }
    Ok(out)
}

fn report(
    g: &Graph,
    out: TreeDecomposition,
    params: (usize, usize, usize),
    diameter_bound: Option<usize>,
    overlap_bound: Option<usize>,
) -> FoldReport {
    FoldReport {
        max_span_diameter: max_vertex_span_diameter(&out, g.n()),
        overlap: overlap_number(&out),
        width: out.width(),
        max_adhesion: out.max_adhesion(),
        decomposition: out,
        params,
        diameter_bound,
        overlap_bound,
    }
}

/// Folds `d` after checking the fan conditions for `(a, b, c)`. Every
/// vertex's bags span a subtree of diameter at most `6ca`.
pub fn fold_fan(g: &Graph, d: &TreeDecomposition, a: usize, b: usize, c: usize) -> Result<FoldReport> {
    let check = check_fan_conditions(g, d, a, b, c)?;
    if !check.passed() {
        return Err(Error::Precondition(format!(
            "fan conditions fail for ({a}, {b}, {c}); measured {:?}",
            check.measured
        )));
    }
    let out = fold(g, d, Mode::Fan)?;
    Ok(report(g, out, (a, b, c), Some(6 * c * a), None))
}

/// Folds `d` after checking the dipole conditions for `(a, b, c)`.
pub fn fold_dipole(
    g: &Graph,
    d: &TreeDecomposition,
    a: usize,
    b: usize,
    c: usize,
) -> Result<FoldReport> {
    let check = check_dipole_conditions(g, d, a, b, c)?;
    if !check.passed() {
        return Err(Error::Precondition(format!(
            "dipole conditions fail for ({a}, {b}, {c}); measured {:?}",
            check.measured
        )));
    }
    let out = fold(g, d, Mode::Dipole)?;
    Ok(report(g, out, (a, b, c), None, Some(dipole_overlap_bound(a, c))))
}
