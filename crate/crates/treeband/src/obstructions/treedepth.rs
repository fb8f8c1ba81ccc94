//! Rooted treedepth `td(G, U)` with elimination-forest witnesses.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, mask_components, Graph};

pub const TD_COMPONENT_LIMIT: usize = 18;

/// Parent map over the forest's vertices; `members[v]` marks membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationForest {
    pub parent: Vec<Option<usize>>,
    pub members: Vec<bool>,
    pub covered: Vec<usize>,
}

impl EliminationForest {
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&v| self.members[v]).collect()
    }

    /// Ancestors of `v` including `v`, bottom-up.
    fn chain(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut x = v;
        while let Some(p) = self.parent[x] {
            out.push(p);
            x = p;
            if out.len() > self.parent.len() {
                break;
            }
        }
        out
    }

    /// Number of vertices on a longest root-leaf path.
    pub fn height(&self) -> usize {
        self.vertices()
            .into_iter()
            .map(|v| self.chain(v).len())
            .max()
            .unwrap_or(0)
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.chain(a).contains(&b) || self.chain(b).contains(&a)
    }
}

/// Checks the three forest conditions for `u_set`.
pub fn validate_forest(g: &Graph, u_set: &[usize], f: &EliminationForest) -> Result<()> {
    let n = g.n();
    if f.parent.len() != n || f.members.len() != n {
        return Err(Error::Structure("forest size differs from graph".into()));
    }
    for v in 0..n {
        match f.parent[v] {
            Some(p) if !f.members[v] || p >= n || !f.members[p] => {
                return Err(Error::Structure(format!("bad parent pointer at {v}")));
            }
            _ => {}
        }
        if f.members[v] && f.chain(v).len() > n {
            return Err(Error::Structure("forest has a cycle".into()));
        }
    }
    if let Some(&u) = u_set.iter().find(|&&u| !f.members[u]) {
        return Err(Error::Structure(format!("vertex {u} of U is not covered")));
    }
    for (a, b) in g.edges() {
        if f.members[a] && f.members[b] && !f.comparable(a, b) {
            return Err(Error::Structure(format!("edge {a} {b} crosses branches")));
        }
    }
    for comp in g.components_without(&f.members) {
        let mut nb: Vec<usize> = comp
            .iter()
            .flat_map(|&x| g.neighbors(x).iter().copied())
            .filter(|&w| f.members[w])
            .collect();
        nb.sort_unstable();
        nb.dedup();
        for (i, &a) in nb.iter().enumerate() {
            if nb[i + 1..].iter().any(|&b| !f.comparable(a, b)) {
                return Err(Error::Structure(format!(
                    "component at {} sees two branches",
                    comp[0]
                )));
            }
        }
    }
    Ok(())
}

struct Td<'a> {
    adj: &'a [u64],
    roots: u64,
    memo: HashMap<u64, (usize, usize)>,
}

impl Td<'_> {
    /// `td` of a connected vertex set.
    fn solve(&mut self, c: u64) -> usize {
        let hit = c & self.roots;
        if hit == 0 {
            return 0;
        }
        if hit.count_ones() == 1 {
            return 1;
        }
        if let Some(&(v, _)) = self.memo.get(&c) {
            return v;
        }
        let mut cands: Vec<usize> = bits(c).collect();
        cands.sort_by_key(|&v| std::cmp::Reverse((self.adj[v] & c).count_ones()));
        let mut best = hit.count_ones() as usize;
        let mut arg = hit.trailing_zeros() as usize;
        for v in cands {
            let mut worst = 0;
            for comp in mask_components(self.adj, c & !(1 << v)) {
                worst = worst.max(self.solve(comp));
                if worst + 1 >= best {
                    break;
                }
            }
            if worst + 1 < best {
                best = worst + 1;
                arg = v;
            }
        }
        self.memo.insert(c, (best, arg));
        best
    }

    fn pick(&mut self, c: u64) -> Option<usize> {
        let hit = c & self.roots;
        match hit.count_ones() {
            0 => None,
            1 => Some(hit.trailing_zeros() as usize),
            _ => {
                self.solve(c);
                Some(self.memo[&c].1)
            }
        }
    }

    fn build(&mut self, c: u64, above: Option<usize>, parent: &mut [Option<usize>], members: &mut [bool]) {
        if let Some(v) = self.pick(c) {
            parent[v] = above;
            members[v] = true;
            for comp in mask_components(self.adj, c & !(1 << v)) {
                self.build(comp, Some(v), parent, members);
            }
        }
    }
}

pub fn rooted_treedepth(g: &Graph, u_set: &[usize]) -> Result<(usize, EliminationForest)> {
    rooted_treedepth_with_limit(g, u_set, TD_COMPONENT_LIMIT)
}

/// Exact `td(G, U)`; every component meeting `U` must have at most `limit` vertices.
pub fn rooted_treedepth_with_limit(
    g: &Graph,
    u_set: &[usize],
    limit: usize,
) -> Result<(usize, EliminationForest)> {
    let n = g.n();
    let mut in_u = vec![false; n];
    for &u in u_set {
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        in_u[u] = true;
    }
    let mut parent = vec![None; n];
    let mut members = vec![false; n];
    let mut depth = 0;
    for comp in g.components() {
        if !comp.iter().any(|&v| in_u[v]) {
            continue;
        }
        if comp.len() > limit.min(64) {
            return Err(Error::SizeLimit {
                what: "treedepth component",
                size: comp.len(),
                limit: limit.min(64),
            });
        }
        let h = g.induced(&comp);
        let adj = h.adj_masks();
        let roots = (0..comp.len())
            .filter(|&i| in_u[comp[i]])
            .fold(0u64, |a, i| a | 1 << i);
        let all = if comp.len() == 64 { u64::MAX } else { (1u64 << comp.len()) - 1 };
        let mut td = Td {
            adj: &adj,
            roots,
            memo: HashMap::new(),
        };
        depth = depth.max(td.solve(all));
        let mut p = vec![None; comp.len()];
        let mut m = vec![false; comp.len()];
        td.build(all, None, &mut p, &mut m);
        for i in 0..comp.len() {
            members[comp[i]] = m[i];
            parent[comp[i]] = p[i].map(|j| comp[j]);
        }
    }
    let mut covered: Vec<usize> = u_set.to_vec();
    covered.sort_unstable();
    covered.dedup();
    let forest = EliminationForest {
        parent,
        members,
        covered,
    };
    debug_assert_eq!(forest.height(), depth);
    Ok((depth, forest))
}
