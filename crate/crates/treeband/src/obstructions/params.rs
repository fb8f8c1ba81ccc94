//! Exact classical parameters for small graphs.

use super::treedepth::{rooted_treedepth, EliminationForest};
use crate::decomp::{exact_tree_decomposition_with_limit, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{LinearLayout, TreeLayout};

/// Size limit for bandwidth and brute-force treebandwidth.
pub const BRUTEFORCE_LIMIT: usize = 8;
const SEARCH_LIMIT: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    Treewidth,
    Treedepth,
    Bandwidth,
    TreebandwidthBruteforce,
}

impl std::str::FromStr for Parameter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Parameter> {
        match s {
            "treewidth" | "tw" => Ok(Parameter::Treewidth),
            "treedepth" | "td" => Ok(Parameter::Treedepth),
            "bandwidth" | "bw" => Ok(Parameter::Bandwidth),
            "treebandwidth-bruteforce" | "tbw" => Ok(Parameter::TreebandwidthBruteforce),
            _ => Err(Error::InvalidParameter(format!("unknown parameter {s}"))),
        }
    }
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parameter::Treewidth => "treewidth",
            Parameter::Treedepth => "treedepth",
            Parameter::Bandwidth => "bandwidth",
            Parameter::TreebandwidthBruteforce => "treebandwidth-bruteforce",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Decomposition(TreeDecomposition),
    Forest(EliminationForest),
    Linear(LinearLayout),
    Layout(TreeLayout),
}

fn limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeLimit {
            what: "graph",
            size: g.n(),
            limit,
        });
    }
    Ok(())
}

pub fn exact_parameter(g: &Graph, which: Parameter) -> Result<(usize, Certificate)> {
    match which {
        Parameter::Treewidth => {
            limit(g, SEARCH_LIMIT)?;
            let d = exact_tree_decomposition_with_limit(g, SEARCH_LIMIT)?;
            Ok((d.width(), Certificate::Decomposition(d)))
        }
        Parameter::Treedepth => {
            limit(g, SEARCH_LIMIT)?;
            let all: Vec<usize> = (0..g.n()).collect();
            let (d, f) = rooted_treedepth(g, &all)?;
            Ok((d, Certificate::Forest(f)))
        }
        Parameter::Bandwidth => {
            let (b, s) = bandwidth_exact(g)?;
            Ok((b, Certificate::Linear(s)))
        }
        Parameter::TreebandwidthBruteforce => {
            let (b, t) = treebandwidth_bruteforce(g)?;
            Ok((b, Certificate::Layout(t)))
        }
    }
}

struct Band<'a> {
    g: &'a Graph,
    b: usize,
    pos: Vec<usize>,
    order: Vec<usize>,
}

impl Band<'_> {
    fn dfs(&mut self) -> bool {
        let n = self.g.n();
        let p = self.order.len();
        if p == n {
            return true;
        }
        // a placed vertex that is about to fall out of reach must be finished
        if p > self.b {
            let w = self.order[p - self.b - 1];
            if self.g.neighbors(w).iter().any(|&x| self.pos[x] == usize::MAX) {
                return false;
            }
        }
        for v in 0..n {
            if self.pos[v] != usize::MAX {
                continue;
            }
            let fits = self
                .g
                .neighbors(v)
                .iter()
                .all(|&w| self.pos[w] == usize::MAX || p - self.pos[w] <= self.b);
            if !fits {
                continue;
            }
            self.pos[v] = p;
            self.order.push(v);
            if self.dfs() {
                return true;
            }
            self.order.pop();
            self.pos[v] = usize::MAX;
        }
        false
    }
}

/// Minimum bandwidth with an optimal ordering (`n <= 8`).
pub fn bandwidth_exact(g: &Graph) -> Result<(usize, LinearLayout)> {
    limit(g, BRUTEFORCE_LIMIT)?;
    let n = g.n();
    let lower = g.max_degree().div_ceil(2);
    for b in lower..n.max(1) {
        let mut s = Band {
            g,
            b,
            pos: vec![usize::MAX; n],
            order: Vec::new(),
        };
        if s.dfs() {
            return Ok((b, LinearLayout::from_order(&s.order)?));
        }
    }
    let order: Vec<usize> = (0..n).collect();
    Ok((n.saturating_sub(1), LinearLayout::from_order(&order)?))
}

/// Decodes a Prüfer sequence into adjacency lists on `seq.len() + 2` vertices.
fn prufer_tree(seq: &[usize], adj: &mut [Vec<usize>]) {
    let n = seq.len() + 2;
    for l in adj.iter_mut() {
        l.clear();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        adj[leaf].push(x);
        adj[x].push(leaf);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    adj[last[0]].push(last[1]);
    adj[last[1]].push(last[0]);
}

/// Minimum treebandwidth over every rooted labelled tree on `V(G)` (`n <= 8`).
pub fn treebandwidth_bruteforce(g: &Graph) -> Result<(usize, TreeLayout)> {
    limit(g, BRUTEFORCE_LIMIT)?;
    let n = g.n();
    if n <= 1 {
        let parents = vec![None; n];
        return Ok((0, TreeLayout::from_parents(parents)?));
    }
    let edges = g.edges();
    let mut best = usize::MAX;
    let mut best_parent: Vec<Option<usize>> = Vec::new();
    let mut seq = vec![0usize; n - 2];
    let mut adj = vec![Vec::new(); n];
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut anc = vec![0u32; n];
    let mut queue = Vec::with_capacity(n);
    loop {
        prufer_tree(&seq, &mut adj);
        for r in 0..n {
            queue.clear();
            queue.push(r);
            parent[r] = None;
            depth[r] = 0;
            anc[r] = 1 << r;
            let mut i = 0;
            while i < queue.len() {
                let x = queue[i];
                i += 1;
                for &y in &adj[x] {
                    if Some(y) != parent[x] {
                        parent[y] = Some(x);
                        depth[y] = depth[x] + 1;
                        anc[y] = anc[x] | 1 << y;
                        queue.push(y);
                    }
                }
            }
            let mut width = 0;
            for &(u, v) in &edges {
                if anc[u] >> v & 1 == 0 && anc[v] >> u & 1 == 0 {
                    width = usize::MAX;
                    break;
                }
                width = width.max(depth[u].abs_diff(depth[v]));
                if width >= best {
                    break;
                }
            }
            if width < best {
                best = width;
                best_parent = parent.clone();
            }
        }
        // next sequence in lexicographic order
        let mut i = seq.len();
        loop {
            if i == 0 {
                return Ok((best, TreeLayout::from_parents(best_parent)?));
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::layout::{bandwidth_of_layout, linear_bandwidth};

    fn all(g: &Graph) -> [usize; 4] {
        let p = [
            Parameter::Treewidth,
            Parameter::Treedepth,
            Parameter::Bandwidth,
            Parameter::TreebandwidthBruteforce,
        ];
        p.map(|w| exact_parameter(g, w).unwrap().0)
    }

    #[test]
    fn clique_values() {
        for n in 1..=6 {
            let g = generate(&Family::Complete(n)).unwrap();
            assert_eq!(all(&g), [n - 1, n, n - 1, n - 1]);
        }
    }

    #[test]
    fn cycle_and_path() {
        assert_eq!(all(&generate(&Family::Cycle(5)).unwrap())[3], 2);
        let p6 = generate(&Family::Path(6)).unwrap();
        let v = all(&p6);
        assert_eq!((v[1], v[2], v[3]), (3, 1, 1));
    }

    #[test]
    fn certificates_match_values() {
        let g = generate(&Family::Grid(2, 4)).unwrap();
        let (b, s) = bandwidth_exact(&g).unwrap();
        assert_eq!(linear_bandwidth(&g, &s), b);
        assert_eq!(b, 2);
        let (t, lay) = treebandwidth_bruteforce(&g).unwrap();
        assert_eq!(bandwidth_of_layout(&g, &lay).unwrap(), t);
    }

    #[test]
    fn prufer_counts() {
        // every labelled tree on 4 vertices appears once
        let mut seen = std::collections::HashSet::new();
        let mut adj = vec![Vec::new(); 4];
        for a in 0..4 {
            for b in 0..4 {
                prufer_tree(&[a, b], &mut adj);
                let mut es: Vec<(usize, usize)> = (0..4)
                    .flat_map(|x| adj[x].iter().filter(move |&&y| x < y).map(move |&y| (x, y)))
                    .collect();
                es.sort_unstable();
                assert_eq!(es.len(), 3);
                seen.insert(es);
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn limits() {
        let g = generate(&Family::Path(9)).unwrap();
        assert!(bandwidth_exact(&g).is_err());
        assert!(treebandwidth_bruteforce(&g).is_err());
        assert_eq!(exact_parameter(&g, Parameter::Treewidth).unwrap().0, 1);
        assert!(exact_parameter(&Graph::empty(19), Parameter::Treedepth).is_err());
    }
}
