//! Exact treebandwidth by configuration search, and the approximation pipelines.

mod pipeline;

pub use pipeline::{
    approximate_treebandwidth, collapse_to_layout, overlap_treewidth_pipeline, verify_reject,
    ApproxLayout, Approximation, OverlapDecomposition, OverlapOutcome, Reject, TreewidthWitness,
};

use std::collections::HashMap;

use crate::decomp::exact_treewidth;
use crate::error::{Error, Result};
use crate::graph::{bits, mask_components, Graph};
use crate::layout::{bandwidth_of_layout, chain_forest, TreeLayout};

pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(TreeLayout),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

struct Search {
    adj: Vec<u64>,
    k: usize,
    /// accepting choice per configuration, `None` when it rejects
    memo: HashMap<(u64, Vec<u8>), Option<u8>>,
    states: u64,
    budget: u64,
}

impl Search {
    /// Window after placing `u`, or `None` if a dropped vertex still sees `rest`.
    ///
    /// The dropped vertex `w` ends up more than `k` levels above everything
    /// that will be placed below `u`, i.e. all of `rest`. Every path from `w`
    /// into `rest` avoiding the window must enter `rest` through a vertex on
    /// the root path, and vertices above the window were already checked to
    /// have no neighbour in it, so separation is just `N(w) ∩ rest = ∅`.
    fn step(&self, window: &[u8], u: usize, rest: u64) -> Option<Vec<u8>> {
        let mut w = window.to_vec();
        w.push(u as u8);
        while w.len() > self.k {
            let x = w.remove(0) as usize;
            if self.adj[x] & rest != 0 {
                return None;
            }
        }
        Some(w)
    }

    fn solve(&mut self, c: u64, window: &[u8]) -> Result<bool> {
        let key = (c, window.to_vec());
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.is_some());
        }
        self.states += 1;
        if self.states > self.budget {
            return Err(Error::Budget(self.budget));
        }
        let mut choice = None;
        'next: for u in bits(c) {
            let rest = c & !(1u64 << u);
            let Some(w) = self.step(window, u, rest) else {
                continue;
            };
            for comp in mask_components(&self.adj, rest) {
                if !self.solve(comp, &w)? {
                    continue 'next;
                }
            }
            choice = Some(u as u8);
            break;
        }
        self.memo.insert(key, choice);
        Ok(choice.is_some())
    }

    fn replay(&self, c: u64, window: &[u8], parent: &mut [Option<usize>]) {
        let u = self.memo[&(c, window.to_vec())].expect("accepting configuration") as usize;
        parent[u] = window.last().map(|&x| x as usize);
        let rest = c & !(1u64 << u);
        let w = self.step(window, u, rest).expect("accepted step");
        for comp in mask_components(&self.adj, rest) {
            self.replay(comp, &w, parent);
        }
    }
}

pub fn decide_treebandwidth(g: &Graph, k: usize) -> Result<Decision> {
    decide_treebandwidth_with_budget(g, k, DEFAULT_MAX_STATES)
}

/// Is there a tree-layout of bandwidth at most `k`? Components are decided
/// separately and their layouts chained.
pub fn decide_treebandwidth_with_budget(g: &Graph, k: usize, max_states: u64) -> Result<Decision> {
    let n = g.n();
    if n > 64 {
        return Err(Error::SizeLimit {
            what: "graph",
            size: n,
            limit: 64,
        });
    }
    if n == 0 {
        return Ok(Decision::Yes(TreeLayout::empty()));
    }
    let mut s = Search {
        adj: g.adj_masks(),
        k,
        memo: HashMap::new(),
        states: 0,
        budget: max_states,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let comps = mask_components(&s.adj, all);
    for &c in &comps {
        if !s.solve(c, &[])? {
            return Ok(Decision::No);
        }
    }
    let mut parent = vec![None; n];
    let mut roots = Vec::new();
    for &c in &comps {
        let root = s.memo[&(c, Vec::new())].unwrap() as usize;
        roots.push(root);
        s.replay(c, &[], &mut parent);
    }
    let t = chain_forest(parent, &roots)?;
    debug_assert!(bandwidth_of_layout(g, &t).unwrap() <= k);
    Ok(Decision::Yes(t))
}

/// Smallest `k` with a yes answer, starting from the treewidth lower bound.
pub fn exact_treebandwidth(g: &Graph) -> Result<(usize, TreeLayout)> {
    exact_treebandwidth_with_budget(g, DEFAULT_MAX_STATES)
}

pub fn exact_treebandwidth_with_budget(g: &Graph, max_states: u64) -> Result<(usize, TreeLayout)> {
    let mut k = usize::from(g.m() > 0);
    if g.n() <= 20 {
        k = k.max(exact_treewidth(g)?);
    }
    loop {
        if let Decision::Yes(t) = decide_treebandwidth_with_budget(g, k, max_states)? {
            return Ok((k, t));
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn yes(g: &Graph, k: usize) -> bool {
        match decide_treebandwidth(g, k).unwrap() {
            Decision::Yes(t) => {
                assert!(bandwidth_of_layout(g, &t).unwrap() <= k);
                true
            }
            Decision::No => false,
        }
    }

    #[test]
    fn small_examples() {
        let p = generate(&Family::Path(9)).unwrap();
        assert!(yes(&p, 1));
        assert!(!yes(&p, 0));
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert!(!yes(&k4, 2));
        assert!(yes(&k4, 3));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert!(!yes(&c5, 1));
        assert!(yes(&c5, 2));
        assert!(yes(&Graph::empty(4), 0));
    }

    #[test]
    fn exact_values() {
        assert_eq!(exact_treebandwidth(&generate(&Family::Star(5)).unwrap()).unwrap().0, 1);
        assert_eq!(exact_treebandwidth(&generate(&Family::Fan(4)).unwrap()).unwrap().0, 2);
        assert_eq!(exact_treebandwidth(&Graph::empty(3)).unwrap().0, 0);
        let two = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let (k, t) = exact_treebandwidth(&two).unwrap();
        assert_eq!(k, 1);
        assert_eq!(bandwidth_of_layout(&two, &t).unwrap(), 1);
    }

    #[test]
    fn budget_error() {
        let g = generate(&Family::Grid(3, 3)).unwrap();
        assert!(matches!(
            decide_treebandwidth_with_budget(&g, 2, 5),
            Err(Error::Budget(5))
        ));
    }
}
