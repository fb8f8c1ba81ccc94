//! U-rooted path minors by memoized branch-set growth.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const PATH_MINOR_BUDGET: u64 = 5_000_000;

/// Branch sets `B_1, ..., B_k` in path order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathMinorModel {
    pub sets: Vec<Vec<usize>>,
}

impl PathMinorModel {
    /// Disjoint, connected, each meeting `u_set`, consecutive sets adjacent,
    /// and none touching `forbidden`.
    pub fn verify(&self, g: &Graph, u_set: &[usize], forbidden: &[usize]) -> bool {
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (i, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return false;
            }
            for &x in s {
                if x >= n || owner[x] != usize::MAX || forbidden.contains(&x) {
                    return false;
                }
                owner[x] = i;
            }
            if !s.iter().any(|x| u_set.contains(x)) {
                return false;
            }
        }
        for (i, s) in self.sets.iter().enumerate() {
            // connectivity inside the set
            let mut seen = vec![s[0]];
            let mut k = 0;
            while k < seen.len() {
                let x = seen[k];
                k += 1;
                for &w in g.neighbors(x) {
                    if owner[w] == i && !seen.contains(&w) {
                        seen.push(w);
                    }
                }
            }
            if seen.len() != s.len() {
                return false;
            }
            if i + 1 < self.sets.len()
                && !s
                    .iter()
                    .any(|&x| g.neighbors(x).iter().any(|&w| owner[w] == i + 1))
            {
                return false;
            }
        }
        true
    }
}

type Mask = u128;

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn to_vec(m: Mask) -> Vec<usize> {
    bits(m).collect()
}

struct Search {
    adj: Vec<Mask>,
    roots: Mask,
    target: usize,
    memo: HashMap<(Mask, Mask, bool), usize>,
    states: u64,
    budget: u64,
    done: Vec<Mask>,
    found: Option<Vec<Mask>>,
}

enum Stop {
    Found,
    Budget,
}

impl Search {
    fn nbr(&self, m: Mask) -> Mask {
        bits(m).fold(0, |acc, x| acc | self.adj[x])
    }

    /// Most sets completable from here, counting `cur` once it meets U.
    fn best(&mut self, used: Mask, cur: Mask, has: bool) -> std::result::Result<usize, Stop> {
        if has && self.done.len() + 1 >= self.target {
            let mut sets = self.done.clone();
            sets.push(cur);
            self.found = Some(sets);
            return Err(Stop::Found);
        }
        if let Some(&v) = self.memo.get(&(used, cur, has)) {
            // a hit that would reach the target is re-explored to rebuild the model
            if self.done.len() + v < self.target {
                return Ok(v);
            }
        }
        self.states += 1;
        if self.states > self.budget {
            return Err(Stop::Budget);
        }
        let frontier = self.nbr(cur) & !used;
        let mut best = usize::from(has);
        if has {
            // closing early: the next set starts next to the current one
            self.done.push(cur);
            for v in bits(frontier) {
                let r = self.best(used | 1 << v, 1 << v, self.roots >> v & 1 == 1);
                match r {
                    Ok(x) => best = best.max(1 + x),
                    Err(e) => {
                        self.done.pop();
                        return Err(e);
                    }
                }
            }
            self.done.pop();
        }
        for v in bits(frontier) {
            let x = self.best(used | 1 << v, cur | 1 << v, has || self.roots >> v & 1 == 1)?;
            best = best.max(x);
        }
        self.memo.insert((used, cur, has), best);
        Ok(best)
    }

    fn run(&mut self, n: usize) -> Result<usize> {
        let mut best = 0;
        for v in 0..n {
            match self.best(1 << v, 1 << v, self.roots >> v & 1 == 1) {
                Ok(x) => best = best.max(x),
                Err(Stop::Found) => return Ok(self.target),
                Err(Stop::Budget) => return Err(Error::Budget(self.budget)),
            }
        }
        Ok(best)
    }
}

fn setup(g: &Graph, u_set: &[usize], target: usize, budget: u64) -> Result<Search> {
    if g.n() > 128 {
        return Err(Error::SizeLimit {
            what: "graph",
            size: g.n(),
            limit: 128,
        });
    }
    let adj = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0 as Mask, |a, &w| a | 1 << w))
        .collect();
    let mut roots: Mask = 0;
    for &u in u_set {
        if u >= g.n() {
            return Err(Error::VertexOutOfRange(u));
        }
        roots |= 1 << u;
    }
    Ok(Search {
        adj,
        roots,
        target,
        memo: HashMap::new(),
        states: 0,
        budget,
        done: Vec::new(),
        found: None,
    })
}

/// A `u_set`-rooted `P_k` minor model, if one exists.
pub fn rooted_path_minor(g: &Graph, u_set: &[usize], k: usize) -> Result<Option<PathMinorModel>> {
    rooted_path_minor_with_budget(g, u_set, k, PATH_MINOR_BUDGET)
}

pub fn rooted_path_minor_with_budget(
    g: &Graph,
    u_set: &[usize],
    k: usize,
    budget: u64,
) -> Result<Option<PathMinorModel>> {
    if k == 0 {
        return Err(Error::InvalidParameter("path minor order must be >= 1".into()));
    }
    let mut s = setup(g, u_set, k, budget)?;
    if u_set.len() < k {
        return Ok(None);
    }
    s.run(g.n())?;
    Ok(s.found.map(|sets| {
        let model = PathMinorModel {
            sets: sets.into_iter().map(to_vec).collect(),
        };
        debug_assert!(model.verify(g, u_set, &[]));
        model
    }))
}

/// Largest order of a `u_set`-rooted path minor (0 when `u_set` is empty).
pub fn largest_rooted_path_minor(g: &Graph, u_set: &[usize]) -> Result<usize> {
    let mut s = setup(g, u_set, usize::MAX, PATH_MINOR_BUDGET)?;
    s.run(g.n())
}
