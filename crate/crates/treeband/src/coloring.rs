//! p-centered colourings read off tree-layouts, and exhaustive verification.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{bandwidth_of_layout, TreeLayout};

pub const DEFAULT_SUBSET_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub colour: Vec<usize>,
    pub palette_size: usize,
}

impl Colouring {
    pub fn new(colour: Vec<usize>) -> Colouring {
        let palette_size = colour.iter().map(|&c| c + 1).max().unwrap_or(0);
        Colouring {
            colour,
            palette_size,
        }
    }

    /// One `v colour` line per vertex.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.colour.iter().enumerate() {
            writeln!(s, "{v} {c}").unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Colouring> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: i + 1,
                    msg: "expected `vertex colour`".into(),
                })?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected `vertex colour`".into(),
                });
            }
            pairs.push((nums[0], nums[1]));
        }
        let n = pairs.len();
        let mut colour = vec![usize::MAX; n];
        for (v, c) in pairs {
            if v >= n || colour[v] != usize::MAX {
                return Err(Error::Structure(format!("vertex {v} coloured twice or out of range")));
            }
            colour[v] = c;
        }
        Ok(Colouring::new(colour))
    }
}

/// Colours each vertex by its depth modulo `p·k + 1`, `k` the layout's bandwidth.
pub fn pcentered_from_layout(g: &Graph, t: &TreeLayout, p: usize) -> Result<Colouring> {
    if p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let k = bandwidth_of_layout(g, t)?;
    let m = p * k + 1;
    Ok(Colouring {
        colour: (0..g.n()).map(|v| t.depth(v) % m).collect(),
        palette_size: m,
    })
}

struct Verify<'a> {
    adj: Vec<u64>,
    colour: &'a [usize],
    p: usize,
    seen: u64,
    budget: u64,
}

impl Verify<'_> {
    /// `Some(true)` if `s` is fine, `Some(false)` if it violates, `None` if
    /// it already sees more than `p` colours (so every superset is fine).
    fn judge(&self, s: u64) -> Option<bool> {
        let mut count: Vec<(usize, usize)> = Vec::new();
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = self.colour[v];
            match count.iter_mut().find(|e| e.0 == c) {
                Some(e) => e.1 += 1,
                None => count.push((c, 1)),
            }
        }
        if count.len() > self.p {
            return None;
        }
        Some(count.iter().any(|e| e.1 == 1))
    }

    /// Connected sets with minimum vertex `v`, each produced once.
    fn extend(&mut self, s: u64, ext: u64, nbr: u64, v: usize) -> Result<Option<u64>> {
        self.seen += 1;
        if self.seen > self.budget {
            return Err(Error::Budget(self.budget));
        }
        match self.judge(s) {
            None => return Ok(None),
            Some(false) => return Ok(Some(s)),
            Some(true) => {}
        }
        let mut ext = ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let above = !((1u64 << v) | ((1u64 << v) - 1));
            let exclusive = self.adj[w] & !s & !nbr & above;
            let found = self.extend(s | 1 << w, ext | exclusive, nbr | self.adj[w], v)?;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

pub fn verify_pcentered(g: &Graph, c: &Colouring, p: usize) -> Result<Option<Vec<usize>>> {
    verify_pcentered_with_budget(g, c, p, DEFAULT_SUBSET_BUDGET)
}

/// `None` when every connected vertex set sees more than `p` colours or has
/// a uniquely coloured vertex, otherwise a violating set. A connected
/// subgraph's vertex set induces a connected subgraph and colours depend only
/// on vertices, so induced sets suffice.
pub fn verify_pcentered_with_budget(
    g: &Graph,
    c: &Colouring,
    p: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if c.colour.len() != g.n() {
        return Err(Error::Structure("colouring does not cover the graph".into()));
    }
    if g.n() > 64 {
        return Err(Error::SizeLimit {
            what: "graph",
            size: g.n(),
            limit: 64,
        });
    }
    let mut s = Verify {
        adj: g.adj_masks(),
        colour: &c.colour,
        p,
        seen: 0,
        budget,
    };
    for v in 0..g.n() {
        let above = !((1u64 << v) | ((1u64 << v) - 1));
        let ext = s.adj[v] & above;
        let nbr = s.adj[v] | 1 << v;
        if let Some(w) = s.extend(1 << v, ext, nbr, v)? {
            return Ok(Some(crate::graph::bits(w).collect()));
        }
    }
    Ok(None)
}
