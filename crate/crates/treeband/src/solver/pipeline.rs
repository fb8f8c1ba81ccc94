//! Decomposition provider, certified rejections, folding and collapse.

use serde::{Deserialize, Serialize};

use crate::decomp::{
    decomposition_from_order, enforce_wellformed, exact_tree_decomposition, fold_dipole, fold_fan,
    measure_dipole_parameters, measure_fan_parameters, min_fill_decomposition, overlap_number,
    treewidth_at_most, FoldReport, TreeDecomposition, DEFAULT_EXACT_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::{local_connectivity, Graph};
use crate::layout::{bandwidth_of_layout, TreeLayout};
use crate::obstructions::{
    dipole_witness, punctured, rooted_path_minor_with_budget, rooted_treedepth, PathMinorModel,
    TD_COMPONENT_LIMIT,
};

const MINOR_BUDGET: u64 = 2_000_000;
const EXACT_SEARCH_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreewidthWitness {
    /// Treewidth exceeds this.
    pub k: usize,
    /// A clique on `k + 2` vertices, when one exists.
    pub clique: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Reject {
    Treewidth(TreewidthWitness),
    /// An `N(v)`-rooted path minor of `G - v` of order `2^(2k+1)`.
    FanModel { vertex: usize, model: PathMinorModel },
    /// `td(G, N[v])` above `2k + 1`.
    NeighbourhoodTreedepth { vertex: usize, treedepth: usize },
    /// More internally disjoint `u`-`v` paths than overlap width `k` allows.
    Dipole { u: usize, v: usize, paths: usize, threshold: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxLayout {
    pub layout: TreeLayout,
    pub bandwidth: usize,
    pub provider_width: usize,
    pub fold: FoldReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Approximation {
    Layout(Box<ApproxLayout>),
    Reject(Reject),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapDecomposition {
    pub provider_width: usize,
    pub fold: FoldReport,
    pub width: usize,
    pub overlap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapOutcome {
    Decomposition(Box<OverlapDecomposition>),
    Reject(Reject),
}

fn find_clique(g: &Graph, size: usize) -> Option<Vec<usize>> {
    fn grow(g: &Graph, cur: &mut Vec<usize>, cands: &[usize], size: usize) -> bool {
        if cur.len() == size {
            return true;
        }
        if cur.len() + cands.len() < size {
            return false;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            cur.push(v);
            if grow(g, cur, &next, size) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let all: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) + 1 >= size).collect();
    let mut cur = Vec::new();
    grow(g, &mut cur, &all, size).then_some(cur)
}

/// A decomposition of width at most `k`, or a certificate that none exists.
fn provide(g: &Graph, k: usize) -> Result<std::result::Result<TreeDecomposition, Reject>> {
    let reject = || {
        Ok(Err(Reject::Treewidth(TreewidthWitness {
            k,
            clique: find_clique(g, k + 2),
        })))
    };
    let d = if g.n() <= DEFAULT_EXACT_LIMIT {
        exact_tree_decomposition(g)?
    } else {
        min_fill_decomposition(g)
    };
    if d.width() <= k {
        return Ok(Ok(d));
    }
    if g.n() <= DEFAULT_EXACT_LIMIT {
        return reject();
    }
    if g.n() > EXACT_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "graph for the exact width check",
            size: g.n(),
            limit: EXACT_SEARCH_LIMIT,
        });
    }
    match treewidth_at_most(g, k)? {
        Some(o) => Ok(Ok(decomposition_from_order(g, &o.order))),
        None => reject(),
    }
}

/// Certified fan obstruction: some `v` with `td(G, N[v]) > 2k + 1`.
fn fan_obstruction(g: &Graph, k: usize) -> Result<Option<Reject>> {
    let threshold = 2 * k + 1;
    let order = 1usize.checked_shl(threshold as u32).unwrap_or(usize::MAX);
    let comp_size = {
        let mut size = vec![0; g.n()];
        for comp in g.components() {
            for &v in &comp {
                size[v] = comp.len();
            }
        }
        size
    };
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            continue;
        }
        if comp_size[v] <= TD_COMPONENT_LIMIT {
            let (td, _) = rooted_treedepth(g, &g.closed_neighbors(v))?;
            if td > threshold {
                return Ok(Some(Reject::NeighbourhoodTreedepth {
                    vertex: v,
                    treedepth: td,
                }));
            }
        } else if g.degree(v) >= order {
            let (h, keep, u) = punctured(g, v);
            match rooted_path_minor_with_budget(&h, &u, order, MINOR_BUDGET) {
                Ok(Some(m)) => {
                    let sets = m
                        .sets
                        .iter()
                        .map(|s| s.iter().map(|&x| keep[x]).collect())
                        .collect();
                    return Ok(Some(Reject::FanModel {
                        vertex: v,
                        model: PathMinorModel { sets },
                    }));
                }
                Ok(None) | Err(Error::Budget(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

/// Roots `d` at its root, orders each bag ascending and keeps every vertex
/// at the occurrence closest to the root.
pub fn collapse_to_layout(d: &TreeDecomposition, n: usize) -> Result<TreeLayout> {
    if n == 0 {
        return Ok(TreeLayout::empty());
    }
    let r = d.rooted();
    let mut parent = vec![None; n];
    let mut placed = vec![false; n];
    let mut anchor: Vec<Option<usize>> = vec![None; d.nodes()];
    for &t in &r.order {
        let mut last = r.parent[t].and_then(|p| anchor[p]);
        for &v in d.bag(t) {
            if !placed[v] {
                placed[v] = true;
                parent[v] = last;
                last = Some(v);
            }
        }
        anchor[t] = last;
    }
    if let Some(v) = placed.iter().position(|&p| !p) {
        return Err(Error::Structure(format!("vertex {v} is in no bag")));
    }
    TreeLayout::from_parents(parent)
}

/// Either a tree-layout built by folding, or a certified `tbw(G) > k`.
pub fn approximate_treebandwidth(g: &Graph, k: usize) -> Result<Approximation> {
    let d = match provide(g, k)? {
        Ok(d) => d,
        Err(r) => return Ok(Approximation::Reject(r)),
    };
    let provider_width = d.width();
    if let Some(r) = fan_obstruction(g, k)? {
        return Ok(Approximation::Reject(r));
    }
    let d = enforce_wellformed(g, &d);
    let (a, b, c) = measure_fan_parameters(g, &d)?;
    let fold = fold_fan(g, &d, a, b, c)?;
    let layout = collapse_to_layout(&fold.decomposition, g.n())?;
    let bandwidth = bandwidth_of_layout(g, &layout)?;
    Ok(Approximation::Layout(Box::new(ApproxLayout {
        layout,
        bandwidth,
        provider_width,
        fold,
    })))
}

/// Internally disjoint paths allowed between two vertices when `otw(G) <= k`.
fn dipole_threshold(k: usize) -> usize {
    (k * k.saturating_sub(1) + 1).max(k + 1)
}

/// Either a folded decomposition with small overlap, or a certified `otw(G) > k`.
pub fn overlap_treewidth_pipeline(g: &Graph, k: usize) -> Result<OverlapOutcome> {
    let d = match provide(g, k)? {
        Ok(d) => d,
        Err(r) => return Ok(OverlapOutcome::Reject(r)),
    };
    let provider_width = d.width();
    if g.n() >= 2 {
        let (u, v, paths) = dipole_witness(g)?;
        let threshold = dipole_threshold(k);
        if paths > threshold {
            return Ok(OverlapOutcome::Reject(Reject::Dipole {
                u,
                v,
                paths,
                threshold,
            }));
        }
    }
    let d = enforce_wellformed(g, &d);
    let (a, b, c) = measure_dipole_parameters(g, &d)?;
    let fold = fold_dipole(g, &d, a, b, c)?;
    let width = fold.decomposition.width();
    let overlap = overlap_number(&fold.decomposition);
    Ok(OverlapOutcome::Decomposition(Box::new(OverlapDecomposition {
        provider_width,
        fold,
        width,
        overlap,
    })))
}

/// Re-checks a rejection independently of the pipeline that produced it.
pub fn verify_reject(g: &Graph, k: usize, r: &Reject) -> Result<bool> {
    Ok(match r {
        Reject::Treewidth(w) => match &w.clique {
            Some(c) => {
                c.len() == k + 2
                    && c.iter()
                        .enumerate()
                        .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }
            None => treewidth_at_most(g, k)?.is_none(),
        },
        Reject::FanModel { vertex, model } => {
            model.sets.len() >= 1usize << (2 * k + 1)
                && model.verify(g, g.neighbors(*vertex), &[*vertex])
        }
        Reject::NeighbourhoodTreedepth { vertex, treedepth } => {
            let (td, _) = rooted_treedepth(g, &g.closed_neighbors(*vertex))?;
            td == *treedepth && td > 2 * k + 1
        }
        Reject::Dipole {
            u,
            v,
            paths,
            threshold,
        } => {
            *threshold >= dipole_threshold(k)
                && u != v
                && local_connectivity(g, *u, *v) == *paths
                && paths > threshold
        }
    })
}
