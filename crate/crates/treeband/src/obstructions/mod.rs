//! Fans, dipoles, rooted treedepth and small exact parameters.

mod params;
mod pathminor;
mod treedepth;

pub use params::{
    bandwidth_exact, exact_parameter, treebandwidth_bruteforce, Certificate, Parameter,
    BRUTEFORCE_LIMIT,
};
pub use pathminor::{
    largest_rooted_path_minor, rooted_path_minor, rooted_path_minor_with_budget, PathMinorModel,
    PATH_MINOR_BUDGET,
};
pub use treedepth::{
    rooted_treedepth, rooted_treedepth_with_limit, validate_forest, EliminationForest,
    TD_COMPONENT_LIMIT,
};

use crate::error::{Error, Result};
use crate::graph::{local_connectivity, Graph};

/// `G - v` with its vertices listed, plus `N(v)` renumbered into it.
pub fn punctured(g: &Graph, v: usize) -> (Graph, Vec<usize>, Vec<usize>) {
    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
    let h = g.induced(&keep);
    let u: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&w| if w < v { w } else { w - 1 })
        .collect();
    (h, keep, u)
}

/// Largest `k` such that `F_k` is a topological minor of `g`.
pub fn fan_number(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for v in 0..g.n() {
        if g.degree(v) <= best {
            // each branch set needs its own neighbour of v
            continue;
        }
        let (h, _, u) = punctured(g, v);
        best = best.max(largest_rooted_path_minor(&h, &u)?);
    }
    Ok(best)
}

/// The fan witness behind [`fan_number`]: centre and branch sets in `g`'s numbering.
pub fn fan_witness(g: &Graph) -> Result<Option<(usize, PathMinorModel)>> {
    let k = fan_number(g)?;
    if k == 0 {
        return Ok(None);
    }
    for v in 0..g.n() {
        if g.degree(v) < k {
            continue;
        }
        let (h, keep, u) = punctured(g, v);
        if let Some(model) = rooted_path_minor(&h, &u, k)? {
            let sets = model
                .sets
                .iter()
                .map(|s| s.iter().map(|&x| keep[x]).collect())
                .collect();
            return Ok(Some((v, PathMinorModel { sets })));
        }
    }
    Err(Error::Structure("fan witness vanished".into()))
}

/// Maximum number of internally disjoint paths between two distinct vertices.
pub fn dipole_number(g: &Graph) -> Result<usize> {
    Ok(dipole_witness(g)?.2)
}

/// `(u, v, paths)` attaining [`dipole_number`]; ties go to the smallest pair.
pub fn dipole_witness(g: &Graph) -> Result<(usize, usize, usize)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter("dipole number needs n >= 2".into()));
    }
    let mut best = (0, 1, local_connectivity(g, 0, 1));
    for u in 0..n {
        for v in u + 1..n {
            if g.degree(u).min(g.degree(v)) <= best.2 {
                continue;
            }
            let c = local_connectivity(g, u, v);
            if c > best.2 {
                best = (u, v, c);
            }
        }
    }
    Ok(best)
}

/// `max_v td(G, N[v])`.
pub fn neighbourhood_treedepth(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for v in 0..g.n() {
        best = best.max(rooted_treedepth(g, &g.closed_neighbors(v))?.0);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn gen(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn fans_and_cycles() {
        for k in 1..=7 {
            assert_eq!(fan_number(&gen(Family::Fan(k))).unwrap(), k);
        }
        for n in 3..=8 {
            assert_eq!(fan_number(&gen(Family::Cycle(n))).unwrap(), 2);
        }
        assert_eq!(fan_number(&Graph::empty(4)).unwrap(), 0);
        assert_eq!(fan_number(&gen(Family::Path(2))).unwrap(), 1);
        assert_eq!(fan_number(&gen(Family::Star(6))).unwrap(), 1);
        assert_eq!(fan_number(&gen(Family::Path(9))).unwrap(), 1);
    }

    #[test]
    fn fan_witness_is_in_original_numbering() {
        let g = gen(Family::Fan(5));
        let (v, model) = fan_witness(&g).unwrap().unwrap();
        assert_eq!(v, 0);
        assert_eq!(model.sets.len(), 5);
        assert!(model.verify(&g, g.neighbors(0), &[0]));
    }

    #[test]
    fn dipoles() {
        for k in 1..=8 {
            let g = gen(Family::DipoleSubdivided(k));
            assert_eq!(dipole_witness(&g).unwrap(), (0, 1, k));
        }
        assert_eq!(dipole_number(&gen(Family::Path(6))).unwrap(), 1);
        assert_eq!(dipole_number(&gen(Family::Complete(5))).unwrap(), 4);
        assert!(dipole_number(&Graph::empty(1)).is_err());
        assert_eq!(dipole_number(&Graph::empty(2)).unwrap(), 0);
    }

    #[test]
    fn neighbourhood_depths() {
        assert_eq!(neighbourhood_treedepth(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(neighbourhood_treedepth(&gen(Family::Path(6))).unwrap(), 2);
        assert_eq!(neighbourhood_treedepth(&gen(Family::Complete(5))).unwrap(), 5);
    }
}
