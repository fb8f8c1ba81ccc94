//! The occupation-time searching game against a visible, arbitrarily fast
//! fugitive. A trace is the full game tree: every component the fugitive can
//! flee into gets its own branch.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{bandwidth_of_layout, chain_forest, validate_layout, TreeLayout};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameNode {
    /// Fugitive's component when this move is made, sorted.
    pub territory: Vec<usize>,
    /// Searchers removed just before this placement.
    pub removed: Vec<usize>,
    pub place: usize,
    /// Placements so far on this branch, this one included.
    pub step: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Searchers standing when this move is made, sorted.
    pub occupied: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub n: usize,
    pub nodes: Vec<GameNode>,
    pub roots: Vec<usize>,
    /// Longest `(start, end)` occupation of each vertex over all branches.
    pub occupation: Vec<Option<(usize, usize)>>,
}

/// Game node without the derived fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    pub parent: Option<usize>,
    pub territory: Vec<usize>,
    pub removed: Vec<usize>,
    pub place: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    Place(usize),
    Remove(usize),
    Capture,
}

impl SearchTrace {
    /// Builds the tree from moves listed parents first, deriving steps,
    /// standing searchers and occupation intervals.
    pub fn from_moves(n: usize, moves: Vec<Move>) -> Result<SearchTrace> {
        let mut nodes: Vec<GameNode> = Vec::with_capacity(moves.len());
        let mut roots = Vec::new();
        for (i, m) in moves.into_iter().enumerate() {
            for &v in m.territory.iter().chain(&m.removed).chain([&m.place]) {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
            let (step, occupied) = match m.parent {
                None => {
                    roots.push(i);
                    if !m.removed.is_empty() {
                        return Err(Error::Structure("removal before the first placement".into()));
                    }
                    (1, Vec::new())
                }
                Some(p) if p < i => {
                    nodes[p].children.push(i);
                    let mut occ = nodes[p].occupied.clone();
                    occ.push(nodes[p].place);
                    for r in &m.removed {
                        match occ.iter().position(|x| x == r) {
                            Some(j) => {
                                occ.remove(j);
                            }
                            None => {
                                return Err(Error::Structure(format!(
                                    "move {i} removes {r}, which holds no searcher"
                                )))
                            }
                        }
                    }
                    occ.sort_unstable();
                    (nodes[p].step + 1, occ)
                }
                Some(p) => {
                    return Err(Error::Structure(format!("move {i} listed before its parent {p}")))
                }
            };
            if occupied.contains(&m.place) {
                return Err(Error::Structure(format!(
                    "vertex {} placed twice on a branch",
                    m.place
                )));
            }
            let mut territory = m.territory;
            territory.sort_unstable();
            let mut removed = m.removed;
            removed.sort_unstable();
            nodes.push(GameNode {
                territory,
                removed,
                place: m.place,
                step,
                parent: m.parent,
                children: Vec::new(),
                occupied,
            });
        }
        let mut t = SearchTrace {
            n,
            nodes,
            roots,
            occupation: vec![None; n],
        };
        t.occupation = t.measure();
        Ok(t)
    }

    fn measure(&self) -> Vec<Option<(usize, usize)>> {
        let mut best: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut record = |v: usize, start: usize, end: usize| {
            if best[v].is_none_or(|(s, e)| e - s < end - start) {
                best[v] = Some((start, end));
            }
        };
        // start step of every standing searcher along the current branch
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> =
            self.roots.iter().map(|&r| (r, Vec::new())).collect();
        while let Some((a, mut standing)) = stack.pop() {
            let node = &self.nodes[a];
            standing.retain(|&(v, s)| {
                let gone = node.removed.contains(&v);
                if gone {
                    record(v, s, node.step - 1);
                }
                !gone
            });
            standing.push((node.place, node.step));
            if node.children.is_empty() {
                for &(v, s) in &standing {
                    record(v, s, node.step);
                }
            }
            for &c in node.children.iter().rev() {
                stack.push((c, standing.clone()));
            }
        }
        best
    }

    pub fn max_occupation(&self) -> usize {
        self.occupation
            .iter()
            .flatten()
            .map(|&(s, e)| e - s + 1)
            .max()
            .unwrap_or(0)
    }

    /// Events in depth-first order, each with its step index.
    pub fn events(&self) -> Vec<(usize, Event)> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = self.roots.iter().rev().copied().collect();
        while let Some(a) = stack.pop() {
            let node = &self.nodes[a];
            out.extend(node.removed.iter().map(|&v| (node.step, Event::Remove(v))));
            out.push((node.step, Event::Place(node.place)));
            if node.children.is_empty() {
                out.push((node.step, Event::Capture));
            }
            stack.extend(node.children.iter().rev());
        }
        out
    }

    /// Per move, parents first, a `branch` header, then `<step> remove v`, `<step> place v`
    /// and, at the end of a branch, `<step> capture`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "n {}", self.n).unwrap();
        for (a, node) in self.nodes.iter().enumerate() {
            let parent = node.parent.map_or("-".to_string(), |p| p.to_string());
            write!(s, "branch {a} parent {parent} territory").unwrap();
            for v in &node.territory {
                write!(s, " {v}").unwrap();
            }
            s.push('\n');
            for v in &node.removed {
                writeln!(s, "{} remove {v}", node.step).unwrap();
            }
            writeln!(s, "{} place {}", node.step, node.place).unwrap();
            if node.children.is_empty() {
                writeln!(s, "{} capture", node.step).unwrap();
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<SearchTrace> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let num = |line: usize, t: &str| t.parse::<usize>().map_err(|_| err(line, "expected a number"));
        let mut n = None;
        let mut ids: Vec<usize> = Vec::new();
        let mut moves: Vec<Move> = Vec::new();
        let mut pending: Option<Move> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            match toks.as_slice() {
                [] => {}
                [c, ..] if c.starts_with('#') => {}
                ["n", v] => n = Some(num(line, v)?),
                ["branch", id, "parent", p, "territory", rest @ ..] => {
                    if let Some(m) = pending.take() {
                        return Err(err(line, &format!("branch before placing {:?}", m.territory)));
                    }
                    ids.push(num(line, id)?);
                    let parent = match *p {
                        "-" => None,
                        p => {
                            let p = num(line, p)?;
                            Some(ids.iter().position(|&x| x == p).ok_or_else(|| err(line, "unknown parent"))?)
                        }
                    };
                    let territory = rest.iter().map(|t| num(line, t)).collect::<Result<_>>()?;
                    pending = Some(Move {
                        parent,
                        territory,
                        removed: Vec::new(),
                        place: 0,
                    });
                }
                [_, "remove", v] => {
                    let m = pending.as_mut().ok_or_else(|| err(line, "remove outside a branch"))?;
                    m.removed.push(num(line, v)?);
                }
                [_, "place", v] => {
                    let mut m = pending.take().ok_or_else(|| err(line, "place outside a branch"))?;
                    m.place = num(line, v)?;
                    moves.push(m);
                }
                [_, "capture"] => {}
                _ => return Err(err(line, "unrecognised trace line")),
            }
        }
        if pending.is_some() {
            return Err(err(text.lines().count(), "branch without a placement"));
        }
        let n = n.ok_or_else(|| err(1, "missing `n` line"))?;
        SearchTrace::from_moves(n, moves)
    }

    /// Checks that the trace is a legal, monotone, winning play on `g`:
    /// starts from every component, territories are exactly the components
    /// left after each placement, the boundary of the territory is always
    /// guarded, and removed searchers never border the territory again.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::Structure("trace and graph disagree on n".into()));
        }
        let bad = |msg: String| Err(Error::Structure(msg));
        let mut starts: Vec<Vec<usize>> = self.roots.iter().map(|&r| self.nodes[r].territory.clone()).collect();
        starts.sort();
        let mut comps = g.components();
        comps.sort();
        if starts != comps {
            return bad("the fugitive's starting components are not all covered".into());
        }
        let mut mark = vec![false; g.n()];
        for (a, node) in self.nodes.iter().enumerate() {
            if node.territory.is_empty() {
                return bad(format!("move {a} has an empty territory"));
            }
            for &v in &node.territory {
                mark[v] = true;
            }
            for &v in &node.occupied {
                if mark[v] {
                    return bad(format!("move {a}: searcher on {v} inside the territory"));
                }
            }
            for &v in &node.territory {
                for &w in g.neighbors(v) {
                    if !mark[w] && node.occupied.binary_search(&w).is_err() {
                        return bad(format!("move {a}: unguarded boundary vertex {w}"));
                    }
                }
            }
            for &r in &node.removed {
                if g.neighbors(r).iter().any(|&w| mark[w]) || mark[r] {
                    return bad(format!("move {a}: searcher on {r} removed while it borders the territory"));
                }
            }
            let rest: Vec<usize> = node.territory.iter().copied().filter(|&v| v != node.place).collect();
            for &v in &node.territory {
                mark[v] = false;
            }
            let mut expect = g.induced(&rest).components();
            for c in &mut expect {
                for v in c.iter_mut() {
                    *v = rest[*v];
                }
                c.sort_unstable();
            }
            expect.sort();
            let mut got: Vec<Vec<usize>> = node.children.iter().map(|&c| self.nodes[c].territory.clone()).collect();
            got.sort();
            if got != expect {
                return bad(format!("move {a}: branches do not match the fugitive's options"));
            }
        }
        Ok(())
    }
}

/// Plays the strategy of `t` against every fugitive choice: always place a
/// searcher at the root of the layout subtree holding the fugitive, and lift
/// a searcher once its vertex no longer borders the territory.
pub fn strategy_from_layout(g: &Graph, t: &TreeLayout) -> Result<SearchTrace> {
    validate_layout(g, t)?;
    let n = g.n();
    let mut moves: Vec<Move> = Vec::new();
    // (parent move, territory, layout vertex to play)
    let mut queue: std::collections::VecDeque<(Option<usize>, Vec<usize>, usize)> = g
        .components()
        .into_iter()
        .map(|c| (None, c, t.root().expect("non-empty layout")))
        .collect();
    let mut standing: Vec<Vec<usize>> = Vec::new();
    let mut mark = vec![false; n];
    while let Some((parent, territory, x)) = queue.pop_front() {
        let mut removed = Vec::new();
        let mut occ = Vec::new();
        if let Some(p) = parent {
            for &v in &territory {
                mark[v] = true;
            }
            for &y in standing[p].iter().chain([&moves[p].place]) {
                if g.neighbors(y).iter().any(|&w| mark[w]) {
                    occ.push(y);
                } else {
                    removed.push(y);
                }
            }
            for &v in &territory {
                mark[v] = false;
            }
        }
        let id = moves.len();
        let rest: Vec<usize> = territory.iter().copied().filter(|&v| v != x).collect();
        for comp in g.induced(&rest).components() {
            let comp: Vec<usize> = comp.into_iter().map(|i| rest[i]).collect();
            let mut c = comp[0];
            while t.parent(c) != Some(x) {
                c = t.parent(c).expect("territory stays below the current root");
            }
            queue.push_back((Some(id), comp, c));
        }
        moves.push(Move {
            parent,
            territory,
            removed,
            place: x,
        });
        standing.push(occ);
    }
    SearchTrace::from_moves(n, moves)
}

/// Rebuilds a layout from a legal winning trace whose occupation times stay
/// within `occupation_bound`: each move in the fugitive's territory becomes
/// the root of the subtrees built for the components it leaves behind.
pub fn layout_from_strategy(g: &Graph, trace: &SearchTrace, occupation_bound: usize) -> Result<TreeLayout> {
    trace.check(g)?;
    let occ = trace.max_occupation();
    if occ > occupation_bound {
        return Err(Error::Precondition(format!(
            "occupation time {occ} exceeds the bound {occupation_bound}"
        )));
    }
    let n = g.n();
    if n == 0 {
        return Ok(TreeLayout::empty());
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    // nearest ancestor move that was played inside its territory
    let mut anchor: Vec<Option<usize>> = vec![None; trace.nodes.len()];
    for (a, node) in trace.nodes.iter().enumerate() {
        let up = node.parent.and_then(|p| anchor[p]);
        if node.territory.binary_search(&node.place).is_ok() {
            let v = node.place;
            if seen[v] {
                return Err(Error::Structure(format!("vertex {v} captured on two branches")));
            }
            seen[v] = true;
            parent[v] = up;
            if up.is_none() {
                roots.push(v);
            }
            anchor[a] = Some(v);
        } else {
            anchor[a] = up;
        }
    }
    let t = chain_forest(parent, &roots)?;
    let k = occupation_bound.saturating_sub(1);
    let bw = bandwidth_of_layout(g, &t)?;
    if bw > k {
        return Err(Error::Structure(format!("rebuilt layout has bandwidth {bw} above {k}")));
    }
    Ok(t)
}
