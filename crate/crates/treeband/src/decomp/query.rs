//! Constant-time depth, ancestor, LCA and branching queries on a rooted tree.

use super::Rooted;

/// Euler tour with a sparse table over first occurrences.
#[derive(Debug, Clone)]
pub struct TreeQueryIndex {
    depth: Vec<usize>,
    enter: Vec<usize>,
    exit: Vec<usize>,
    first: Vec<usize>,
    table: Vec<Vec<usize>>,
}

impl TreeQueryIndex {
    pub fn new(r: &Rooted) -> TreeQueryIndex {
        let n = r.parent.len();
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut first = vec![0; n];
        let mut euler = Vec::with_capacity(2 * n);
        let mut clock = 0;
        if n > 0 {
            // iterative DFS: (node, next child index)
            let mut stack = vec![(r.root, 0usize)];
            enter[r.root] = clock;
            clock += 1;
            first[r.root] = 0;
            euler.push(r.root);
            while let Some(&mut (a, ref mut i)) = stack.last_mut() {
                if *i < r.children[a].len() {
                    let b = r.children[a][*i];
                    *i += 1;
                    enter[b] = clock;
                    clock += 1;
                    first[b] = euler.len();
                    euler.push(b);
                    stack.push((b, 0));
                } else {
                    exit[a] = clock;
                    clock += 1;
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        euler.push(p);
                    }
                }
            }
        }
        let mut table = vec![euler.clone()];
        let mut span = 1;
        while 2 * span <= euler.len() {
            let prev = table.last().unwrap();
            let row: Vec<usize> = (0..=euler.len() - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if r.depth[a] <= r.depth[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            table.push(row);
            span *= 2;
        }
        TreeQueryIndex {
            depth: r.depth.clone(),
            enter,
            exit,
            first,
            table,
        }
    }

    pub fn depth(&self, a: usize) -> usize {
        self.depth[a]
    }

    /// True when `a` is an ancestor of `b` (every node is its own ancestor).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.enter[a] <= self.enter[b] && self.exit[b] <= self.exit[a]
    }

    pub fn lca(&self, a: usize, b: usize) -> usize {
        let (mut i, mut j) = (self.first[a], self.first[b]);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let len = j - i + 1;
        let lvl = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        let x = self.table[lvl][i];
        let y = self.table[lvl][j + 1 - (1 << lvl)];
        if self.depth[x] <= self.depth[y] {
            x
        } else {
            y
        }
    }

    /// The deepest of the three pairwise LCAs.
    pub fn branching(&self, a: usize, b: usize, c: usize) -> usize {
        [self.lca(a, b), self.lca(a, c), self.lca(b, c)]
            .into_iter()
            .max_by_key(|&x| self.depth[x])
            .unwrap()
    }

    pub fn len(&self) -> usize {
        self.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depth.is_empty()
    }

}
