//! Augmenting-path max-flow on small integer networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
pub struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNet {
    pub fn new(nodes: usize) -> FlowNet {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, a: usize, b: usize, c: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Pushes flow until none is left or `limit` is reached.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        if s == t {
            return 0;
        }
        let mut flow = 0;
        let nodes = self.head.len();
        while flow < limit {
            let mut pred = vec![usize::MAX; nodes];
            let mut queue = VecDeque::from([s]);
            pred[s] = usize::MAX - 1;
            while let Some(a) = queue.pop_front() {
                if a == t {
                    break;
                }
                for &e in &self.head[a] {
                    let b = self.to[e];
                    if self.cap[e] > 0 && pred[b] == usize::MAX {
                        pred[b] = e;
                        queue.push_back(b);
                    }
                }
            }
            if pred[t] == usize::MAX {
                break;
            }
            let mut bottleneck = limit - flow;
            let mut v = t;
            while v != s {
                let e = pred[v];
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = pred[v];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    /// Nodes reachable from `s` along arcs with residual capacity.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for &e in &self.head[a] {
                let b = self.to[e];
                if self.cap[e] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen
    }
}
