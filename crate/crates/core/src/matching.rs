//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::{Graph, Matching};

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut marked = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            marked[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if marked[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, in_blossom: &mut [bool], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS from `root` for an augmenting path; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(&mut in_blossom, v, cur, to);
                    self.mark_path(&mut in_blossom, to, cur, v);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_queue[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Exact maximum matching; edges are reported as `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    // Greedy warm start; augmentation fixes any suboptimality.
    for u in 0..g.n() {
        if b.mate[u] == NONE {
            if let Some(v) = g.neighbors(u).find(|&v| b.mate[v] == NONE) {
                b.mate[u] = v;
                b.mate[v] = u;
            }
        }
    }
    for v in 0..g.n() {
        if b.mate[v] == NONE {
            if let Some(end) = b.find_path(v) {
                b.augment(end);
            }
        }
    }
    let edges = (0..g.n())
        .filter(|&u| b.mate[u] != NONE && u < b.mate[u])
        .map(|u| (u, b.mate[u]))
        .collect();
    Matching { edges }
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}
