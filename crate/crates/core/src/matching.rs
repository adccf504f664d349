//! Maximum matching in general graphs via Edmonds' blossom algorithm.
//!
//! Classic array-based O(V^3) formulation: repeated alternating-tree searches
//! from unmatched roots, contracting odd cycles (blossoms) by redirecting
//! their vertices to a common base. Vertices are scanned in index order, so
//! the matching produced is deterministic.

use crate::graph::Graph;
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Matching number of `g` together with a witness set of disjoint edges,
/// each reported as `(u, v)` with `u < v`, sorted.
pub fn matching_number(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let n = g.order();
    let mut m = Matcher {
        g,
        n,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    // Greedy seed: match each vertex with its lowest unmatched neighbour.
    for u in 0..n {
        if m.mate[u] == NONE {
            for v in g.neighbors(u).iter() {
                if m.mate[v] == NONE {
                    m.mate[u] = v;
                    m.mate[v] = u;
                    break;
                }
            }
        }
    }
    for root in 0..n {
        if m.mate[root] != NONE {
            continue;
        }
        let finish = m.find_path(root);
        if finish != NONE {
            m.augment(finish);
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        if m.mate[u] != NONE && u < m.mate[u] {
            edges.push((u, m.mate[u]));
        }
    }
    (edges.len(), edges)
}

struct Matcher<'g> {
    g: &'g Graph,
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl Matcher<'_> {
    /// Grows an alternating tree from `root`; returns an unmatched vertex
    /// whose parent chain encodes an augmenting path, or NONE.
    fn find_path(&mut self, root: usize) -> usize {
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..self.n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Even-even edge: contract the blossom through the LCA.
                    let cur_base = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..self.n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    // `to` is matched: its mate becomes an even vertex.
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        NONE
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut marked = vec![false; self.n];
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

    fn mark_path(&mut self, mut v: usize, base: usize, mut child: usize) {
        while self.base[v] != base {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Flips matched/unmatched edges along the parent chain ending at `v`.
    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
