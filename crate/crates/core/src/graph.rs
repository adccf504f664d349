//! Simple undirected graphs on dense 0-based vertex indices.
//!
//! Adjacency is stored as one bitset per vertex, which keeps the exhaustive
//! solvers in this crate branch-light: neighbourhood intersections, frontier
//! expansion in BFS and candidate filtering in the search trees are all single
//! word operations.

use std::fmt;
use thiserror::Error;

/// Hard ceiling on the graph order. One `u128` word per adjacency row covers
/// every instance this crate targets, including Mycielskians of graphs at the
/// graph6 size limit (2 * 62 + 1 = 125).
pub const MAX_VERTICES: usize = 128;

/// Orders up to this bound admit brute-force canonical forms (`n!` relabelings).
pub const CANONICAL_CAP: usize = 10;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge endpoint {endpoint} out of range for order {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("canonical form supports at most {CANONICAL_CAP} vertices, got {0}")]
    CanonicalCapExceeded(usize),
    #[error("relabeling permutation is not a bijection on 0..{0}")]
    BadPermutation(usize),
}

// ---------------------------------------------------------------------------
// Vertex sets
// ---------------------------------------------------------------------------

/// A set of vertices of a graph of order at most [`MAX_VERTICES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(!0)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    /// Members collected in ascending order.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending member sequences. This is the
    /// tie-break order used for solver witnesses; note it differs from the
    /// numeric order of the underlying bit words.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

/// Set difference.
impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct VertexSetIter(u128);

impl Iterator for VertexSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// An undirected simple graph, immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list. Duplicate edges collapse
    /// silently; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: u, order: n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: v, order: n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as ordered pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min = *degrees.iter().min().expect("order >= 1");
        let max = *degrees.iter().max().expect("order >= 1");
        DegreeProfile { min, max, regular: min == max, degrees }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full - self.adj[v];
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn contains_triangle(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u && self.adj[u].intersects(self.adj[v]) {
                    return true;
                }
            }
        }
        false
    }

    /// Connected components as vertex sets, ordered by their smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= frontier;
            }
            out.push(comp);
            remaining = remaining - comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// All-pairs distances by one BFS per vertex.
    pub fn distances(&self) -> DistMatrix {
        let n = self.n;
        let mut d = vec![DistMatrix::UNREACHABLE; n * n];
        for s in 0..n {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut level = 0u32;
            while !frontier.is_empty() {
                for v in frontier.iter() {
                    d[s * n + v] = level;
                }
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                frontier = next - seen;
                seen |= frontier;
                level += 1;
            }
        }
        DistMatrix { n, d }
    }

    /// Length of a shortest cycle. Computed per edge: drop the edge, remeasure
    /// the endpoint distance, and close the cycle.
    pub fn girth(&self) -> Girth {
        let mut best: Option<u32> = None;
        for (u, v) in self.edges() {
            // BFS from u to v in G - uv.
            let mut seen = VertexSet::singleton(u);
            let mut frontier = seen;
            let mut level = 0u32;
            let mut found: Option<u32> = None;
            'bfs: while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier.iter() {
                    let mut row = self.adj[x];
                    if x == u {
                        row.remove(v);
                    }
                    if x == v {
                        row.remove(u);
                    }
                    next |= row;
                }
                frontier = next - seen;
                seen |= frontier;
                level += 1;
                if frontier.contains(v) {
                    found = Some(level);
                    break 'bfs;
                }
            }
            if let Some(dist) = found {
                let cycle = dist + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n || {
            let mut seen = VertexSet::EMPTY;
            for &p in perm {
                if p >= self.n || seen.contains(p) {
                    break;
                }
                seen.insert(p);
            }
            seen.len() != self.n
        } {
            return Err(GraphError::BadPermutation(self.n));
        }
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// Canonical form: the minimum upper-triangle adjacency word over all
    /// `n!` relabelings. Two graphs of equal order are isomorphic exactly when
    /// their canonical forms agree. Brute force, capped at [`CANONICAL_CAP`].
    pub fn canonical_form(&self) -> Result<u64, GraphError> {
        if self.n > CANONICAL_CAP {
            return Err(GraphError::CanonicalCapExceeded(self.n));
        }
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        // Heap's algorithm, iterative.
        let mut c = vec![0usize; n];
        best = best.min(self.triangle_word(&perm));
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.min(self.triangle_word(&perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        Ok(best)
    }

    /// Upper-triangle adjacency bits of the relabeled graph, row by row.
    fn triangle_word(&self, perm: &[usize]) -> u64 {
        let mut word = 0u64;
        let mut bit = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adj[perm[i]].contains(perm[j]) {
                    word |= 1u64 << bit;
                }
                bit += 1;
            }
        }
        word
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

// ---------------------------------------------------------------------------
// Distances and geodesics
// ---------------------------------------------------------------------------

/// All-pairs distance matrix with an explicit unreachable sentinel.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        let raw = self.d[u * self.n + v];
        if raw == Self::UNREACHABLE {
            None
        } else {
            Some(raw)
        }
    }

    #[inline]
    fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Largest finite distance. Unreachable pairs are ignored, so for a
    /// disconnected graph this is the largest component diameter.
    pub fn max_finite(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != Self::UNREACHABLE).max().unwrap_or(0)
    }

    /// Whether `w` lies on some `u,v`-geodesic, i.e. d(u,w) + d(w,v) = d(u,v).
    /// False whenever any of the pairs is unreachable. `w = u` and `w = v`
    /// count as lying on the geodesic (endpoints).
    pub fn lies_on_geodesic(&self, u: usize, w: usize, v: usize) -> bool {
        let duw = self.raw(u, w);
        let dwv = self.raw(w, v);
        let duv = self.raw(u, v);
        if duw == Self::UNREACHABLE || dwv == Self::UNREACHABLE || duv == Self::UNREACHABLE {
            return false;
        }
        duw + dwv == duv
    }

    /// Whether `w` is strictly interior to some `u,v`-geodesic.
    pub fn strictly_between(&self, u: usize, w: usize, v: usize) -> bool {
        w != u && w != v && self.lies_on_geodesic(u, w, v)
    }
}

/// Every geodesic from `u` to `v`, each as a vertex list starting at `u`.
/// Empty when `v` is unreachable from `u`. The geodesics are produced in
/// lexicographic vertex-sequence order.
pub fn geodesics_between(g: &Graph, d: &DistMatrix, u: usize, v: usize) -> Vec<Vec<usize>> {
    if d.dist(u, v).is_none() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    extend_geodesic(g, d, v, &mut path, &mut out);
    out
}

fn extend_geodesic(
    g: &Graph,
    d: &DistMatrix,
    target: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path starts nonempty");
    if last == target {
        out.push(path.clone());
        return;
    }
    let remaining = d.raw(last, target);
    for w in g.neighbors(last).iter() {
        // Next hop on a shortest path: one step closer to the target.
        if d.raw(w, target) + 1 == remaining {
            path.push(w);
            extend_geodesic(g, d, target, path, out);
            path.pop();
        }
    }
}

/// All geodesics of length between 2 and `max_len` over unordered vertex
/// pairs `u < v` of `g`. Used by checks that inspect interior vertices;
/// length-0 and length-1 geodesics have no interior and are omitted.
pub fn all_geodesics_up_to(g: &Graph, d: &DistMatrix, max_len: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in (u + 1)..g.order() {
            match d.dist(u, v) {
                Some(len) if (2..=max_len).contains(&len) => {
                    out.extend(geodesics_between(g, d, u, v));
                }
                _ => {}
            }
        }
    }
    out
}

// ===========================================================================
// tests
// ===========================================================================
