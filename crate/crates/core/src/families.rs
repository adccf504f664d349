//! Canonical instance generators: named graph families with fixed labelings,
//! seeded random trees and graphs, and tree shape statistics.
//!
//! Labelings are part of the contract so that witnesses and goldens stay
//! byte-stable: paths and cycles run 0,1,..,n-1 in order, stars put the centre
//! at 0, multipartite parts occupy consecutive index ranges sorted by
//! decreasing size, and the matched-regular family lays out its three blocks
//! contiguously.

use crate::graph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum FamilyError {
    #[error("{family} requires n >= {min}, got {got}")]
    OrderTooSmall { family: &'static str, min: usize, got: usize },
    #[error("complete multipartite graphs need at least 2 parts")]
    TooFewParts,
    #[error("multipartite part sizes must be positive")]
    ZeroPart,
    #[error("matched regular family requires degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("join family requires a >= 1 and d >= 2, got a={a}, d={d}")]
    BadJoinParams { a: usize, d: usize },
    #[error("spaced tree needs leaf counts for {expected} spine vertices, got {got}")]
    LeafListMismatch { expected: usize, got: usize },
    #[error("spaced tree requires w >= 2, gap >= 1 and >= 1 leaf per spine vertex")]
    BadSpacedTreeParams,
    #[error("edge probability must lie in [0, 1], got {0}")]
    BadProbability(f64),
    #[error("input graph is not a tree")]
    NotATree,
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { family: "path", min: 1, got: n });
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall { family: "cycle", min: 3, got: n });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { family: "complete", min: 1, got: n });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Star with centre 0 and leaves 1..n-1.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::OrderTooSmall { family: "star", min: 2, got: n });
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Complete graph minus the single edge (0, 1).
pub fn complete_minus_edge(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::OrderTooSmall { family: "complete_minus_edge", min: 2, got: n });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Complete multipartite graph. Part sizes are sorted into decreasing order
/// and the parts then occupy consecutive index ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    if parts.len() < 2 {
        return Err(FamilyError::TooFewParts);
    }
    if parts.contains(&0) {
        return Err(FamilyError::ZeroPart);
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let n: usize = sorted.iter().sum();
    // part_of[v] = index of the part containing v.
    let mut part_of = Vec::with_capacity(n);
    for (idx, &r) in sorted.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(idx, r));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// The matched-regular family `G(d)` of order `3d - 1`: an independent block
/// `A = {0..d-1}`, a clique `B = {d..2d-1}`, a block `C = {2d..3d-2}` joined
/// completely to `A`, and the perfect matching `i ~ d+i` between `A` and `B`.
/// The result is d-regular; `G(2)` is a 5-cycle.
pub fn abundant_regular(d: usize) -> Result<Graph, FamilyError> {
    if d < 2 {
        return Err(FamilyError::DegreeTooSmall(d));
    }
    let n = 3 * d - 1;
    let mut edges = Vec::new();
    for u in d..2 * d {
        for v in (u + 1)..2 * d {
            edges.push((u, v));
        }
    }
    for u in 0..d {
        for v in 2 * d..n {
            edges.push((u, v));
        }
    }
    for i in 0..d {
        edges.push((i, d + i));
    }
    let g = Graph::new(n, &edges).expect("valid by construction");
    debug_assert!(g.degree_profile().regular && g.degree(0) == d);
    Ok(g)
}

/// The join of `a` disjoint edges with a clique on `d - 1` vertices. The
/// matching occupies 0..2a-1 (edges (0,1), (2,3), ..), the clique the rest.
/// Minimum degree d, independence number a.
pub fn join_alpha_k2(a: usize, d: usize) -> Result<Graph, FamilyError> {
    if a < 1 || d < 2 {
        return Err(FamilyError::BadJoinParams { a, d });
    }
    let n = 2 * a + d - 1;
    let mut edges = Vec::new();
    for i in 0..a {
        edges.push((2 * i, 2 * i + 1));
    }
    for u in 2 * a..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    for u in 0..2 * a {
        for v in 2 * a..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Uniform random labeled tree, decoded from a seeded random Pruefer sequence
/// (ChaCha8 stream, so a given `(n, seed)` pair is stable across platforms).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { family: "random_tree", min: 1, got: n });
    }
    if n == 1 {
        return Ok(Graph::new(1, &[]).expect("valid"));
    }
    if n == 2 {
        return Ok(Graph::new(2, &[(0, 1)]).expect("valid"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Ok(prufer_decode(n, &seq))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let u = last.next().expect("two vertices remain");
    let v = last.next().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(n, &edges).expect("Pruefer decoding yields a tree")
}

/// A caterpillar whose leaf clusters sit far apart: a spine path with a
/// leaf-carrying vertex every `gap` edges and `leaves_per_spine[i]` pendant
/// leaves on the i-th such vertex. Spine indices come first (0..=(w-1)*gap),
/// leaves follow in cluster order, so the minimum distance between leaves of
/// distinct clusters is exactly `gap + 2`.
pub fn spaced_tree(w: usize, leaves_per_spine: &[usize], gap: usize) -> Result<Graph, FamilyError> {
    if w < 2 || gap < 1 {
        return Err(FamilyError::BadSpacedTreeParams);
    }
    if leaves_per_spine.len() != w {
        return Err(FamilyError::LeafListMismatch { expected: w, got: leaves_per_spine.len() });
    }
    if leaves_per_spine.contains(&0) {
        return Err(FamilyError::BadSpacedTreeParams);
    }
    let spine_len = (w - 1) * gap + 1;
    let n = spine_len + leaves_per_spine.iter().sum::<usize>();
    let mut edges: Vec<_> = (0..spine_len - 1).map(|i| (i, i + 1)).collect();
    let mut next = spine_len;
    for (i, &count) in leaves_per_spine.iter().enumerate() {
        let anchor = i * gap;
        for _ in 0..count {
            edges.push((anchor, next));
            next += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

/// Seeded Erdos-Renyi graph G(n, p); pair (u, v) order of the coin flips is
/// fixed, so instances are reproducible.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { family: "random_graph", min: 1, got: n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("valid by construction"))
}

// ---------------------------------------------------------------------------
// Tree statistics
// ---------------------------------------------------------------------------

/// Shape statistics of a tree: the leaves, the next-to-terminal (NT) vertices
/// (non-leaves adjacent to a leaf), the interior rest, and the minimum
/// distance between leaves hanging off distinct NT vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeStats {
    pub leaves: VertexSet,
    pub nt_vertices: VertexSet,
    pub leaf_count: usize,
    pub nt_count: usize,
    pub interior_count: usize,
    /// `None` when fewer than two NT vertices exist (stars, K_2).
    pub leaf_spacing: Option<u32>,
}

pub fn tree_stats(g: &Graph) -> Result<TreeStats, FamilyError> {
    let n = g.order();
    if n < 2 {
        return Err(FamilyError::OrderTooSmall { family: "tree_stats", min: 2, got: n });
    }
    if g.size() != n - 1 || !g.is_connected() {
        return Err(FamilyError::NotATree);
    }
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let mut nt = VertexSet::EMPTY;
    for leaf in leaves.iter() {
        nt |= g.neighbors(leaf);
    }
    let nt = nt - leaves;
    let leaf_count = leaves.len();
    let nt_count = nt.len();
    let interior_count = n - leaf_count - nt_count;
    let leaf_spacing = if nt_count >= 2 {
        let d = g.distances();
        let mut best = u32::MAX;
        let leaf_list = leaves.to_vec();
        for (i, &a) in leaf_list.iter().enumerate() {
            let anchor_a = g.neighbors(a).min().expect("leaf has a neighbour");
            for &b in &leaf_list[i + 1..] {
                let anchor_b = g.neighbors(b).min().expect("leaf has a neighbour");
                if anchor_a != anchor_b {
                    best = best.min(d.dist(a, b).expect("tree is connected"));
                }
            }
        }
        Some(best)
    } else {
        None
    };
    Ok(TreeStats { leaves, nt_vertices: nt, leaf_count, nt_count, interior_count, leaf_spacing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_cases() {
        assert_eq!(path(1).unwrap().order(), 1);
        let p4 = path(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_cases() {
        let c3 = cycle(3).unwrap();
        assert!(c3.is_complete());
        assert!(cycle(2).is_err());
        let c6 = cycle(6).unwrap();
        assert!(c6.degree_profile().regular);
        assert_eq!(c6.size(), 6);
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(complete(5).unwrap().size(), 10);
        assert_eq!(complete(1).unwrap().size(), 0);
        let s5 = star(5).unwrap();
        assert_eq!(s5.degree(0), 4);
        assert!((1..5).all(|v| s5.degree(v) == 1));
        assert!(star(1).is_err());
    }

    #[test]
    fn complete_minus_edge_small() {
        // n = 3 leaves a path on vertices 0-2-1.
        let g = complete_minus_edge(3).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        let mut degs = g.degree_profile().degrees;
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);
        assert!(g.is_connected());

        let g5 = complete_minus_edge(5).unwrap();
        assert_eq!(g5.size(), 9);
        assert!(!g5.has_edge(0, 1));
    }

    #[test]
    fn multipartite_layout() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        // Parts sorted descending: {0,1,2} then {3,4}.
        assert_eq!(g.order(), 5);
        assert!(!g.has_edge(0, 1) && !g.has_edge(3, 4));
        assert!(g.has_edge(0, 3) && g.has_edge(2, 4));
        assert_eq!(g.size(), 6);
        assert!(complete_multipartite(&[4]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        // All parts of size 1 degenerate to the complete graph.
        assert!(complete_multipartite(&[1, 1, 1]).unwrap().is_complete());
    }

    #[test]
    fn abundant_regular_structure() {
        for d in 2..=6 {
            let g = abundant_regular(d).unwrap();
            assert_eq!(g.order(), 3 * d - 1);
            let p = g.degree_profile();
            assert!(p.regular, "G({d}) must be regular");
            assert_eq!(p.min, d);
            assert!(g.is_connected());
            // The first block is independent and fully joined to the last.
            for u in 0..d {
                for v in (u + 1)..d {
                    assert!(!g.has_edge(u, v));
                }
                for v in 2 * d..3 * d - 1 {
                    assert!(g.has_edge(u, v));
                }
                assert!(g.has_edge(u, d + u), "matching edge {u}");
            }
        }
        assert!(abundant_regular(1).is_err());
    }

    /// G(2) is the 5-cycle 0-2-3-1-4-0.
    #[test]
    fn abundant_regular_two_is_a_five_cycle() {
        let g = abundant_regular(2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.degree_profile().regular && g.degree(0) == 2);
        assert_eq!(g.girth(), crate::graph::Girth::Finite(5));
    }

    #[test]
    fn join_family_parameters() {
        let g = join_alpha_k2(2, 2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree_profile().min, 2);
        // Independence number equals a: frozen from a subset sweep below.
        let mut best = 0;
        for mask in 0u32..1 << g.order() {
            let s: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
            let independent =
                s.iter().all(|&u| s.iter().all(|&v| u == v || !g.has_edge(u, v)));
            if independent {
                best = best.max(s.len());
            }
        }
        assert_eq!(best, 2);
        assert!(join_alpha_k2(0, 2).is_err());
        assert!(join_alpha_k2(1, 1).is_err());
    }

    #[test]
    fn random_tree_is_a_tree_and_seed_stable() {
        for n in 1..=12 {
            for seed in 0..10 {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.size(), n - 1);
                assert!(t.is_connected(), "n={n} seed={seed}");
            }
        }
        let a = random_tree(9, 42).unwrap();
        let b = random_tree(9, 42).unwrap();
        assert_eq!(a, b, "same seed, same tree");
        assert_ne!(random_tree(9, 42).unwrap(), random_tree(9, 43).unwrap());
    }

    #[test]
    fn spaced_tree_shape() {
        let t = spaced_tree(2, &[2, 2], 3).unwrap();
        // Spine 0-1-2-3, clusters {4,5} on 0 and {6,7} on 3.
        assert_eq!(t.order(), 8);
        let stats = tree_stats(&t).unwrap();
        assert_eq!(stats.leaf_count, 4);
        assert_eq!(stats.nt_count, 2);
        assert_eq!(stats.leaf_spacing, Some(5));
        assert_eq!(stats.nt_vertices.to_vec(), vec![0, 3]);

        let t2 = spaced_tree(2, &[1, 1], 1).unwrap();
        assert_eq!(t2.order(), 4);
        assert_eq!(tree_stats(&t2).unwrap().leaf_spacing, Some(3));

        let t3 = spaced_tree(3, &[1, 1, 1], 3).unwrap();
        let s3 = tree_stats(&t3).unwrap();
        assert_eq!((s3.leaf_count, s3.nt_count), (3, 3));
        assert_eq!(s3.leaf_spacing, Some(5));

        assert!(spaced_tree(1, &[1], 3).is_err());
        assert!(spaced_tree(2, &[1], 3).is_err());
        assert!(spaced_tree(2, &[1, 0], 3).is_err());
        assert!(spaced_tree(2, &[1, 1], 0).is_err());
    }

    /// Independent distance oracle for the leaf spacing: hand-rolled BFS over
    /// the generated tree rather than the DistMatrix used inside tree_stats.
    #[test]
    fn leaf_spacing_matches_bfs_oracle() {
        fn bfs_dist(g: &Graph, s: usize) -> Vec<Option<u32>> {
            let mut dist = vec![None; g.order()];
            dist[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u).iter() {
                    if dist[v].is_none() {
                        dist[v] = Some(dist[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        }
        for (w, leaves, gap) in [(2, vec![2, 2], 3), (3, vec![1, 2, 1], 2), (4, vec![1, 1, 1, 1], 1)]
        {
            let t = spaced_tree(w, &leaves, gap).unwrap();
            let stats = tree_stats(&t).unwrap();
            let mut oracle = u32::MAX;
            let leaf_list = stats.leaves.to_vec();
            for &a in &leaf_list {
                let da = bfs_dist(&t, a);
                for &b in &leaf_list {
                    if a < b {
                        let na = t.neighbors(a).min().unwrap();
                        let nb = t.neighbors(b).min().unwrap();
                        if na != nb {
                            oracle = oracle.min(da[b].unwrap());
                        }
                    }
                }
            }
            assert_eq!(stats.leaf_spacing, Some(oracle), "gap={gap}");
            assert_eq!(oracle, gap as u32 + 2);
        }
    }

    #[test]
    fn tree_stats_partitions_the_order() {
        for n in 2..=12 {
            for seed in 0..15 {
                let t = random_tree(n, seed).unwrap();
                let s = tree_stats(&t).unwrap();
                assert_eq!(s.leaf_count + s.nt_count + s.interior_count, n);
                assert!(!s.leaves.intersects(s.nt_vertices));
            }
        }
    }

    #[test]
    fn tree_stats_on_degenerate_trees() {
        // K_2: both endpoints are leaves, no NT vertices remain.
        let k2 = path(2).unwrap();
        let s = tree_stats(&k2).unwrap();
        assert_eq!((s.leaf_count, s.nt_count, s.interior_count), (2, 0, 0));
        assert_eq!(s.leaf_spacing, None);
        // Stars have a single NT vertex, so spacing is undefined.
        let s5 = tree_stats(&star(5).unwrap()).unwrap();
        assert_eq!((s5.leaf_count, s5.nt_count), (4, 1));
        assert_eq!(s5.leaf_spacing, None);
        // Not a tree.
        assert_eq!(tree_stats(&cycle(4).unwrap()), Err(FamilyError::NotATree));
        assert!(tree_stats(&path(1).unwrap()).is_err());
    }

    #[test]
    fn tree_stats_stable_under_relabeling() {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..10 {
            let t = random_tree(9, seed).unwrap();
            let s = tree_stats(&t).unwrap();
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            let relabeled = t.relabel(&perm).unwrap();
            let s2 = tree_stats(&relabeled).unwrap();
            assert_eq!(s.leaf_count, s2.leaf_count);
            assert_eq!(s.nt_count, s2.nt_count);
            assert_eq!(s.leaf_spacing, s2.leaf_spacing);
            let image: VertexSet = s.leaves.iter().map(|v| perm[v]).collect();
            assert_eq!(image, s2.leaves);
        }
    }

    #[test]
    fn random_graph_determinism_and_bounds() {
        let a = random_graph(10, 0.5, 9).unwrap();
        assert_eq!(a, random_graph(10, 0.5, 9).unwrap());
        assert_eq!(random_graph(6, 0.0, 1).unwrap().size(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap().size(), 15);
        assert!(random_graph(5, 1.5, 0).is_err());
    }
}
