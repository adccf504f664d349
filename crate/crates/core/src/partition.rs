//! Four-block vertex partitions dual to general position sets of the
//! Mycielskian.
//!
//! A partition (V1, V2, V3, V4) of V(G) encodes the root-free vertex set
//! S = V1 ∪ V1' ∪ V2' ∪ V3 of mu(G), where primes denote twins. The partition
//! is *admissible* when it satisfies three local conditions (see
//! [`first_violation`]); admissibility holds exactly when S is in general
//! position in mu(G), and |S| = n + |V1| - |V4|. Maximising this value over
//! admissible partitions therefore computes gp(mu(G)) for non-complete G
//! without ever searching mu(G) itself.

use crate::graph::{all_geodesics_up_to, DistMatrix, Graph, VertexSet};
use crate::gp::is_general_position;
use crate::mycielski::MycielskiGraph;
use std::fmt;
use thiserror::Error;

/// Order cap for the exhaustive partition search.
pub const PARTITION_SEARCH_CAP: usize = 12;

/// A violation of one of the three admissibility conditions.
///
/// 1. every edge inside V1 ∪ V3 has both ends in V3;
/// 2. if u ∈ V1 ∪ V3 has a neighbour v ∈ V2, then d(u,w) = 2 for every
///    w ∈ (V1 ∪ V2) ∖ {u,v} and d(u,w) ≤ 3 for every w ∈ V3 ∖ {u};
/// 3. every geodesic of length 2..4 with both endpoints in V1 ∪ V2 ∪ V3 and
///    an interior vertex in V1 ∪ V2 ∪ V3 either joins two V2 vertices at
///    distance ≥ 3, or (up to reversal) matches one of the shapes
///    u0..u4 with u0 ∈ V2, u4 ∈ V1 ∪ V3, u3 ∉ V1 ∪ V2;
///    u0..u3 with u0,u1 ∈ V2, u3 ∈ V1 ∪ V3;
///    u0,u1,u2 with u0,u1 ∈ V2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionViolation {
    /// Condition 1: an edge of ⟨V1 ∪ V3⟩ with an end in V1.
    InternalEdge { u: usize, v: usize },
    /// Condition 2: u ∈ V1 ∪ V3 with neighbour v ∈ V2, but w sits at the
    /// wrong distance from u.
    SpacingFailure { u: usize, v: usize, w: usize },
    /// Condition 3: a geodesic matching no allowed shape.
    ForbiddenGeodesic { path: Vec<usize> },
}

impl PartitionViolation {
    /// Index (1..=3) of the violated condition.
    pub fn condition_index(&self) -> u8 {
        match self {
            PartitionViolation::InternalEdge { .. } => 1,
            PartitionViolation::SpacingFailure { .. } => 2,
            PartitionViolation::ForbiddenGeodesic { .. } => 3,
        }
    }
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::InternalEdge { u, v } => {
                write!(f, "edge ({u},{v}) lies inside V1 ∪ V3 but leaves V3")
            }
            PartitionViolation::SpacingFailure { u, v, w } => {
                write!(f, "u={u} (with V2-neighbour {v}) sits at a forbidden distance from {w}")
            }
            PartitionViolation::ForbiddenGeodesic { path } => {
                write!(f, "geodesic {path:?} matches no allowed shape")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PartitionError {
    #[error("vertex {vertex} exceeds partition order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} appears in more than one block")]
    Overlapping(usize),
    #[error("vertex {0} appears in no block")]
    Uncovered(usize),
    #[error("partition has order {partition} but the graph has order {graph}")]
    OrderMismatch { partition: usize, graph: usize },
    #[error("partition is not admissible: {0}")]
    NotAdmissible(PartitionViolation),
    #[error("the set contains the root, which no partition encodes")]
    RootInSet,
    #[error("the set is not in general position in the Mycielskian")]
    NotInGeneralPosition,
    #[error("set member {0} is not a vertex of the Mycielskian")]
    SetOutOfRange(usize),
    #[error("partition search requires a non-complete graph")]
    CompleteInput,
    #[error("partition search is capped at {PARTITION_SEARCH_CAP} vertices, got {0}")]
    CapExceeded(usize),
}

// ---------------------------------------------------------------------------
// The partition type
// ---------------------------------------------------------------------------

/// An ordered partition of 0..n into four possibly empty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MycielskiPartition {
    n: usize,
    blocks: [VertexSet; 4],
}

impl MycielskiPartition {
    /// Validates that the four blocks are disjoint and cover 0..n exactly.
    pub fn new(
        n: usize,
        v1: VertexSet,
        v2: VertexSet,
        v3: VertexSet,
        v4: VertexSet,
    ) -> Result<Self, PartitionError> {
        let full = VertexSet::full(n);
        let blocks = [v1, v2, v3, v4];
        for b in &blocks {
            if !b.is_subset_of(full) {
                let vertex = (*b - full).min().expect("nonempty excess");
                return Err(PartitionError::OutOfRange { vertex, order: n });
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if blocks[i].intersects(blocks[j]) {
                    let vertex = (blocks[i] & blocks[j]).min().expect("nonempty overlap");
                    return Err(PartitionError::Overlapping(vertex));
                }
            }
        }
        let union = blocks[0] | blocks[1] | blocks[2] | blocks[3];
        if union != full {
            let vertex = (full - union).min().expect("nonempty gap");
            return Err(PartitionError::Uncovered(vertex));
        }
        Ok(MycielskiPartition { n, blocks })
    }

    /// Builds a partition from a per-vertex block assignment (entries 1..=4).
    pub fn from_assignment(assignment: &[u8]) -> Result<Self, PartitionError> {
        let mut blocks = [VertexSet::EMPTY; 4];
        for (v, &b) in assignment.iter().enumerate() {
            match b {
                1..=4 => blocks[b as usize - 1].insert(v),
                _ => return Err(PartitionError::Uncovered(v)),
            }
        }
        MycielskiPartition::new(assignment.len(), blocks[0], blocks[1], blocks[2], blocks[3])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn v1(&self) -> VertexSet {
        self.blocks[0]
    }

    #[inline]
    pub fn v2(&self) -> VertexSet {
        self.blocks[1]
    }

    #[inline]
    pub fn v3(&self) -> VertexSet {
        self.blocks[2]
    }

    #[inline]
    pub fn v4(&self) -> VertexSet {
        self.blocks[3]
    }

    /// Block index (1..=4) of vertex `v`.
    pub fn block_of(&self, v: usize) -> u8 {
        assert!(v < self.n, "vertex {v} out of range");
        for (i, b) in self.blocks.iter().enumerate() {
            if b.contains(v) {
                return i as u8 + 1;
            }
        }
        unreachable!("blocks cover 0..n")
    }

    /// Per-vertex block assignment, entries in 1..=4.
    pub fn assignment(&self) -> Vec<u8> {
        (0..self.n).map(|v| self.block_of(v)).collect()
    }

    /// Size of the encoded vertex set of mu(G): n + |V1| - |V4|.
    pub fn value(&self) -> usize {
        self.n - self.blocks[3].len() + self.blocks[0].len()
    }
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

#[inline]
fn in_v123(b: u8) -> bool {
    (1..=3).contains(&b)
}

#[inline]
fn in_v13(b: u8) -> bool {
    b == 1 || b == 3
}

/// Does the third condition constrain this geodesic at all?
fn condition3_applies(blocks: &[u8], path: &[usize]) -> bool {
    let last = path.len() - 1;
    in_v123(blocks[path[0]])
        && in_v123(blocks[path[last]])
        && path[1..last].iter().any(|&w| in_v123(blocks[w]))
}

fn matches_shape(blocks: &[u8], path: &[usize], reversed: bool) -> bool {
    let last = path.len() - 1;
    let b = |i: usize| blocks[path[if reversed { last - i } else { i }]];
    match last {
        2 => b(0) == 2 && b(1) == 2,
        3 => b(0) == 2 && b(1) == 2 && in_v13(b(3)),
        4 => b(0) == 2 && in_v13(b(4)) && !(b(3) == 1 || b(3) == 2),
        _ => false,
    }
}

/// Assuming [`condition3_applies`], is the geodesic of an allowed shape?
fn condition3_allows(blocks: &[u8], path: &[usize]) -> bool {
    let last = path.len() - 1;
    (blocks[path[0]] == 2 && blocks[path[last]] == 2 && last >= 3)
        || matches_shape(blocks, path, false)
        || matches_shape(blocks, path, true)
}

/// Condition 2 bound for a vertex `w` landing in the given block, measured
/// from a pair anchor `u`. Returns false on violation.
fn condition2_spacing(d: &DistMatrix, u: usize, w: usize, block_w: u8) -> bool {
    match block_w {
        1 | 2 => d.dist(u, w) == Some(2),
        3 => matches!(d.dist(u, w), Some(x) if x <= 3),
        _ => true,
    }
}

/// Checks the three admissibility conditions in order and reports the first
/// violation, or `None` when the partition is admissible.
pub fn first_violation(
    g: &Graph,
    p: &MycielskiPartition,
) -> Result<Option<PartitionViolation>, PartitionError> {
    if p.order() != g.order() {
        return Err(PartitionError::OrderMismatch { partition: p.order(), graph: g.order() });
    }
    let blocks = p.assignment();

    // Condition 1: edges inside V1 ∪ V3 stay inside V3.
    for (u, v) in g.edges() {
        if in_v13(blocks[u]) && in_v13(blocks[v]) && !(blocks[u] == 3 && blocks[v] == 3) {
            return Ok(Some(PartitionViolation::InternalEdge { u, v }));
        }
    }

    // Condition 2: spacing around V2-neighbours of V1 ∪ V3.
    let d = g.distances();
    for u in 0..g.order() {
        if !in_v13(blocks[u]) {
            continue;
        }
        for v in g.neighbors(u).iter() {
            if blocks[v] != 2 {
                continue;
            }
            for (w, &block_w) in blocks.iter().enumerate() {
                if w == u || w == v {
                    continue;
                }
                if !condition2_spacing(&d, u, w, block_w) {
                    return Ok(Some(PartitionViolation::SpacingFailure { u, v, w }));
                }
            }
        }
    }

    // Condition 3: every short geodesic threading V1 ∪ V2 ∪ V3 has an
    // allowed shape.
    for path in all_geodesics_up_to(g, &d, 4) {
        if condition3_applies(&blocks, &path) && !condition3_allows(&blocks, &path) {
            return Ok(Some(PartitionViolation::ForbiddenGeodesic { path }));
        }
    }
    Ok(None)
}

pub fn is_admissible(g: &Graph, p: &MycielskiPartition) -> Result<bool, PartitionError> {
    Ok(first_violation(g, p)?.is_none())
}

// ---------------------------------------------------------------------------
// Structural consequences
// ---------------------------------------------------------------------------

/// Shape facts about the first two blocks. For admissible partitions all
/// three flags are guaranteed true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionShape {
    /// V1 spans no edge.
    pub v1_independent: bool,
    /// No edge joins V1 to V3.
    pub no_v1_v3_edges: bool,
    /// The edges between V1 and V2 are pairwise disjoint.
    pub v1_v2_is_matching: bool,
    /// The V1–V2 edges themselves, each as (v1 end, v2 end).
    pub v1_v2_edges: Vec<(usize, usize)>,
}

pub fn derived_properties(
    g: &Graph,
    p: &MycielskiPartition,
) -> Result<PartitionShape, PartitionError> {
    if p.order() != g.order() {
        return Err(PartitionError::OrderMismatch { partition: p.order(), graph: g.order() });
    }
    let mut v1_independent = true;
    let mut no_v1_v3_edges = true;
    let mut v1_v2_edges = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (p.block_of(u), p.block_of(v));
        if a == 1 && b == 1 {
            v1_independent = false;
        }
        if (a, b) == (1, 3) || (a, b) == (3, 1) {
            no_v1_v3_edges = false;
        }
        if (a, b) == (1, 2) {
            v1_v2_edges.push((u, v));
        } else if (a, b) == (2, 1) {
            v1_v2_edges.push((v, u));
        }
    }
    let mut seen = VertexSet::EMPTY;
    let mut v1_v2_is_matching = true;
    for &(a, b) in &v1_v2_edges {
        if seen.contains(a) || seen.contains(b) {
            v1_v2_is_matching = false;
        }
        seen.insert(a);
        seen.insert(b);
    }
    Ok(PartitionShape { v1_independent, no_v1_v3_edges, v1_v2_is_matching, v1_v2_edges })
}

// ---------------------------------------------------------------------------
// Conversions between partitions and vertex sets of mu(G)
// ---------------------------------------------------------------------------

/// Encodes an admissible partition as the vertex set V1 ∪ V1' ∪ V2' ∪ V3 of
/// mu(G), which is then in general position. Fails on inadmissible input.
pub fn gp_set_from_partition(
    g: &Graph,
    p: &MycielskiPartition,
) -> Result<VertexSet, PartitionError> {
    if let Some(violation) = first_violation(g, p)? {
        return Err(PartitionError::NotAdmissible(violation));
    }
    let n = g.order();
    let mut s = VertexSet::EMPTY;
    for v in p.v1().iter() {
        s.insert(v);
        s.insert(n + v);
    }
    for v in p.v2().iter() {
        s.insert(n + v);
    }
    for v in p.v3().iter() {
        s.insert(v);
    }
    Ok(s)
}

/// Decodes a root-free general position set of mu(G) into its partition:
/// V1 holds vertices with both copies in the set, V2 twin-only, V3 base-only,
/// V4 neither.
pub fn partition_from_gp_set(
    mu: &MycielskiGraph,
    s: VertexSet,
) -> Result<MycielskiPartition, PartitionError> {
    if let Some(x) = s.iter().find(|&x| x >= mu.order()) {
        return Err(PartitionError::SetOutOfRange(x));
    }
    if s.contains(mu.root()) {
        return Err(PartitionError::RootInSet);
    }
    if !is_general_position(&mu.graph().distances(), s) {
        return Err(PartitionError::NotInGeneralPosition);
    }
    let n = mu.base_order();
    let mut blocks = [VertexSet::EMPTY; 4];
    for v in 0..n {
        let base = s.contains(v);
        let twin = s.contains(mu.twin(v));
        let idx = match (base, twin) {
            (true, true) => 0,
            (false, true) => 1,
            (true, false) => 2,
            (false, false) => 3,
        };
        blocks[idx].insert(v);
    }
    MycielskiPartition::new(n, blocks[0], blocks[1], blocks[2], blocks[3])
}

// ---------------------------------------------------------------------------
// Exhaustive search for the best admissible partition
// ---------------------------------------------------------------------------

struct PartitionSearch<'a> {
    g: &'a Graph,
    d: DistMatrix,
    n: usize,
    blocks: Vec<u8>,
    /// Established (u, v) pairs with u ∈ V1 ∪ V3 adjacent to v ∈ V2.
    pairs: Vec<(usize, usize)>,
    /// Geodesics of length 2..4 keyed by their largest vertex, so each is
    /// tested exactly once: at the moment its last vertex gets a block.
    paths_by_max: Vec<Vec<Vec<usize>>>,
    best_value: i64,
    best_blocks: Vec<u8>,
}

impl PartitionSearch<'_> {
    /// Can vertex `x` take block `b` given the assignment of 0..x? Assumes
    /// `blocks[x]` has already been set to `b`. Only checks constraints whose
    /// last participant is `x`; earlier calls covered the rest, so the full
    /// conditions hold exactly for complete assignments.
    fn admissible_step(&self, x: usize, b: u8) -> bool {
        // Condition 1 on edges into the assigned prefix.
        if in_v13(b) {
            for u in (self.g.neighbors(x) & VertexSet::full(x)).iter() {
                if in_v13(self.blocks[u]) && !(b == 3 && self.blocks[u] == 3) {
                    return false;
                }
            }
        }
        // Condition 2, x as the newly arrived witness of existing pairs.
        for &(u, _) in &self.pairs {
            if !condition2_spacing(&self.d, u, x, b) {
                return false;
            }
        }
        // Condition 2, pairs created by x itself, against assigned witnesses.
        let check_pair = |u: usize, v: usize| -> bool {
            (0..=x).all(|w| w == u || w == v || condition2_spacing(&self.d, u, w, self.blocks[w]))
        };
        let assigned_neighbors = self.g.neighbors(x) & VertexSet::full(x);
        if in_v13(b) {
            for v in assigned_neighbors.iter() {
                if self.blocks[v] == 2 && !check_pair(x, v) {
                    return false;
                }
            }
        } else if b == 2 {
            for u in assigned_neighbors.iter() {
                if in_v13(self.blocks[u]) && !check_pair(u, x) {
                    return false;
                }
            }
        }
        // Condition 3 on geodesics completed by x.
        for path in &self.paths_by_max[x] {
            if condition3_applies(&self.blocks, path) && !condition3_allows(&self.blocks, path) {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, x: usize, n1: i64, n4: i64) {
        // Even sending every unassigned vertex to V1 cannot beat the best.
        if self.n as i64 + n1 + (self.n - x) as i64 - n4 <= self.best_value {
            return;
        }
        if x == self.n {
            let value = self.n as i64 + n1 - n4;
            if value > self.best_value {
                self.best_value = value;
                self.best_blocks.copy_from_slice(&self.blocks);
            }
            return;
        }
        for b in 1..=4u8 {
            self.blocks[x] = b;
            if self.admissible_step(x, b) {
                let pair_mark = self.pairs.len();
                let assigned_neighbors = self.g.neighbors(x) & VertexSet::full(x);
                if in_v13(b) {
                    for v in assigned_neighbors.iter() {
                        if self.blocks[v] == 2 {
                            self.pairs.push((x, v));
                        }
                    }
                } else if b == 2 {
                    for u in assigned_neighbors.iter() {
                        if in_v13(self.blocks[u]) {
                            self.pairs.push((u, x));
                        }
                    }
                }
                self.dfs(x + 1, n1 + (b == 1) as i64, n4 + (b == 4) as i64);
                self.pairs.truncate(pair_mark);
            }
            self.blocks[x] = 0;
        }
    }
}

/// Finds an admissible partition of maximum value by exhaustive search over
/// block assignments, trying blocks in the order 1, 2, 3, 4 per vertex. Ties
/// go to the assignment vector that is lexicographically smallest in that
/// order. Complete graphs are rejected: their Mycielskians have general
/// position sets through the root that no partition encodes.
pub fn best_partition(g: &Graph) -> Result<MycielskiPartition, PartitionError> {
    let n = g.order();
    if n > PARTITION_SEARCH_CAP {
        return Err(PartitionError::CapExceeded(n));
    }
    if g.is_complete() {
        return Err(PartitionError::CompleteInput);
    }
    let d = g.distances();
    let mut paths_by_max = vec![Vec::new(); n];
    for path in all_geodesics_up_to(g, &d, 4) {
        let max = *path.iter().max().expect("paths are nonempty");
        paths_by_max[max].push(path);
    }
    let mut search = PartitionSearch {
        g,
        d,
        n,
        blocks: vec![0; n],
        pairs: Vec::new(),
        paths_by_max,
        best_value: -1,
        best_blocks: vec![0; n],
    };
    search.dfs(0, 0, 0);
    debug_assert!(search.best_value >= n as i64, "the all-V2 assignment is always admissible");
    MycielskiPartition::from_assignment(&search.best_blocks)
}

/// Convenience: gp(mu(G)) computed through the partition search.
pub fn gp_mycielskian_via_partition(g: &Graph) -> Result<usize, PartitionError> {
    Ok(best_partition(g)?.value())
}

// ===========================================================================
// tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::gp::gp_number;
    use crate::mycielski::mycielskian;

    fn parts(n: usize, v1: &[usize], v2: &[usize], v3: &[usize], v4: &[usize]) -> MycielskiPartition {
        MycielskiPartition::new(
            n,
            v1.iter().copied().collect(),
            v2.iter().copied().collect(),
            v3.iter().copied().collect(),
            v4.iter().copied().collect(),
        )
        .unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(MycielskiPartition::new(
            3,
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            VertexSet::EMPTY
        )
        .is_ok());
        assert_eq!(
            MycielskiPartition::new(
                3,
                VertexSet::singleton(0),
                VertexSet::singleton(0),
                VertexSet::EMPTY,
                VertexSet::singleton(2)
            ),
            Err(PartitionError::Overlapping(0))
        );
        assert_eq!(
            MycielskiPartition::new(
                3,
                VertexSet::singleton(0),
                VertexSet::EMPTY,
                VertexSet::EMPTY,
                VertexSet::singleton(2)
            ),
            Err(PartitionError::Uncovered(1))
        );
        assert_eq!(
            MycielskiPartition::new(
                2,
                VertexSet::singleton(5),
                VertexSet::EMPTY,
                VertexSet::EMPTY,
                VertexSet::full(2)
            ),
            Err(PartitionError::OutOfRange { vertex: 5, order: 2 })
        );
    }

    #[test]
    fn assignment_round_trip() {
        let p = parts(5, &[0, 3], &[1, 2], &[], &[4]);
        assert_eq!(p.assignment(), vec![1, 2, 2, 1, 4]);
        assert_eq!(MycielskiPartition::from_assignment(&p.assignment()).unwrap(), p);
        assert_eq!(p.block_of(2), 2);
        assert_eq!(p.value(), 5 + 2 - 1);
    }

    /// On the five-cycle, V1 = {0,3}, V2 = {1,2}, V4 = {4} is admissible with
    /// value 6, which is exactly gp of the Mycielskian.
    #[test]
    fn five_cycle_partition_is_admissible() {
        let g = families::cycle(5).unwrap();
        let p = parts(5, &[0, 3], &[1, 2], &[], &[4]);
        assert_eq!(first_violation(&g, &p).unwrap(), None);
        assert_eq!(p.value(), 6);
        let mu = mycielskian(&g).unwrap();
        assert_eq!(gp_number(mu.graph()).value, 6);
    }

    /// The triangle-matched construction on d = 3: an independent triple
    /// matched into a triangle, plus two vertices joined to the triple.
    #[test]
    fn abundant_cubic_partition_reaches_three_d() {
        let g = families::abundant_regular(3).unwrap();
        let p = parts(8, &[0, 1, 2], &[3, 4, 5], &[], &[6, 7]);
        assert_eq!(first_violation(&g, &p).unwrap(), None);
        assert_eq!(p.value(), 9);
        let best = best_partition(&g).unwrap();
        assert_eq!(best.value(), 9);
    }

    #[test]
    fn violations_are_reported_in_condition_order() {
        // Edge inside V1 trips condition 1 even though condition 2 is also
        // broken.
        let p3 = families::path(3).unwrap();
        let p = parts(3, &[0, 1], &[2], &[], &[]);
        let v = first_violation(&p3, &p).unwrap().unwrap();
        assert_eq!(v, PartitionViolation::InternalEdge { u: 0, v: 1 });
        assert_eq!(v.condition_index(), 1);

        // Condition 2: the far endpoint of P_4 sits at distance 3, not 2.
        let p4 = families::path(4).unwrap();
        let p = parts(4, &[0, 3], &[1], &[], &[2]);
        let v = first_violation(&p4, &p).unwrap().unwrap();
        assert_eq!(v, PartitionViolation::SpacingFailure { u: 0, v: 1, w: 3 });
        assert_eq!(v.condition_index(), 2);

        // Condition 3: two V1 leaves of a star see each other through the
        // V2 centre.
        let s4 = families::star(4).unwrap();
        let p = parts(4, &[1, 2], &[0], &[], &[3]);
        let v = first_violation(&s4, &p).unwrap().unwrap();
        assert_eq!(v, PartitionViolation::ForbiddenGeodesic { path: vec![1, 0, 2] });
        assert_eq!(v.condition_index(), 3);
    }

    #[test]
    fn condition2_distances_respect_unreachable_vertices() {
        // Two components: a matched edge in one, a stranded V1 vertex in the
        // other. d(0, 2) is infinite, so the spacing requirement must fail.
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let p = parts(3, &[0, 2], &[1], &[], &[]);
        let v = first_violation(&g, &p).unwrap().unwrap();
        assert_eq!(v, PartitionViolation::SpacingFailure { u: 0, v: 1, w: 2 });
    }

    #[test]
    fn derived_properties_hold_for_admissible_partitions() {
        let g = families::cycle(5).unwrap();
        let p = parts(5, &[0, 3], &[1, 2], &[], &[4]);
        let shape = derived_properties(&g, &p).unwrap();
        assert!(shape.v1_independent && shape.no_v1_v3_edges && shape.v1_v2_is_matching);
        assert_eq!(shape.v1_v2_edges, vec![(0, 1), (3, 2)]);

        // A deliberately bad partition shows the flags are not vacuous.
        let bad = parts(5, &[0, 1], &[2], &[4], &[3]);
        let shape = derived_properties(&g, &bad).unwrap();
        assert!(!shape.v1_independent);
        assert!(!shape.no_v1_v3_edges, "edge (0,4) joins V1 to V3");
    }

    #[test]
    fn gp_set_encoding_on_the_five_cycle() {
        let g = families::cycle(5).unwrap();
        let p = parts(5, &[0, 3], &[1, 2], &[], &[4]);
        let s = gp_set_from_partition(&g, &p).unwrap();
        // V1 ∪ V1' ∪ V2' ∪ V3 with twins at n + v.
        let expected: VertexSet = [0, 3, 5, 8, 6, 7].into_iter().collect();
        assert_eq!(s, expected);
        assert_eq!(s.len(), p.value());

        let mu = mycielskian(&g).unwrap();
        let back = partition_from_gp_set(&mu, s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn gp_set_encoding_rejects_bad_inputs() {
        let g = families::path(3).unwrap();
        let bad = parts(3, &[0, 1], &[2], &[], &[]);
        assert!(matches!(
            gp_set_from_partition(&g, &bad),
            Err(PartitionError::NotAdmissible(_))
        ));

        let mu = mycielskian(&g).unwrap();
        let with_root: VertexSet = [0, mu.root()].into_iter().collect();
        assert_eq!(partition_from_gp_set(&mu, with_root), Err(PartitionError::RootInSet));
        let stray: VertexSet = [0, 64].into_iter().collect();
        assert_eq!(partition_from_gp_set(&mu, stray), Err(PartitionError::SetOutOfRange(64)));
        // 0, 1, 2 is a geodesic of mu(P_3) entirely inside the candidate set.
        let not_gp: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(partition_from_gp_set(&mu, not_gp), Err(PartitionError::NotInGeneralPosition));
    }

    /// Decoding any root-free general position set and re-encoding it is the
    /// identity: the two maps are mutually inverse on their domains.
    #[test]
    fn conversions_are_mutually_inverse() {
        use crate::gp::enumerate_max_gp_sets;
        for g in [
            families::cycle(4).unwrap(),
            families::path(5).unwrap(),
            families::star(4).unwrap(),
            families::complete_minus_edge(4).unwrap(),
        ] {
            let mu = mycielskian(&g).unwrap();
            for s in enumerate_max_gp_sets(mu.graph()).unwrap() {
                if s.contains(mu.root()) {
                    continue;
                }
                let p = partition_from_gp_set(&mu, s).unwrap();
                assert_eq!(p.value(), s.len());
                assert_eq!(first_violation(&g, &p).unwrap(), None, "decoded partitions are admissible");
                assert_eq!(gp_set_from_partition(&g, &p).unwrap(), s);
            }
        }
    }

    #[test]
    fn best_partition_rejects_complete_and_oversize_inputs() {
        assert_eq!(
            best_partition(&families::complete(4).unwrap()),
            Err(PartitionError::CompleteInput)
        );
        assert_eq!(
            best_partition(&families::complete(1).unwrap()),
            Err(PartitionError::CompleteInput)
        );
        assert_eq!(
            best_partition(&families::path(13).unwrap()),
            Err(PartitionError::CapExceeded(13))
        );
    }

    /// The partition search and the direct solver on mu(G) agree: this is the
    /// two-route check of the duality on assorted named graphs.
    #[test]
    fn partition_value_matches_gp_of_mycielskian() {
        let graphs = vec![
            families::cycle(4).unwrap(),
            families::cycle(5).unwrap(),
            families::cycle(6).unwrap(),
            families::path(5).unwrap(),
            families::star(5).unwrap(),
            families::complete_multipartite(&[2, 3]).unwrap(),
            families::complete_minus_edge(5).unwrap(),
            families::abundant_regular(2).unwrap(),
        ];
        for g in graphs {
            let via_partition = best_partition(&g).unwrap();
            assert_eq!(first_violation(&g, &via_partition).unwrap(), None);
            let mu = mycielskian(&g).unwrap();
            let direct = gp_number(mu.graph());
            assert_eq!(via_partition.value(), direct.value, "{g:?}");
        }
    }

    #[test]
    fn partition_value_matches_gp_on_random_connected_graphs() {
        let mut checked = 0;
        let mut seed = 900;
        while checked < 12 {
            let g = families::random_graph(6, 0.4, seed).unwrap();
            seed += 1;
            if !g.is_connected() || g.is_complete() {
                continue;
            }
            checked += 1;
            let p = best_partition(&g).unwrap();
            let mu = mycielskian(&g).unwrap();
            assert_eq!(p.value(), gp_number(mu.graph()).value, "{g:?}");
        }
    }

    /// The returned assignment is the lexicographically smallest one over
    /// blocks 1 < 2 < 3 < 4 among maximum-value partitions.
    #[test]
    fn best_partition_breaks_ties_lexicographically() {
        let g = families::cycle(4).unwrap();
        let best = best_partition(&g).unwrap();
        // Brute-force oracle: walk all 4^4 assignments in lex order (vertex 0
        // is the most significant digit) and keep the first one attaining the
        // maximum admissible value.
        let mut best_value = 0;
        let mut lex_smallest: Option<Vec<u8>> = None;
        for code in 0..4usize.pow(4) {
            let mut c = code;
            let mut a = vec![0u8; 4];
            for i in (0..4).rev() {
                a[i] = (c % 4) as u8 + 1;
                c /= 4;
            }
            let p = MycielskiPartition::from_assignment(&a).unwrap();
            if first_violation(&g, &p).unwrap().is_none() && p.value() > best_value {
                best_value = p.value();
                lex_smallest = Some(a);
            }
        }
        assert_eq!(best.assignment(), lex_smallest.unwrap());
        assert_eq!(best.value(), best_value);
    }

    #[test]
    fn all_v2_assignment_is_always_admissible() {
        for seed in 0..10 {
            let g = families::random_graph(7, 0.5, 4_000 + seed).unwrap();
            let p = MycielskiPartition::from_assignment(&[2u8; 7]).unwrap();
            assert_eq!(first_violation(&g, &p).unwrap(), None, "{g:?}");
            assert_eq!(p.value(), 7);
        }
    }
}
