//! Closed-form values and bounds for the general position number of
//! Mycielskians, plus the meagre/abundant classification.
//!
//! Everything here evaluates a formula against graph statistics; none of it
//! searches mu(G). The solvers in [`crate::gp`] and [`crate::partition`]
//! provide the independent ground truth these formulas are tested against.

use crate::families;
use crate::gp::{alpha_gp, independence_number, SolverError};
use crate::graph::{Girth, Graph};
use crate::matching::matching_number;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BoundError {
    #[error("bound requires a non-complete graph")]
    CompleteInput,
    #[error("bound requires minimum degree at least one, but vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("regular-graph formulas require degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("input is not a tree")]
    NotATree,
    #[error("tree bounds require order at least 3, got {0}")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

// ---------------------------------------------------------------------------
// Individual bounds
// ---------------------------------------------------------------------------

/// Lower bound max{n, 2·alpha_gp(G)}: the twin copy of V(G) is always in
/// general position, as is V1 ∪ V1' for an independent general position set
/// V1 of G.
pub fn lower_bound(g: &Graph) -> Result<usize, BoundError> {
    let (a, _) = alpha_gp(g)?;
    Ok(g.order().max(2 * a))
}

/// Upper bounds n + max{0, α − δ + 1} and n + α − 1 for non-complete graphs
/// with minimum degree δ ≥ 1, returned in that order.
pub fn upper_bound_general(g: &Graph) -> Result<(usize, usize), BoundError> {
    if g.is_complete() {
        return Err(BoundError::CompleteInput);
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(BoundError::IsolatedVertex(v));
    }
    let n = g.order();
    let (alpha, _) = independence_number(g)?;
    let delta = g.degree_profile().min;
    let slack = (alpha + 1).saturating_sub(delta);
    Ok((n + slack, n + alpha - 1))
}

/// Upper bound n + (d−1)/2 + 1/d for d-regular graphs, floored to an integer
/// by exact arithmetic: floor((2nd + d² − d + 2) / 2d).
pub fn upper_bound_regular(g: &Graph) -> Result<usize, BoundError> {
    let profile = g.degree_profile();
    if !profile.regular {
        return Err(BoundError::NotRegular);
    }
    let d = profile.min;
    if d < 2 {
        return Err(BoundError::DegreeTooSmall(d));
    }
    let n = g.order();
    Ok((2 * n * d + d * d - d + 2) / (2 * d))
}

/// Upper bound 2n − 2ν(G) for graphs of order ≥ 4 and girth ≥ 6 (acyclic
/// graphs qualify). Returns `None` when the hypotheses fail.
pub fn upper_bound_matching(g: &Graph) -> Option<usize> {
    if g.order() < 4 {
        return None;
    }
    match g.girth() {
        Girth::Finite(girth) if girth < 6 => return None,
        _ => {}
    }
    let (nu, _) = matching_number(g);
    Some(2 * g.order() - 2 * nu)
}

/// Any d-regular graph with at least this many vertices is meagre:
/// d³ − 2d² + 2d + 2.
pub fn regular_meagre_threshold(d: usize) -> Result<usize, BoundError> {
    if d < 2 {
        return Err(BoundError::DegreeTooSmall(d));
    }
    Ok(d * d * d - 2 * d * d + 2 * d + 2)
}

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Why a tree's value is known exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeExactness {
    /// One branch vertex carries every leaf: the value is 2ℓ.
    Star,
    /// Every next-to-leaf vertex carries exactly one leaf (ℓ = w): the
    /// value is n.
    MatchedLeaves,
    /// Leaves under distinct anchors are pairwise at distance ≥ 5: the
    /// value is n + ℓ − w.
    SpacedLeaves,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<(TreeExactness, usize)>,
}

/// Bounds n + ℓ − w from above and max{n, 2·alpha_gp} from below, upgraded
/// to an exact value for stars, for trees with one leaf per anchor, and for
/// trees whose leaf clusters are spread out (minimum cross-cluster leaf
/// distance ≥ 5).
pub fn tree_bounds(t: &Graph) -> Result<TreeBounds, BoundError> {
    let n = t.order();
    if n < 3 {
        return Err(BoundError::OrderTooSmall(n));
    }
    let stats = families::tree_stats(t).map_err(|_| BoundError::NotATree)?;
    let (l, w) = (stats.leaf_count, stats.nt_count);
    let upper = n + l - w;
    let exact = if w == 1 {
        Some((TreeExactness::Star, 2 * l))
    } else if l == w {
        Some((TreeExactness::MatchedLeaves, n))
    } else if matches!(stats.leaf_spacing, Some(s) if s >= 5) {
        Some((TreeExactness::SpacedLeaves, upper))
    } else {
        None
    };
    let lower = match exact {
        Some((_, value)) => value,
        None => n.max(2 * alpha_gp(t)?.0),
    };
    Ok(TreeBounds { lower, upper, exact })
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormFamily {
    Complete { n: usize },
    CompleteMinusEdge { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Cycle { n: usize },
    /// The d-regular order-(3d−1) construction from [`families::abundant_regular`],
    /// recognised only in that labeling.
    AbundantRegular { d: usize },
}

/// Recognises families with a known exact value of gp(mu(G)) and returns it.
///
/// Detection is purely structural: complete graphs (n ≥ 2, value n + 1), a
/// complete graph minus one edge (n ≥ 4, value n), complete multipartite
/// graphs with ≥ 2 parts (value max{n, 2·largest part}), cycles (n ≥ 3,
/// value n + 1 for n ∈ {3, 5} and n otherwise), and the abundant regular
/// construction in its canonical labeling (value 3d).
pub fn closed_form(g: &Graph) -> Option<(ClosedFormFamily, usize)> {
    let n = g.order();
    if g.is_complete() {
        return (n >= 2).then(|| (ClosedFormFamily::Complete { n }, n + 1));
    }
    // One missing edge: the complement has a single edge.
    if n >= 4 && g.complement().size() == 1 {
        return Some((ClosedFormFamily::CompleteMinusEdge { n }, n));
    }
    // Complete multipartite: the complement splits into independent parts of
    // G with every cross edge present.
    let complement = g.complement();
    let components = complement.components();
    if components.len() >= 2 {
        let all_parts_independent = components
            .iter()
            .all(|part| part.iter().all(|u| !g.neighbors(u).intersects(*part)));
        if all_parts_independent {
            let mut parts: Vec<usize> = components.iter().map(|p| p.len()).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let value = n.max(2 * parts[0]);
            return Some((ClosedFormFamily::CompleteMultipartite { parts }, value));
        }
    }
    // Cycles: connected and 2-regular.
    let profile = g.degree_profile();
    if n >= 3 && profile.regular && profile.min == 2 && g.is_connected() {
        let value = if n == 3 || n == 5 { n + 1 } else { n };
        return Some((ClosedFormFamily::Cycle { n }, value));
    }
    // The abundant regular construction, canonical labeling only.
    if n >= 5 && (n + 1).is_multiple_of(3) {
        let d = (n + 1) / 3;
        if profile.regular
            && profile.min == d
            && families::abundant_regular(d).is_ok_and(|h| h == *g)
        {
            return Some((ClosedFormFamily::AbundantRegular { d }, 3 * d));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Classification and the aggregate report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpClass {
    /// gp(mu(G)) equals the lower bound max{n, 2·alpha_gp}.
    Meagre,
    /// gp(mu(G)) exceeds the lower bound.
    Abundant,
}

/// Classifies a non-complete graph given its exact gp(mu(G)) value.
pub fn classify(g: &Graph, gp_mu: usize) -> Result<GpClass, BoundError> {
    if g.is_complete() {
        return Err(BoundError::CompleteInput);
    }
    let floor = lower_bound(g)?;
    Ok(if gp_mu == floor { GpClass::Meagre } else { GpClass::Abundant })
}

/// One named upper bound; `value` is `None` when the hypotheses fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: Option<usize>,
}

/// Every statistic and bound this module knows, evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub alpha: usize,
    pub min_degree: usize,
    pub matching_number: usize,
    pub girth: Girth,
    pub regular_degree: Option<usize>,
    pub lower: usize,
    pub uppers: Vec<BoundEntry>,
    pub exact: Option<(ClosedFormFamily, usize)>,
    pub classification: Option<GpClass>,
}

impl BoundReport {
    /// Evaluates all statistics and bounds; pass the exact gp(mu(G)) value,
    /// if known, to also classify the graph.
    pub fn for_graph(g: &Graph, gp_mu: Option<usize>) -> Result<BoundReport, BoundError> {
        let profile = g.degree_profile();
        let general = upper_bound_general(g).ok();
        let uppers = vec![
            BoundEntry { name: "general_a", value: general.map(|(a, _)| a) },
            BoundEntry { name: "general_b", value: general.map(|(_, b)| b) },
            BoundEntry { name: "regular", value: upper_bound_regular(g).ok() },
            BoundEntry { name: "matching", value: upper_bound_matching(g) },
        ];
        let classification = match gp_mu {
            Some(value) if !g.is_complete() => Some(classify(g, value)?),
            _ => None,
        };
        Ok(BoundReport {
            n: g.order(),
            alpha: independence_number(g)?.0,
            min_degree: profile.min,
            matching_number: matching_number(g).0,
            girth: g.girth(),
            regular_degree: profile.regular.then_some(profile.min),
            lower: lower_bound(g)?,
            uppers,
            exact: closed_form(g),
            classification,
        })
    }

    /// Smallest applicable upper bound, if any applies.
    pub fn min_upper(&self) -> Option<usize> {
        self.uppers.iter().filter_map(|e| e.value).min()
    }
}

// ===========================================================================
// tests
// ===========================================================================
