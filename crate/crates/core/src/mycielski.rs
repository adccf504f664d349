//! The Mycielskian construction and its geodesic structure.
//!
//! For a graph G on vertices 0..n, the Mycielskian mu(G) uses the fixed index
//! scheme: base vertex v keeps index v, its twin sits at n + v, and the root
//! is 2n. Edges: the edges of G, an edge between u and the twin of v for
//! every edge uv of G, and an edge from every twin to the root.

use crate::graph::{geodesics_between, Graph, GraphError, VertexSet};
use thiserror::Error;

/// Order cap for the exhaustive geodesic classification check.
pub const CLASSIFICATION_CAP: usize = 10;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum MycielskiError {
    #[error("path visits the root, which has no projection")]
    RootInPath,
    #[error("consecutive path entries {u} and {v} are not adjacent in the Mycielskian")]
    NotAPath { u: usize, v: usize },
    #[error("path entry {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("geodesic classification requires a connected graph")]
    DisconnectedInput,
    #[error("geodesic classification is capped at {CLASSIFICATION_CAP} vertices, got {0}")]
    CapExceeded(usize),
}

/// Role of a vertex of mu(G) under the fixed index scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Base(usize),
    Twin(usize),
    Root,
}

/// A Mycielskian together with its base order, which fixes the index scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MycielskiGraph {
    graph: Graph,
    base_order: usize,
}

/// Builds mu(G). Fails only when 2n + 1 exceeds the graph order limit.
pub fn mycielskian(g: &Graph) -> Result<MycielskiGraph, GraphError> {
    let n = g.order();
    let mut edges = g.edges();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for v in 0..n {
        edges.push((n + v, 2 * n));
    }
    let graph = Graph::new(2 * n + 1, &edges)?;
    Ok(MycielskiGraph { graph, base_order: n })
}

impl MycielskiGraph {
    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    #[inline]
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Twin index of base vertex `v`.
    #[inline]
    pub fn twin(&self, v: usize) -> usize {
        assert!(v < self.base_order, "twin() expects a base vertex");
        self.base_order + v
    }

    #[inline]
    pub fn root(&self) -> usize {
        2 * self.base_order
    }

    pub fn role_of(&self, x: usize) -> VertexRole {
        assert!(x < self.order(), "vertex {x} out of range");
        if x < self.base_order {
            VertexRole::Base(x)
        } else if x < 2 * self.base_order {
            VertexRole::Twin(x - self.base_order)
        } else {
            VertexRole::Root
        }
    }

    pub fn base_vertices(&self) -> VertexSet {
        VertexSet::full(self.base_order)
    }

    pub fn twin_vertices(&self) -> VertexSet {
        VertexSet::full(2 * self.base_order) - VertexSet::full(self.base_order)
    }

    /// Projects a root-free path of mu(G) to G by collapsing twins onto their
    /// base vertices. The image is always a walk in G; it may repeat vertices.
    pub fn project_path(&self, path: &[usize]) -> Result<Vec<usize>, MycielskiError> {
        for &x in path {
            if x >= self.order() {
                return Err(MycielskiError::VertexOutOfRange(x));
            }
            if x == self.root() {
                return Err(MycielskiError::RootInPath);
            }
        }
        for pair in path.windows(2) {
            if !self.graph.has_edge(pair[0], pair[1]) {
                return Err(MycielskiError::NotAPath { u: pair[0], v: pair[1] });
            }
        }
        Ok(path
            .iter()
            .map(|&x| match self.role_of(x) {
                VertexRole::Base(v) | VertexRole::Twin(v) => v,
                VertexRole::Root => unreachable!("root rejected above"),
            })
            .collect())
    }
}

// ---------------------------------------------------------------------------
// Geodesic classification
// ---------------------------------------------------------------------------

/// Census of all geodesics of mu(G) between base/base and base/twin pairs.
///
/// Every geodesic must fall into one of the shapes below; anything else is
/// recorded as a violation.
///
/// * base pair, d_G <= 3: an expansion of a u,v-geodesic of G;
/// * base pair, d_G >= 4: an expansion of a length-4 u,v-path of G (which
///   forces d_G = 4), or the root detour u, w1', root, w2', v;
/// * base/twin pair u, v' with u != v: an expansion of a u,v-geodesic of G,
///   or the root detour u, w', root, v'.
///
/// Both shapes can occur for the same pair; the census counts geodesics, not
/// pairs, and does not assume the shapes exclude each other.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeodesicClassification {
    /// Base pairs at G-distance <= 3: geodesics projecting onto G-geodesics.
    pub near_base_expansions: usize,
    /// Base pairs at G-distance >= 4: geodesics projecting onto length-4 paths.
    pub far_base_expansions: usize,
    /// Base pairs at G-distance >= 4: root detours through two twins.
    pub far_base_root_detours: usize,
    /// Base/twin pairs: geodesics projecting onto G-geodesics.
    pub mixed_expansions: usize,
    /// Base/twin pairs: root detours u, w', root, v'.
    pub mixed_root_detours: usize,
    /// Human-readable descriptions of geodesics matching no allowed shape.
    pub violations: Vec<String>,
}

/// Enumerates every geodesic of mu(G) between base/base and base/twin pairs
/// and classifies each against the allowed shapes. Requires G connected with
/// at most [`CLASSIFICATION_CAP`] vertices.
pub fn check_geodesic_classification(
    g: &Graph,
) -> Result<GeodesicClassification, MycielskiError> {
    let n = g.order();
    if n > CLASSIFICATION_CAP {
        return Err(MycielskiError::CapExceeded(n));
    }
    if !g.is_connected() {
        return Err(MycielskiError::DisconnectedInput);
    }
    let mu = mycielskian(g).expect("small order");
    let dg = g.distances();
    let dmu = mu.graph().distances();
    let root = mu.root();
    let mut report = GeodesicClassification::default();

    let project = |path: &[usize]| -> Vec<usize> {
        path.iter()
            .map(|&x| match mu.role_of(x) {
                VertexRole::Base(v) | VertexRole::Twin(v) => v,
                VertexRole::Root => unreachable!("caller excludes the root"),
            })
            .collect()
    };
    let distinct = |proj: &[usize]| -> bool {
        let set: VertexSet = proj.iter().copied().collect();
        set.len() == proj.len()
    };

    // Base pairs.
    for u in 0..n {
        for v in (u + 1)..n {
            let dg_uv = dg.dist(u, v).expect("connected");
            let dmu_uv = dmu.dist(u, v).expect("Mycielskian of a connected graph");
            if dmu_uv != dg_uv.min(4) {
                report.violations.push(format!(
                    "base pair ({u},{v}): mu-distance {dmu_uv} differs from min(d_G, 4)"
                ));
            }
            for path in geodesics_between(mu.graph(), &dmu, u, v) {
                if dg_uv <= 3 {
                    let ok = !path.contains(&root) && {
                        let proj = project(&path);
                        distinct(&proj) && (proj.len() - 1) as u32 == dg_uv
                    };
                    if ok {
                        report.near_base_expansions += 1;
                    } else {
                        report
                            .violations
                            .push(format!("base pair ({u},{v}) d_G={dg_uv}: stray geodesic {path:?}"));
                    }
                } else if path.contains(&root) {
                    // Allowed shape: u, w1', root, w2', v.
                    let ok = path.len() == 5
                        && path[2] == root
                        && matches!(mu.role_of(path[1]), VertexRole::Twin(_))
                        && matches!(mu.role_of(path[3]), VertexRole::Twin(_));
                    if ok {
                        report.far_base_root_detours += 1;
                    } else {
                        report
                            .violations
                            .push(format!("base pair ({u},{v}) d_G={dg_uv}: stray root path {path:?}"));
                    }
                } else {
                    let proj = project(&path);
                    let ok = distinct(&proj) && proj.len() == 5 && dg_uv == 4;
                    if ok {
                        report.far_base_expansions += 1;
                    } else {
                        report
                            .violations
                            .push(format!("base pair ({u},{v}) d_G={dg_uv}: stray geodesic {path:?}"));
                    }
                }
            }
        }
    }

    // Base/twin pairs u, v' with u != v.
    for u in 0..n {
        for v in 0..n {
            if v == u {
                continue;
            }
            let twin = mu.twin(v);
            let dg_uv = dg.dist(u, v).expect("connected");
            for path in geodesics_between(mu.graph(), &dmu, u, twin) {
                if path.contains(&root) {
                    let ok = path.len() == 4
                        && path[2] == root
                        && matches!(mu.role_of(path[1]), VertexRole::Twin(_));
                    if ok {
                        report.mixed_root_detours += 1;
                    } else {
                        report.violations.push(format!(
                            "mixed pair ({u},{v}'): stray root path {path:?}"
                        ));
                    }
                } else {
                    let proj = project(&path);
                    let ok = distinct(&proj) && (proj.len() - 1) as u32 == dg_uv;
                    if ok {
                        report.mixed_expansions += 1;
                    } else {
                        report.violations.push(format!(
                            "mixed pair ({u},{v}'): stray geodesic {path:?}"
                        ));
                    }
                }
            }
        }
    }

    Ok(report)
}

// ===========================================================================
// tests
// ===========================================================================
