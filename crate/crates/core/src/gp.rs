//! Exact solvers for general position numbers.
//!
//! A set S is in general position when no three distinct members u, w, v
//! satisfy d(u,w) + d(w,v) = d(u,v), i.e. no member lies strictly inside a
//! geodesic between two others. The solvers below share precomputed exclusion
//! tables: `between(u, v)` collects the strict interiors of all u,v-geodesics
//! and `shadow(u, w)` the vertices x with w strictly inside some u,x-geodesic.
//! Extending a partial set then reduces to three bitset filters per candidate.
//!
//! All searches scan vertices in increasing index order and only replace an
//! incumbent on strict improvement, so every reported witness is the
//! lexicographically smallest optimum (compared as sorted vertex sequences).

use crate::graph::{DistMatrix, Graph, VertexSet};
use thiserror::Error;

/// Cap for the subset-exhaustive solvers (`gp_brute`, `enumerate_max_gp_sets`,
/// `alpha_gp`).
pub const SUBSET_SOLVER_CAP: usize = 22;

/// Cap for the independence-number search.
pub const INDEPENDENCE_CAP: usize = 40;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SolverError {
    #[error("{solver} is capped at {cap} vertices, got {n}")]
    CapExceeded { solver: &'static str, cap: usize, n: usize },
}

/// How a general position value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpMethod {
    Brute,
    BranchBound,
    Partition,
    ClosedForm,
}

/// An exact general position number plus a maximum witness set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpCertificate {
    pub value: usize,
    pub witness: VertexSet,
    pub method: GpMethod,
}

/// Whether `s` is in general position under the distances `d`.
pub fn is_general_position(d: &DistMatrix, s: VertexSet) -> bool {
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            for &w in &members {
                if w != u && w != v && d.strictly_between(u, w, v) {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Geodesic exclusion tables
// ---------------------------------------------------------------------------

pub struct GeodesicTables {
    n: usize,
    between: Vec<VertexSet>,
    shadow: Vec<VertexSet>,
}

impl GeodesicTables {
    pub fn new(g: &Graph, d: &DistMatrix) -> Self {
        let n = g.order();
        let mut between = vec![VertexSet::EMPTY; n * n];
        let mut shadow = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            for w in 0..n {
                if w == u {
                    continue;
                }
                for x in 0..n {
                    if x != u && x != w && d.strictly_between(u, w, x) {
                        between[u * n + x].insert(w);
                        shadow[u * n + w].insert(x);
                    }
                }
            }
        }
        GeodesicTables { n, between, shadow }
    }

    /// Vertices strictly inside some `u,v`-geodesic.
    #[inline]
    pub fn between(&self, u: usize, v: usize) -> VertexSet {
        self.between[u * self.n + v]
    }

    /// Vertices `x` such that `w` is strictly inside some `u,x`-geodesic.
    #[inline]
    pub fn shadow(&self, u: usize, w: usize) -> VertexSet {
        self.shadow[u * self.n + w]
    }
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

/// Exact general position number by branch and bound over the exclusion
/// tables. No order cap; instances in this crate stay well inside the
/// tractable range (Mycielskians of desk-scale graphs).
pub fn gp_number(g: &Graph) -> GpCertificate {
    let d = g.distances();
    let t = GeodesicTables::new(g, &d);
    let mut search = GpSearch { t: &t, best: 0, witness: VertexSet::EMPTY };
    let mut chosen = Vec::with_capacity(g.order());
    search.dfs(&mut chosen, VertexSet::EMPTY, g.vertex_set());
    GpCertificate { value: search.best, witness: search.witness, method: GpMethod::BranchBound }
}

struct GpSearch<'a> {
    t: &'a GeodesicTables,
    best: usize,
    witness: VertexSet,
}

impl GpSearch<'_> {
    /// `cands` holds exactly the vertices beyond the last chosen index whose
    /// addition keeps the chosen set in general position.
    fn dfs(&mut self, chosen: &mut Vec<usize>, chosen_mask: VertexSet, cands: VertexSet) {
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.witness = chosen_mask;
        }
        let mut rest = cands;
        loop {
            // `rest` only shrinks, so the first failure ends the whole node.
            if chosen.len() + rest.len() <= self.best {
                return;
            }
            let Some(x) = rest.min() else { return };
            rest.remove(x);
            let next = extend_candidates(self.t, chosen, chosen_mask, rest, x);
            chosen.push(x);
            self.dfs(chosen, chosen_mask | VertexSet::singleton(x), next);
            chosen.pop();
        }
    }
}

/// Candidates from `rest` that remain compatible once `x` joins `chosen`:
/// drops y strictly inside a (u,x)-geodesic, y behind x as seen from some
/// chosen u, and y whose (x,y)-geodesics swallow a chosen vertex.
#[inline]
fn extend_candidates(
    t: &GeodesicTables,
    chosen: &[usize],
    chosen_mask: VertexSet,
    rest: VertexSet,
    x: usize,
) -> VertexSet {
    let mut kill = VertexSet::EMPTY;
    for &u in chosen {
        kill |= t.between(u, x);
        kill |= t.shadow(u, x);
    }
    let mut next = VertexSet::EMPTY;
    for y in (rest - kill).iter() {
        if !t.between(x, y).intersects(chosen_mask) {
            next.insert(y);
        }
    }
    next
}

// ---------------------------------------------------------------------------
// Exhaustive reference solver
// ---------------------------------------------------------------------------

/// Exact general position number by scanning k-subsets in decreasing k and
/// lexicographic order within each k; the first hit is the optimum with the
/// lexicographically smallest witness. Oracle for `gp_number`.
pub fn gp_brute(g: &Graph) -> Result<GpCertificate, SolverError> {
    let n = g.order();
    if n > SUBSET_SOLVER_CAP {
        return Err(SolverError::CapExceeded { solver: "gp_brute", cap: SUBSET_SOLVER_CAP, n });
    }
    let d = g.distances();
    let t = GeodesicTables::new(g, &d);
    for k in (1..=n).rev() {
        if let Some(mask) = first_gp_combination(&t, n, k) {
            return Ok(GpCertificate { value: k, witness: mask, method: GpMethod::Brute });
        }
    }
    unreachable!("singletons are always in general position");
}

fn first_gp_combination(t: &GeodesicTables, n: usize, k: usize) -> Option<VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask: VertexSet = idx.iter().copied().collect();
        let mut ok = true;
        'pairs: for (i, &u) in idx.iter().enumerate() {
            for &v in &idx[i + 1..] {
                if t.between(u, v).intersects(mask) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            return Some(mask);
        }
        // Advance to the next k-combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every maximum general position set, sorted lexicographically.
pub fn enumerate_max_gp_sets(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    let n = g.order();
    if n > SUBSET_SOLVER_CAP {
        return Err(SolverError::CapExceeded {
            solver: "enumerate_max_gp_sets",
            cap: SUBSET_SOLVER_CAP,
            n,
        });
    }
    let target = gp_number(g).value;
    let d = g.distances();
    let t = GeodesicTables::new(g, &d);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(target);
    collect_gp_sets(&t, &mut chosen, VertexSet::EMPTY, g.vertex_set(), target, &mut out);
    out.sort_by(|a, b| a.lex_cmp(*b));
    Ok(out)
}

fn collect_gp_sets(
    t: &GeodesicTables,
    chosen: &mut Vec<usize>,
    chosen_mask: VertexSet,
    cands: VertexSet,
    target: usize,
    out: &mut Vec<VertexSet>,
) {
    if chosen.len() == target {
        out.push(chosen_mask);
        return;
    }
    let mut rest = cands;
    loop {
        if chosen.len() + rest.len() < target {
            return;
        }
        let Some(x) = rest.min() else { return };
        rest.remove(x);
        let next = extend_candidates(t, chosen, chosen_mask, rest, x);
        chosen.push(x);
        collect_gp_sets(t, chosen, chosen_mask | VertexSet::singleton(x), next, target, out);
        chosen.pop();
    }
}

// ---------------------------------------------------------------------------
// Independence variants
// ---------------------------------------------------------------------------

/// Independence number with a lexicographically smallest maximum witness.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet), SolverError> {
    let n = g.order();
    if n > INDEPENDENCE_CAP {
        return Err(SolverError::CapExceeded {
            solver: "independence_number",
            cap: INDEPENDENCE_CAP,
            n,
        });
    }
    let mut search = IndSearch { g, best: 0, witness: VertexSet::EMPTY };
    search.dfs(0, VertexSet::EMPTY, g.vertex_set());
    Ok((search.best, search.witness))
}

struct IndSearch<'a> {
    g: &'a Graph,
    best: usize,
    witness: VertexSet,
}

impl IndSearch<'_> {
    fn dfs(&mut self, chosen_len: usize, chosen_mask: VertexSet, cands: VertexSet) {
        if chosen_len > self.best {
            self.best = chosen_len;
            self.witness = chosen_mask;
        }
        let mut rest = cands;
        loop {
            if chosen_len + rest.len() <= self.best {
                return;
            }
            let Some(x) = rest.min() else { return };
            rest.remove(x);
            let next = rest - self.g.neighbors(x);
            self.dfs(chosen_len + 1, chosen_mask | VertexSet::singleton(x), next);
        }
    }
}

/// Largest size of a set that is independent and in general position at once,
/// with a lexicographically smallest witness.
pub fn alpha_gp(g: &Graph) -> Result<(usize, VertexSet), SolverError> {
    let n = g.order();
    if n > SUBSET_SOLVER_CAP {
        return Err(SolverError::CapExceeded { solver: "alpha_gp", cap: SUBSET_SOLVER_CAP, n });
    }
    let d = g.distances();
    let t = GeodesicTables::new(g, &d);
    let mut search = AlphaGpSearch { g, t: &t, best: 0, witness: VertexSet::EMPTY };
    let mut chosen = Vec::with_capacity(n);
    search.dfs(&mut chosen, VertexSet::EMPTY, g.vertex_set());
    Ok((search.best, search.witness))
}

struct AlphaGpSearch<'a> {
    g: &'a Graph,
    t: &'a GeodesicTables,
    best: usize,
    witness: VertexSet,
}

impl AlphaGpSearch<'_> {
    fn dfs(&mut self, chosen: &mut Vec<usize>, chosen_mask: VertexSet, cands: VertexSet) {
        if chosen.len() > self.best {
            self.best = chosen.len();
            self.witness = chosen_mask;
        }
        let mut rest = cands;
        loop {
            if chosen.len() + rest.len() <= self.best {
                return;
            }
            let Some(x) = rest.min() else { return };
            rest.remove(x);
            let next =
                extend_candidates(self.t, chosen, chosen_mask, rest, x) - self.g.neighbors(x);
            chosen.push(x);
            self.dfs(chosen, chosen_mask | VertexSet::singleton(x), next);
            chosen.pop();
        }
    }
}

// ===========================================================================
// tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn petersen() -> Graph {
        Graph::new(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn general_position_predicate_on_the_five_cycle() {
        let g = families::cycle(5).unwrap();
        let d = g.distances();
        assert!(is_general_position(&d, [0, 1, 3].into_iter().collect()));
        // 1 lies on the geodesic 0-1-2.
        assert!(!is_general_position(&d, [0, 1, 2].into_iter().collect()));
        assert!(is_general_position(&d, [0, 2].into_iter().collect()));
        assert!(is_general_position(&d, VertexSet::EMPTY));
        assert!(is_general_position(&d, VertexSet::singleton(4)));
    }

    #[test]
    fn pairs_are_always_in_general_position() {
        for seed in 0..20 {
            let g = families::random_graph(9, 0.4, seed).unwrap();
            let d = g.distances();
            for u in 0..9 {
                for v in (u + 1)..9 {
                    assert!(is_general_position(&d, [u, v].into_iter().collect()));
                }
            }
        }
    }

    /// Values frozen from the exhaustive solver on small closed families.
    #[test]
    fn known_gp_values() {
        let cases: Vec<(Graph, usize)> = vec![
            (families::cycle(4).unwrap(), 2),
            (families::cycle(5).unwrap(), 3),
            (families::cycle(7).unwrap(), 3),
            (families::path(2).unwrap(), 2),
            (families::path(6).unwrap(), 2),
            (families::complete(5).unwrap(), 5),
            (families::star(6).unwrap(), 5),
            (families::complete_minus_edge(4).unwrap(), 3),
        ];
        for (g, expected) in cases {
            let bb = gp_number(&g);
            let brute = gp_brute(&g).unwrap();
            assert_eq!(bb.value, expected, "branch and bound on {g:?}");
            assert_eq!(brute.value, expected, "brute on {g:?}");
            assert_eq!(bb.witness, brute.witness, "witness tie-break on {g:?}");
            assert_eq!(bb.method, GpMethod::BranchBound);
            assert_eq!(brute.method, GpMethod::Brute);
            let d = g.distances();
            assert!(is_general_position(&d, bb.witness));
            assert_eq!(bb.witness.len(), expected);
        }
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        // gp(C_5) = 3 and {0,1,2} fails, so the witness must be {0,1,3}.
        let c5 = families::cycle(5).unwrap();
        assert_eq!(gp_number(&c5).witness.to_vec(), vec![0, 1, 3]);
        assert_eq!(gp_brute(&c5).unwrap().witness.to_vec(), vec![0, 1, 3]);
        // K_4 minus (0,1): the clique side {2,3} plus one of {0,1}.
        let g = families::complete_minus_edge(4).unwrap();
        assert_eq!(gp_number(&g).witness.to_vec(), vec![0, 2, 3]);
    }

    #[test]
    fn petersen_gp_number() {
        let g = petersen();
        let bb = gp_number(&g);
        let brute = gp_brute(&g).unwrap();
        assert_eq!(bb.value, brute.value);
        assert_eq!(bb.witness, brute.witness);
        assert_eq!(bb.value, 6);
    }

    #[test]
    fn brute_agrees_with_branch_and_bound_on_random_graphs() {
        for n in 1..=9 {
            for seed in 0..20 {
                let g = families::random_graph(n, 0.35, 7000 + seed * 31 + n as u64).unwrap();
                let bb = gp_number(&g);
                let brute = gp_brute(&g).unwrap();
                assert_eq!(bb.value, brute.value, "{g:?}");
                assert_eq!(bb.witness, brute.witness, "{g:?}");
            }
        }
    }

    #[test]
    fn downward_closure_of_witnesses() {
        for seed in 0..10 {
            let g = families::random_graph(10, 0.4, 99 + seed).unwrap();
            let d = g.distances();
            let w = gp_number(&g).witness;
            let members = w.to_vec();
            // Every subset of a general position set stays in general position.
            for mask in 0u32..1 << members.len() {
                let sub: VertexSet = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                assert!(is_general_position(&d, sub));
            }
        }
    }

    #[test]
    fn enumeration_finds_every_maximum_set() {
        // In C_4 every pair is maximum: six sets.
        let c4 = families::cycle(4).unwrap();
        let sets = enumerate_max_gp_sets(&c4).unwrap();
        assert_eq!(sets.len(), 6);
        assert_eq!(sets[0].to_vec(), vec![0, 1]);
        assert_eq!(sets[5].to_vec(), vec![2, 3]);
        // Lexicographic output order.
        for w in sets.windows(2) {
            assert_eq!(w[0].lex_cmp(w[1]), std::cmp::Ordering::Less);
        }

        assert_eq!(
            enumerate_max_gp_sets(&families::path(2).unwrap()).unwrap(),
            vec![[0, 1].into_iter().collect::<VertexSet>()]
        );

        // Cross-check count against a direct subset sweep.
        for seed in 0..10 {
            let g = families::random_graph(8, 0.4, 500 + seed).unwrap();
            let d = g.distances();
            let value = gp_number(&g).value;
            let mut expected = Vec::new();
            for mask in 0u32..1 << 8 {
                let s = VertexSet::from_bits(mask as u128);
                if s.len() == value && is_general_position(&d, s) {
                    expected.push(s);
                }
            }
            expected.sort_by(|a, b| a.lex_cmp(*b));
            assert_eq!(enumerate_max_gp_sets(&g).unwrap(), expected, "{g:?}");
        }
    }

    #[test]
    fn independence_number_cases() {
        let brute_alpha = |g: &Graph| -> usize {
            let n = g.order();
            let mut best = 0;
            for mask in 0u32..1 << n {
                let s = VertexSet::from_bits(mask as u128);
                let ok = s.iter().all(|u| !g.neighbors(u).intersects(s));
                if ok {
                    best = best.max(s.len());
                }
            }
            best
        };
        assert_eq!(independence_number(&families::cycle(5).unwrap()).unwrap().0, 2);
        assert_eq!(independence_number(&families::cycle(7).unwrap()).unwrap().0, 3);
        assert_eq!(independence_number(&petersen()).unwrap().0, 4);
        assert_eq!(independence_number(&families::complete(6).unwrap()).unwrap().0, 1);
        let (a, w) = independence_number(&families::star(7).unwrap()).unwrap();
        assert_eq!(a, 6);
        assert_eq!(w.to_vec(), vec![1, 2, 3, 4, 5, 6]);
        for seed in 0..20 {
            let g = families::random_graph(11, 0.3, 42 + seed).unwrap();
            let (alpha, w) = independence_number(&g).unwrap();
            assert_eq!(alpha, brute_alpha(&g), "{g:?}");
            assert!(w.iter().all(|u| !g.neighbors(u).intersects(w)));
            assert_eq!(w.len(), alpha);
        }
    }

    #[test]
    fn alpha_gp_cases() {
        // Independent general position sets in C_5 peak at opposite pairs.
        assert_eq!(alpha_gp(&families::cycle(5).unwrap()).unwrap().0, 2);
        assert_eq!(alpha_gp(&families::complete(5).unwrap()).unwrap().0, 1);
        let (a, w) = alpha_gp(&families::star(6).unwrap()).unwrap();
        assert_eq!(a, 5);
        assert_eq!(w.to_vec(), vec![1, 2, 3, 4, 5]);
        // alpha_gp is bounded by both relaxations it combines.
        for seed in 0..20 {
            let g = families::random_graph(10, 0.35, 1234 + seed).unwrap();
            let d = g.distances();
            let (agp, w) = alpha_gp(&g).unwrap();
            assert!(agp <= independence_number(&g).unwrap().0);
            assert!(agp <= gp_number(&g).value);
            assert!(is_general_position(&d, w));
            assert!(w.iter().all(|u| !g.neighbors(u).intersects(w)));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let big = Graph::new(23, &[]).unwrap();
        assert!(matches!(gp_brute(&big), Err(SolverError::CapExceeded { solver: "gp_brute", .. })));
        assert!(matches!(alpha_gp(&big), Err(SolverError::CapExceeded { .. })));
        assert!(matches!(enumerate_max_gp_sets(&big), Err(SolverError::CapExceeded { .. })));
        let bigger = Graph::new(41, &[]).unwrap();
        assert!(matches!(independence_number(&bigger), Err(SolverError::CapExceeded { .. })));
        // At the cap everything still runs.
        assert_eq!(gp_brute(&Graph::new(22, &[]).unwrap()).unwrap().value, 22);
    }

    #[test]
    fn disconnected_graphs_have_no_cross_component_geodesics() {
        // Two components: every vertex pair across them is free, so the whole
        // vertex set of 2 K_2 is in general position.
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(gp_number(&g).value, 4);
        assert_eq!(gp_brute(&g).unwrap().value, 4);
    }
}
