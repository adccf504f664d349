//! Family specs: the `name:params` mini-language used on the command line
//! (`cycle:7`, `multipartite:3,2,2`, `gd:4`, `spacedtree:2,[2,2],3`, ...).

use crate::CliError;
use gpmyc::families;
use gpmyc::graph::Graph;

/// Builds the graph named by a family spec.
///
/// Supported specs:
/// - `path:n`, `cycle:n`, `complete:n`, `star:n`, `knminus:n`
/// - `multipartite:r1,r2,...` (part sizes)
/// - `gd:d` (the abundant d-regular construction of order 3d−1)
/// - `join:a,d` (a disjoint edges joined to a clique on d−1 vertices)
/// - `spacedtree:w,[l1,...,lw],gap` (spine of w anchors, li leaves each,
///   gap edges between consecutive anchors)
/// - `randomtree:n,seed`, `random:n,p,seed`
pub fn build_family(spec: &str) -> Result<Graph, CliError> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("family spec `{spec}` needs a `name:params` form")))?;
    let bad = |e: families::FamilyError| CliError::Usage(format!("family `{spec}`: {e}"));
    match name {
        "path" => families::path(parse_one(spec, args)?).map_err(bad),
        "cycle" => families::cycle(parse_one(spec, args)?).map_err(bad),
        "complete" => families::complete(parse_one(spec, args)?).map_err(bad),
        "star" => families::star(parse_one(spec, args)?).map_err(bad),
        "knminus" => families::complete_minus_edge(parse_one(spec, args)?).map_err(bad),
        "gd" => families::abundant_regular(parse_one(spec, args)?).map_err(bad),
        "multipartite" => {
            let parts = parse_list(spec, args)?;
            families::complete_multipartite(&parts).map_err(bad)
        }
        "join" => {
            let [a, d] = parse_fixed::<2>(spec, args)?;
            families::join_alpha_k2(a, d).map_err(bad)
        }
        "randomtree" => {
            let [n, seed] = parse_fixed::<2>(spec, args)?;
            families::random_tree(n, seed as u64).map_err(bad)
        }
        "random" => {
            let (n, p, seed) = parse_random(spec, args)?;
            families::random_graph(n, p, seed).map_err(bad)
        }
        "spacedtree" => {
            let (w, leaves, gap) = parse_spaced_tree(spec, args)?;
            if leaves.len() != w {
                return Err(CliError::Usage(format!(
                    "family `{spec}`: expected {w} leaf counts, got {}",
                    leaves.len()
                )));
            }
            families::spaced_tree(w, &leaves, gap).map_err(bad)
        }
        _ => Err(CliError::Usage(format!("unknown family `{name}` in `{spec}`"))),
    }
}

fn parse_usize(spec: &str, text: &str) -> Result<usize, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("family `{spec}`: `{text}` is not a count")))
}

fn parse_one(spec: &str, args: &str) -> Result<usize, CliError> {
    parse_usize(spec, args)
}

fn parse_list(spec: &str, args: &str) -> Result<Vec<usize>, CliError> {
    args.split(',').map(|t| parse_usize(spec, t)).collect()
}

fn parse_fixed<const K: usize>(spec: &str, args: &str) -> Result<[usize; K], CliError> {
    let list = parse_list(spec, args)?;
    list.try_into()
        .map_err(|_| CliError::Usage(format!("family `{spec}`: expected {K} parameters")))
}

fn parse_random(spec: &str, args: &str) -> Result<(usize, f64, u64), CliError> {
    let parts: Vec<&str> = args.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("family `{spec}`: expected n,p,seed")));
    }
    let n = parse_usize(spec, parts[0])?;
    let p: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("family `{spec}`: `{}` is not a probability", parts[1])))?;
    let seed = parse_usize(spec, parts[2])? as u64;
    Ok((n, p, seed))
}

/// `w,[l1,...,lw],gap` — the bracketed list keeps the leaf counts visually
/// separate from the two scalar parameters.
fn parse_spaced_tree(spec: &str, args: &str) -> Result<(usize, Vec<usize>, usize), CliError> {
    let open = args.find('[');
    let close = args.rfind(']');
    let (Some(open), Some(close)) = (open, close) else {
        return Err(CliError::Usage(format!("family `{spec}`: expected w,[l1,...],gap")));
    };
    if close < open {
        return Err(CliError::Usage(format!("family `{spec}`: mismatched brackets")));
    }
    let w = parse_usize(spec, args[..open].trim_end_matches(','))?;
    let leaves = parse_list(spec, &args[open + 1..close])?;
    let gap = parse_usize(spec, args[close + 1..].trim_start_matches(','))?;
    Ok((w, leaves, gap))
}

// ===========================================================================
// tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_families_build() {
        assert_eq!(build_family("cycle:5").unwrap().order(), 5);
        assert_eq!(build_family("complete:4").unwrap().size(), 6);
        assert_eq!(build_family("star:6").unwrap().order(), 6);
        assert_eq!(build_family("knminus:5").unwrap().size(), 9);
        assert_eq!(build_family("gd:3").unwrap().order(), 8);
        assert_eq!(build_family("path:7").unwrap().size(), 6);
    }

    #[test]
    fn list_families_build() {
        let g = build_family("multipartite:3,2,2").unwrap();
        assert_eq!(g.order(), 7);
        let j = build_family("join:2,2").unwrap();
        assert_eq!(j.order(), 5);
    }

    #[test]
    fn spaced_tree_spec_builds() {
        let t = build_family("spacedtree:2,[2,2],3").unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(t.size(), 7);
    }

    #[test]
    fn seeded_specs_are_reproducible() {
        let a = build_family("random:8,0.5,42").unwrap();
        let b = build_family("random:8,0.5,42").unwrap();
        assert_eq!(a, b);
        let t = build_family("randomtree:9,7").unwrap();
        assert_eq!(t.size(), 8);
    }

    #[test]
    fn malformed_specs_are_usage_errors() {
        for bad in ["cycle", "cycle:x", "nosuch:3", "spacedtree:2,2,3", "join:2", "random:5,0.5"] {
            assert!(
                matches!(build_family(bad), Err(CliError::Usage(_))),
                "{bad} should be rejected"
            );
        }
    }
}
