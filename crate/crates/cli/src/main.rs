//! `gpmyc` — general position numbers of graphs and their Mycielskians.
//!
//! Four subcommands: `gp` computes a single value, `check` runs the
//! verification suites, `bench` times the solver routes against each other,
//! and `report` renders saved records. Exit codes: 0 success, 1 verification
//! failure, 2 usage error, 3 cap exceeded, 4 I/O error.

use clap::{Args, Parser, Subcommand};
use gpmyc::bounds::closed_form;
use gpmyc::families;
use gpmyc::gp::{gp_brute, gp_number};
use gpmyc::graph::Graph;
use gpmyc::graph6::parse_graph6;
use gpmyc::mycielski::mycielskian;
use gpmyc::partition::{
    best_partition, gp_mycielskian_via_partition, gp_set_from_partition, PartitionError,
};
use gpmyc_cli::instance::build_family;
use gpmyc_cli::records::{to_json, Verdict};
use gpmyc_cli::report::{render, Format};
use gpmyc_cli::suites::{self, SuiteConfig, SuiteEntry, DEFAULT_SEED};
use gpmyc_cli::CliError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "gpmyc",
    about = "general position numbers of graphs and their Mycielskians",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the general position number of one instance.
    Gp(GpArgs),
    /// Run verification suites and emit pass/fail records.
    Check(CheckArgs),
    /// Time the solver routes against each other.
    Bench(BenchArgs),
    /// Render saved records as json, csv, or markdown.
    Report(ReportArgs),
}

#[derive(Args)]
struct GpArgs {
    /// Family spec such as cycle:7, multipartite:3,2,2, or spacedtree:2,[2,2],3.
    #[arg(long, conflicts_with = "graph6")]
    family: Option<String>,
    /// A graph6-encoded graph.
    #[arg(long)]
    graph6: Option<String>,
    /// Compute on the Mycielskian of the instance instead of the instance.
    #[arg(long)]
    mu: bool,
    /// Solver route: auto, brute, bb, partition, or closed.
    #[arg(long, default_value = "auto")]
    method: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite ids to run; empty or "all" runs the whole registry.
    suites: Vec<String>,
    /// Lower the per-suite sweep ceilings.
    #[arg(long)]
    max_n: Option<usize>,
    /// Seed for every randomized batch.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Replace the cubic census corpus with this graph6 file.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Directory holding the graph6 corpora.
    #[arg(long, default_value = "fixtures")]
    fixtures: PathBuf,
    /// Also write the records as JSON to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Base-graph orders to benchmark.
    #[arg(long, value_delimiter = ',', default_value = "5,7,9")]
    sizes: Vec<usize>,
    /// Solver routes to compare: brute, bb, partition.
    #[arg(long, value_delimiter = ',', default_value = "bb,partition")]
    methods: Vec<String>,
    /// Seed for the random instances.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct ReportArgs {
    /// Records file written by `check --out`.
    #[arg(long, default_value = "records.json")]
    records: PathBuf,
    /// Output format: json, csv, or md.
    #[arg(long, default_value = "json")]
    format: String,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gp(args) => cmd_gp(args),
        Command::Check(args) => cmd_check(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Report(args) => cmd_report(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("gpmyc: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

// ---------------------------------------------------------------------------
// gp
// ---------------------------------------------------------------------------

fn partition_err(e: PartitionError) -> CliError {
    match e {
        PartitionError::CapExceeded(_) => CliError::Cap(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn cmd_gp(args: GpArgs) -> Result<i32, CliError> {
    let (label, g) = match (&args.family, &args.graph6) {
        (Some(spec), None) => (spec.clone(), build_family(spec)?),
        (None, Some(text)) => (
            format!("graph6:{text}"),
            parse_graph6(text).map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --family or --graph6".to_string(),
            ))
        }
    };
    let target_label =
        if args.mu { format!("gp(mu({label}))") } else { format!("gp({label})") };
    if matches!(args.method.as_str(), "partition" | "closed") && !args.mu {
        return Err(CliError::Usage(format!(
            "method {} computes gp of the Mycielskian; pass --mu",
            args.method
        )));
    }

    let t0 = Instant::now();
    let mut line = match args.method.as_str() {
        "auto" | "bb" | "brute" => {
            let target = if args.mu {
                mycielskian(&g).map_err(|e| CliError::Cap(e.to_string()))?.graph().clone()
            } else {
                g.clone()
            };
            let (cert, name) = match args.method.as_str() {
                "brute" => (gp_brute(&target).map_err(|e| CliError::Cap(e.to_string()))?, "brute"),
                _ => (gp_number(&target), if args.method == "auto" { "auto(bb)" } else { "bb" }),
            };
            format!("{target_label} = {} method={name} witness={}", cert.value, cert.witness)
        }
        "partition" => {
            let value = gp_mycielskian_via_partition(&g).map_err(partition_err)?;
            let witness = best_partition(&g)
                .and_then(|p| gp_set_from_partition(&g, &p))
                .map_err(partition_err)?;
            format!("{target_label} = {value} method=partition witness={witness}")
        }
        "closed" => {
            let (family, value) = closed_form(&g).ok_or_else(|| {
                CliError::Usage("no closed form applies to this instance".to_string())
            })?;
            format!("{target_label} = {value} method=closed({family:?})")
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown method '{other}' (expected auto, brute, bb, partition, or closed)"
            )))
        }
    };
    let _ = write!(line, " wall_ms={}", t0.elapsed().as_millis());
    println!("{line}");
    Ok(0)
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn resolve_suites(ids: &[String]) -> Result<Vec<&'static SuiteEntry>, CliError> {
    if ids.is_empty() || (ids.len() == 1 && ids[0] == "all") {
        return Ok(suites::REGISTRY.iter().collect());
    }
    ids.iter()
        .map(|id| {
            suites::find(id).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown suite id '{id}'; run with no ids to execute the whole registry"
                ))
            })
        })
        .collect()
}

fn cmd_check(args: CheckArgs) -> Result<i32, CliError> {
    let entries = resolve_suites(&args.suites)?;
    let cfg = SuiteConfig {
        max_n: args.max_n,
        seed: args.seed,
        corpus: args.corpus.clone(),
        fixtures: args.fixtures.clone(),
    };
    let records = suites::run_suites(&entries, &cfg)?;
    for r in &records {
        println!("{}", r.line());
    }
    let failed = records.iter().filter(|r| r.verdict == Verdict::Fail).count();
    println!(
        "{} records, {} passed, {} failed.",
        records.len(),
        records.len() - failed,
        failed
    );
    if let Some(path) = &args.out {
        fs::write(path, to_json(&records))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// Caps per route, in base-graph order: brute scans subsets of mu(G) and
/// needs 2n+1 within the subset cap; the partition search walks 4^n
/// assignments of G.
fn check_bench_cap(method: &str, n: usize) -> Result<(), CliError> {
    let ok = match method {
        "brute" => 2 * n < gpmyc::gp::SUBSET_SOLVER_CAP,
        "partition" => n <= gpmyc::partition::PARTITION_SEARCH_CAP,
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(CliError::Cap(format!("method {method} cannot handle base order {n}")))
    }
}

fn bench_value(method: &str, g: &Graph) -> Result<usize, CliError> {
    match method {
        "bb" => {
            let mu = mycielskian(g).map_err(|e| CliError::Cap(e.to_string()))?;
            Ok(gp_number(mu.graph()).value)
        }
        "brute" => {
            let mu = mycielskian(g).map_err(|e| CliError::Cap(e.to_string()))?;
            Ok(gp_brute(mu.graph()).map_err(|e| CliError::Cap(e.to_string()))?.value)
        }
        "partition" => gp_mycielskian_via_partition(g).map_err(partition_err),
        other => Err(CliError::Usage(format!(
            "unknown method '{other}' (expected brute, bb, or partition)"
        ))),
    }
}

fn cmd_bench(args: BenchArgs) -> Result<i32, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut instances: Vec<(String, Graph)> = Vec::new();
    for &n in &args.sizes {
        if n < 4 {
            return Err(CliError::Usage(format!(
                "bench sizes start at 4 (cycle:{n} is complete or degenerate)"
            )));
        }
        for method in &args.methods {
            check_bench_cap(method, n)?;
        }
        instances.push((format!("cycle:{n}"), families::cycle(n).expect("n >= 4")));
        let (spec, g) = loop {
            let child = rng.random::<u32>() as u64;
            let g = families::random_graph(n, 0.5, child).expect("valid parameters");
            if g.is_connected() && !g.is_complete() {
                break (format!("random:{n},0.5,{child}"), g);
            }
        };
        instances.push((spec, g));
    }

    println!("instance,method,value,median_ms");
    let mut disagreement = false;
    for (spec, g) in &instances {
        let mut seen: Option<usize> = None;
        for method in &args.methods {
            let mut value = 0usize;
            let mut times: Vec<u128> = Vec::with_capacity(5);
            for _ in 0..5 {
                let t0 = Instant::now();
                value = bench_value(method, g)?;
                times.push(t0.elapsed().as_millis());
            }
            times.sort_unstable();
            println!("\"{spec}\",{method},{value},{}", times[2]);
            match seen {
                None => seen = Some(value),
                Some(prev) if prev != value => {
                    eprintln!("gpmyc: methods disagree on {spec}: {prev} vs {value}");
                    disagreement = true;
                }
                Some(_) => {}
            }
        }
    }
    Ok(if disagreement { 1 } else { 0 })
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

fn cmd_report(args: ReportArgs) -> Result<i32, CliError> {
    let format: Format = args.format.parse().map_err(CliError::Usage)?;
    let text = fs::read_to_string(&args.records)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.records.display())))?;
    let records = gpmyc_cli::records::from_json(&text)
        .map_err(|e| CliError::Io(format!("malformed records file: {e}")))?;

    let rendered = render(&records, format);
    match &args.out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(0)
}
