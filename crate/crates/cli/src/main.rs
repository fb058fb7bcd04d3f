//! `fixsub`: generate graphs, report Hamiltonian orbit structure, and run
//! the claim verification suites.
//!
//! Exit codes: 0 when every checked claim passes, 1 when any fails, 2 for
//! usage errors and infeasible ranges.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fixsub::fixing::in_f_ham;
use fixsub::graph::{
    encode_edge_list, encode_graph6, heawood, line_k33, make_circulant, make_complete, make_complete_bipartite,
    make_cycle, make_lcf, parse_graph, tutte_8cage,
};
use fixsub::petersen::PetersenGraph;
use fixsub::verify::{self, Status, Suite, Summary, VerifyOptions};
use fixsub::{Error, Graph};

const FAMILIES: &str =
    "cycle N | complete N | bipartite A B | circulant N D... | gp N K | lcf N J... | heawood | cage8 | line-k33";

#[derive(Parser)]
#[command(name = "fixsub", version, about = "Fixing subgraphs and Hamiltonian cycle multiplicities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a named family.
    Graphgen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Print the Hamiltonian orbit report of a graph as JSON.
    Report {
        #[command(flatten)]
        family: FamilyArgs,
        /// Read the graph (graph6 or edge list) from a file, `-` for stdin.
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(help = FAMILIES)]
    name: Option<String>,
    #[arg(allow_negative_numbers = true)]
    params: Vec<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite, help = "thm1 | thm6 | thm7 | thm8 | heawood | cage8 | dodecahedron | claim | lk33 | exceptional | all")]
    suite: Suite,
    /// Inclusive range of n, written a:b.
    #[arg(long, value_parser = verify::parse_range)]
    range: Option<std::ops::RangeInclusive<usize>>,
    /// Petersen parameter for thm7 (1 or 2).
    #[arg(long)]
    k: Option<usize>,
    /// Include the expensive instances.
    #[arg(long)]
    slow: bool,
    /// Worker threads; affects speed only.
    #[arg(long, env = "FIXSUB_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Omit runtime_ms from JSON output.
    #[arg(long)]
    no_timings: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn usize_param(params: &[i64], i: usize, family: &str) -> Result<usize, String> {
    let v = params.get(i).ok_or_else(|| format!("{family} needs more parameters ({FAMILIES})"))?;
    usize::try_from(*v).map_err(|_| format!("{family}: parameter {v} must be non-negative"))
}

fn expect_len(params: &[i64], len: usize, family: &str) -> Result<(), String> {
    if params.len() == len {
        Ok(())
    } else {
        Err(format!("{family} takes {len} parameter(s), got {}", params.len()))
    }
}

fn build_family(name: &str, params: &[i64]) -> Result<Graph, String> {
    let g = match name {
        "cycle" | "complete" => {
            expect_len(params, 1, name)?;
            let n = usize_param(params, 0, name)?;
            if name == "cycle" {
                make_cycle(n)
            } else {
                make_complete(n)
            }
        }
        "bipartite" => {
            expect_len(params, 2, name)?;
            make_complete_bipartite(usize_param(params, 0, name)?, usize_param(params, 1, name)?)
        }
        "circulant" => make_circulant(usize_param(params, 0, name)?, &params[1..]),
        "gp" => {
            expect_len(params, 2, name)?;
            return PetersenGraph::new(usize_param(params, 0, name)?, usize_param(params, 1, name)?)
                .map(|pg| pg.graph().clone())
                .map_err(|e| e.to_string());
        }
        "lcf" => make_lcf(usize_param(params, 0, name)?, &params[1..]),
        "heawood" | "cage8" | "line-k33" => {
            expect_len(params, 0, name)?;
            Ok(match name {
                "heawood" => heawood(),
                "cage8" => tutte_8cage(),
                _ => line_k33(),
            })
        }
        other => return Err(format!("unknown family {other:?} (expected {FAMILIES})")),
    };
    g.map_err(|e| e.to_string())
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| e.to_string())?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    parse_graph(&text).map_err(|e| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("fixsub: {msg}");
    ExitCode::from(2)
}

fn graphgen(family: &FamilyArgs, format: GraphFormat) -> ExitCode {
    let Some(name) = &family.name else {
        return usage(format!("graphgen needs a family ({FAMILIES})"));
    };
    match build_family(name, &family.params) {
        Ok(g) => {
            match format {
                GraphFormat::Graph6 => println!("{}", encode_graph6(&g)),
                GraphFormat::Edgelist => print!("{}", encode_edge_list(&g)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn report(family: &FamilyArgs, file: Option<&PathBuf>) -> ExitCode {
    let graph = match (file, &family.name) {
        (Some(path), _) => read_graph(path),
        (None, Some(name)) => build_family(name, &family.params),
        (None, None) => Err("report needs a family or --file".to_string()),
    };
    let g = match graph {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let r = match in_f_ham(&g) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let petersen = match (family.name.as_deref(), family.params.as_slice()) {
        (Some("gp"), &[n, k]) => PetersenGraph::new(n as usize, k as usize).ok(),
        _ => None,
    };
    let json = match &petersen {
        Some(pg) => r.to_json_with(|c| pg.rim_signature(c).map(|s| s.to_string()).unwrap_or_default()),
        None => r.to_json(),
    };
    println!("{}", serde_json::to_string_pretty(&json).expect("report serializes"));
    ExitCode::SUCCESS
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let opts = VerifyOptions {
        range: args.range.clone(),
        k: args.k,
        slow: args.slow,
        jobs: args.jobs.unwrap_or_else(verify::default_jobs),
    };
    let results = match verify::run(args.suite, &opts) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let summary = Summary::of(&results);
    match args.format {
        OutputFormat::Json => {
            let json = verify::to_json(&results, !args.no_timings);
            println!("{}", serde_json::to_string_pretty(&json).expect("results serialize"));
        }
        OutputFormat::Text => {
            for r in &results {
                println!("{} {} computed={} expected={}", r.status, r.claim_id, r.computed, r.expected);
                if r.status == Status::Fail {
                    println!("    {}", r.statement);
                }
            }
        }
    }
    eprintln!("{}: {} passed, {} failed, {} report-only", args.suite, summary.pass, summary.fail, summary.report_only);
    if summary.fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Graphgen { family, format } => graphgen(family, *format),
        Command::Report { family, file } => report(family, file.as_ref()),
        Command::Verify(args) => run_verify(args),
    }
}
