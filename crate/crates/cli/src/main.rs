use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use domiperf::enumeration::{verify_chain, verify_corollaries, verify_theorem, Universe};
use domiperf::patterns::{find_embedding, EmbeddingMode};
use domiperf::perfection::{classify, search_minimal_imperfect};
use domiperf::{canonical_form, emit_graph6, Construction, Method, PatternName, VerificationReport};
use rayon::prelude::*;

mod input;
mod records;

use input::{read_graphs, Output};

/// Exact domination parameters and common domination perfection.
#[derive(Parser)]
#[command(name = "domiperf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Gamma2,
    Theorem,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Definition => Method::Definition,
            MethodArg::Gamma2 => Method::Gamma2,
            MethodArg::Theorem => Method::Theorem,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Theorem,
    Corollaries,
    Chain,
    All,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input file; standard input when omitted or `-`.
    input: Option<String>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// γ, i, α_c and α with witnesses, one JSON record per graph.
    Compute {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Decide perfection; exits 1 if any input graph is not perfect.
    Classify {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum, default_value = "theorem")]
        method: MethodArg,
    },
    /// Locate an induced (or plain) copy of a catalog graph.
    Find {
        #[command(flatten)]
        io: InputArgs,
        /// H1..H10, CLAW, P2..P7, C6, 2P3, 2P4.
        #[arg(long)]
        pattern: PatternName,
        /// Only require pattern edges to be present.
        #[arg(long)]
        subgraph: bool,
    },
    /// Apply a construction and print the resulting graph6 tokens.
    Construct {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
    },
    /// Exhaustive verification; exits 1 on any counterexample.
    Verify {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        output: Option<String>,
    },
    /// Minimal imperfect graphs of one order, as canonical graph6 tokens.
    SearchMinimal {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        output: Option<String>,
    },
}

fn parse_construction(s: &str) -> Result<Construction, String> {
    s.parse()
}

fn configure_workers() -> Result<()> {
    let Ok(raw) = std::env::var("DOMIPERF_WORKERS") else {
        return Ok(());
    };
    let workers: usize = raw.trim().parse().with_context(|| format!("DOMIPERF_WORKERS={raw:?} is not a count"))?;
    if workers == 0 {
        bail!("DOMIPERF_WORKERS must be positive");
    }
    rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    Ok(())
}

/// Ok(true) for success, Ok(false) for a mathematically negative result.
fn run(cli: Cli) -> Result<bool> {
    configure_workers()?;
    match cli.command {
        Command::Compute { io } => {
            let graphs = read_graphs(io.input.as_deref(), io.format)?;
            let lines = graphs.par_iter().map(records::compute).collect::<Result<Vec<_>>>()?;
            Output::open(io.output.as_deref())?.lines(&lines)?;
            Ok(true)
        }
        Command::Classify { io, method } => {
            let graphs = read_graphs(io.input.as_deref(), io.format)?;
            let method = Method::from(method);
            let verdicts = graphs
                .par_iter()
                .map(|r| {
                    let v = classify(&r.graph, method).with_context(|| format!("line {}", r.line))?;
                    Ok((v.perfect, records::verdict(r, &v)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let all_perfect = verdicts.iter().all(|(p, _)| *p);
            let lines: Vec<String> = verdicts.into_iter().map(|(_, l)| l).collect();
            Output::open(io.output.as_deref())?.lines(&lines)?;
            Ok(all_perfect)
        }
        Command::Find { io, pattern, subgraph } => {
            let graphs = read_graphs(io.input.as_deref(), io.format)?;
            let mode = if subgraph { EmbeddingMode::Subgraph } else { EmbeddingMode::Induced };
            let p = domiperf::Pattern::get(pattern);
            let lines = graphs
                .par_iter()
                .map(|r| records::embedding(r, p, find_embedding(&r.graph, p.graph(), mode).as_ref()))
                .collect::<Result<Vec<_>>>()?;
            Output::open(io.output.as_deref())?.lines(&lines)?;
            Ok(true)
        }
        Command::Construct { io, construction } => {
            let graphs = read_graphs(io.input.as_deref(), io.format)?;
            let lines = graphs
                .par_iter()
                .map(|r| {
                    let g = construction.apply(&r.graph).with_context(|| format!("line {}", r.line))?;
                    Ok(emit_graph6(&g)?)
                })
                .collect::<Result<Vec<_>>>()?;
            Output::open(io.output.as_deref())?.lines(&lines)?;
            Ok(true)
        }
        Command::Verify { order, suite, output } => {
            let report = verify(order, suite)?;
            Output::open(output.as_deref())?.lines(&[serde_json::to_string(&report)?])?;
            Ok(report.passed())
        }
        Command::SearchMinimal { order, output } => {
            let found = search_minimal_imperfect(order)?;
            let mut tokens = found.iter().map(|g| Ok(canonical_form(g)?.token)).collect::<Result<Vec<_>>>()?;
            tokens.sort();
            Output::open(output.as_deref())?.lines(&tokens)?;
            Ok(true)
        }
    }
}

fn verify(order: usize, suite: Suite) -> Result<VerificationReport> {
    Ok(match suite {
        Suite::Theorem => verify_theorem(order)?,
        Suite::Chain => verify_chain(order)?,
        Suite::Corollaries => verify_corollaries(order)?,
        Suite::All => {
            let start = std::time::Instant::now();
            let sections = vec![verify_theorem(order)?, verify_chain(order)?, verify_corollaries(order)?];
            let universe = Universe { suite: "all".into(), order_min: 1, order_max: order, class_filter: None };
            VerificationReport::aggregate(universe, sections, start.elapsed().as_millis())
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
