mod config;
mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tensorcirc::{
    cartesian, find_tensor_root_over_k2, is_circulant_with, tensor, verify_suite, Evidence, Graph,
    Verdict,
};

use config::{CliConfig, OutputFormat};
use input::load_graph;

#[derive(Parser)]
#[command(
    name = "tensorcirc",
    version,
    about = "Circulant graphs, their products, and circulance checks"
)]
struct Cli {
    /// Largest connected component handed to the exhaustive search (at most 24);
    /// for `verify`, caps every family's graph order as well.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Seed for sampled properties in `verify`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Print only failures and errors.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph of a literal such as "C 4 {2}", "K 3", "K* 2" or "K 3,3".
    Build {
        literal: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Tensor or Cartesian product of two graphs.
    Product {
        kind: ProductKind,
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Decide circulance of a graph (file, literal, or - for stdin).
    Check { graph: String },
    /// Find H with K2 ⊗ H isomorphic to a bipartite graph.
    Root { graph: String },
    /// Run the verification suite.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Tensor,
    Cartesian,
}

/// Writes to stdout; a reader that hung up early is not an error.
fn say(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn emit(output: Option<&str>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path}")),
        None => say(text),
    }
}

fn build(config: &CliConfig, literal: &str, output: Option<&str>) -> Result<ExitCode> {
    let graph = input::parse_literal(literal)?
        .with_context(|| format!("not a graph literal: {literal:?}"))?;
    match config.output_format {
        OutputFormat::Text => emit(output, &graph.to_text())?,
        OutputFormat::Json => emit(output, &format!("{}\n", graph_json(&graph)))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({ "order": g.order(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>() })
}

fn product(
    config: &CliConfig,
    kind: ProductKind,
    left: &str,
    right: &str,
    output: Option<&str>,
) -> Result<ExitCode> {
    let (a, b) = (load_graph(left)?, load_graph(right)?);
    let g = match kind {
        ProductKind::Tensor => tensor(&a, &b),
        ProductKind::Cartesian => cartesian(&a, &b)?,
    };
    match config.output_format {
        OutputFormat::Text => emit(output, &g.to_text())?,
        OutputFormat::Json => emit(output, &format!("{}\n", graph_json(&g)))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Circulant { witness, spec } => format!("CIRCULANT {spec}\nwitness {witness}\n"),
        Verdict::NotCirculant(Evidence::Exhausted { order }) => {
            format!("NOT CIRCULANT (exhausted, n={order})\n")
        }
        Verdict::NotCirculant(Evidence::Certificate(c)) => {
            format!("NOT CIRCULANT (certificate: {c})\n")
        }
    }
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    match v {
        Verdict::Circulant { witness, spec } => json!({
            "circulant": true,
            "spec": spec.to_string(),
            "witness": witness.to_string(),
        }),
        Verdict::NotCirculant(Evidence::Exhausted { order }) => json!({
            "circulant": false,
            "evidence": "exhausted",
            "order": order,
        }),
        Verdict::NotCirculant(Evidence::Certificate(c)) => json!({
            "circulant": false,
            "evidence": "certificate",
            "certificate": c,
        }),
    }
}

fn check(config: &CliConfig, arg: &str) -> Result<ExitCode> {
    let g = load_graph(arg)?;
    let verdict = is_circulant_with(&g, config.recognition())?;
    match config.output_format {
        OutputFormat::Text => say(&verdict_text(&verdict))?,
        OutputFormat::Json => say(&format!("{}\n", verdict_json(&verdict)))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn root(config: &CliConfig, arg: &str) -> Result<ExitCode> {
    let g = load_graph(arg)?;
    let found = find_tensor_root_over_k2(&g)?;
    match (config.output_format, &found) {
        (OutputFormat::Text, Some(h)) => say(&h.to_text())?,
        (OutputFormat::Text, None) => say("NO ROOT\n")?,
        (OutputFormat::Json, Some(h)) => say(&format!("{}\n", json!({ "root": graph_json(h) })))?,
        (OutputFormat::Json, None) => say(&format!("{}\n", json!({ "root": null })))?,
    }
    Ok(if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify(config: &CliConfig) -> Result<ExitCode> {
    let mut bounds = config.suite_bounds.clone();
    bounds.seed = config.seed;
    let report = verify_suite(&bounds);
    match config.output_format {
        OutputFormat::Text => {
            for r in report.results.iter().filter(|r| !config.quiet || !r.passed) {
                say(&format!("{r}\n"))?;
            }
        }
        OutputFormat::Json => say(&format!("{}\n", serde_json::to_string(&report)?))?,
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let config = CliConfig::new(cli.max_order, cli.seed, cli.format, cli.quiet)?;
    match &cli.command {
        Command::Build { literal, output } => build(&config, literal, output.as_deref()),
        Command::Product {
            kind,
            left,
            right,
            output,
        } => product(&config, *kind, left, right, output.as_deref()),
        Command::Check { graph } => check(&config, graph),
        Command::Root { graph } => root(&config, graph),
        Command::Verify => verify(&config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
