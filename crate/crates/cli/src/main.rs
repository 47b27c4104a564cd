//! `vel`: vertex energies, splitting/shadow graph construction and theorem checks.
//!
//! Exit codes: 0 on success (and when every verification passes), 1 when a
//! verification fails, 2 for usage and input errors.

mod output;

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vel_core::derived::vertex_labels;
use vel_core::verify::{default_corpus, summarize, Verifier, DEFAULT_PARTITION_TOL};
use vel_core::{
    m_shadow, m_splitting, parse_edge_list, parse_graph6, run_suite, write_edge_list, write_graph6,
    CorpusEntry, Graph, SuiteConfig, DEFAULT_EIG_TOL,
};

use output::{csv_field, fmt_num, OutputFormat, OutputRecord};

const EIG_TOL_ENV: &str = "VEL_EIG_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "vel",
    version,
    about = "Vertex energies of graphs and their splitting and shadow graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-vertex energies and total graph energy.
    Energy(InputArgs),
    /// Build the m-splitting or m-shadow graph.
    Derive(DeriveArgs),
    /// Check the vertex-energy laws numerically.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph file, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(Debug, Args)]
struct DeriveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    op: DeriveOp,
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Encoding of the derived graph.
    #[arg(long, value_enum, default_value = "edgelist")]
    emit: GraphFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Graph file, or "-" for standard input. Ignored with --corpus.
    input: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
    /// Use a built-in corpus instead of an input graph.
    #[arg(long, value_enum)]
    corpus: Option<CorpusName>,
    #[arg(long, default_value_t = 4)]
    m_max: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

impl GraphFormat {
    fn name(self) -> &'static str {
        match self {
            GraphFormat::Edgelist => "edgelist",
            GraphFormat::Graph6 => "graph6",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeriveOp {
    Splitting,
    Shadow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorpusName {
    Default,
}

/// A finished command: what to print and how to exit.
struct Rendered {
    stdout: String,
    code: u8,
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
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.stdout);
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Rendered> {
    let eig_tol = eig_tol_from_env()?;
    match &cli.command {
        Command::Energy(args) => cmd_energy(args, eig_tol, cli.output),
        Command::Derive(args) => cmd_derive(args, cli.output),
        Command::Verify(args) => cmd_verify(args, eig_tol, cli.output),
    }
}

fn eig_tol_from_env() -> anyhow::Result<f64> {
    match std::env::var(EIG_TOL_ENV) {
        Err(_) => Ok(DEFAULT_EIG_TOL),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => bail!("{EIG_TOL_ENV} must be a positive number, got {raw:?}"),
        },
    }
}

fn read_source(input: &str) -> anyhow::Result<String> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))
    }
}

fn load_graph(input: &str, format: GraphFormat) -> anyhow::Result<Graph> {
    let text = read_source(input)?;
    let parsed = match format {
        GraphFormat::Edgelist => parse_edge_list(&text),
        GraphFormat::Graph6 => parse_graph6(&text),
    };
    parsed.map_err(|e| anyhow!("parse error in {input} ({}): {e}", format.name()))
}

fn encode(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g) + "\n",
    }
}

fn render(
    record: &OutputRecord,
    format: OutputFormat,
    text: impl Fn(&Value) -> String,
    csv: impl Fn(&Value) -> String,
) -> String {
    match format {
        OutputFormat::Json => record.to_json() + "\n",
        OutputFormat::Text => text(&record.results),
        OutputFormat::Csv => csv(&record.results),
    }
}

fn cmd_energy(args: &InputArgs, eig_tol: f64, out: OutputFormat) -> anyhow::Result<Rendered> {
    let g = load_graph(&args.input, args.format)?;
    let analysis = Verifier::new(eig_tol).analyze(&g)?;
    let record = OutputRecord::new(
        "energy",
        json!({ "source": args.input, "format": args.format.name(), "eig_tol": eig_tol }),
        json!({
            "n": g.vertex_count(),
            "edge_count": g.edge_count(),
            "vertex_energies": analysis.vertex_energies.values(),
            "total_energy": analysis.energy,
            "eigenvalues": analysis.spectrum.eigenvalues(),
        }),
    );
    let stdout = render(
        &record,
        out,
        |r| {
            let mut s = format!(
                "n = {}, edges = {}\nvertex  energy\n",
                r["n"], r["edge_count"]
            );
            for (k, e) in r["vertex_energies"]
                .as_array()
                .into_iter()
                .flatten()
                .enumerate()
            {
                let _ = writeln!(s, "{k:<7} {}", fmt_num(e));
            }
            let _ = writeln!(s, "total   {}", fmt_num(&r["total_energy"]));
            s
        },
        |r| {
            let total = fmt_num(&r["total_energy"]);
            let mut s = String::from("vertex,energy,graph_energy\n");
            for (k, e) in r["vertex_energies"]
                .as_array()
                .into_iter()
                .flatten()
                .enumerate()
            {
                let _ = writeln!(s, "{k},{},{total}", fmt_num(e));
            }
            s
        },
    );
    Ok(Rendered { stdout, code: 0 })
}

fn cmd_derive(args: &DeriveArgs, out: OutputFormat) -> anyhow::Result<Rendered> {
    let g = load_graph(&args.input.input, args.input.format)?;
    let (derived, copies) = match args.op {
        DeriveOp::Splitting => (m_splitting(&g, args.m)?, args.m + 1),
        DeriveOp::Shadow => (m_shadow(&g, args.m)?, args.m),
    };
    let op = match args.op {
        DeriveOp::Splitting => "splitting",
        DeriveOp::Shadow => "shadow",
    };
    let labels: Vec<Value> = vertex_labels(g.vertex_count(), copies)
        .into_iter()
        .enumerate()
        .map(|(index, l)| json!({ "index": index, "copy_index": l.copy_index, "base_index": l.base_index }))
        .collect();
    let record = OutputRecord::new(
        "derive",
        json!({
            "source": args.input.input,
            "format": args.input.format.name(),
            "op": op,
            "m": args.m,
            "emit": args.emit.name(),
        }),
        json!({
            "n": derived.vertex_count(),
            "edge_count": derived.edge_count(),
            "graph": encode(&derived, args.emit),
            "labels": labels,
        }),
    );
    let neighbors = derived.neighbors();
    let stdout = render(
        &record,
        out,
        |r| {
            let mut s = r["graph"].as_str().unwrap_or_default().to_owned();
            s.push_str("# index copy base\n");
            for l in r["labels"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    s,
                    "# {} {} {}",
                    l["index"], l["copy_index"], l["base_index"]
                );
            }
            s
        },
        |r| {
            let mut s = String::from("index,copy_index,base_index,neighbors\n");
            for (l, nb) in r["labels"].as_array().into_iter().flatten().zip(&neighbors) {
                let nb: Vec<String> = nb.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    l["index"],
                    l["copy_index"],
                    l["base_index"],
                    nb.join(" ")
                );
            }
            s
        },
    );
    Ok(Rendered { stdout, code: 0 })
}

fn cmd_verify(args: &VerifyArgs, eig_tol: f64, out: OutputFormat) -> anyhow::Result<Rendered> {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        bail!("--tol must be a positive number, got {}", args.tol);
    }
    let (corpus, source) = match (args.corpus, &args.input) {
        (Some(_), Some(_)) => bail!("give either an input graph or --corpus, not both"),
        (Some(CorpusName::Default), None) => {
            (default_corpus(args.seed), "corpus:default".to_owned())
        }
        (None, input) => {
            let input = input.as_deref().unwrap_or("-");
            let g = load_graph(input, args.format)?;
            let name = if input == "-" {
                "stdin".to_owned()
            } else {
                Path::new(input)
                    .file_stem()
                    .map_or_else(|| input.to_owned(), |s| s.to_string_lossy().into_owned())
            };
            (vec![CorpusEntry::new(name, g)], input.to_owned())
        }
    };
    let config = SuiteConfig {
        m_values: (1..=args.m_max).collect(),
        tol: args.tol,
        partition_tol: DEFAULT_PARTITION_TOL.min(args.tol),
        eig_tol,
    };
    let reports = run_suite(&corpus, &config);
    let (passed, failed) = summarize(&reports);
    let record = OutputRecord::new(
        "verify",
        json!({
            "source": source,
            "format": args.format.name(),
            "m_max": args.m_max,
            "tol": args.tol,
            "partition_tol": config.partition_tol,
            "seed": args.seed,
            "eig_tol": eig_tol,
        }),
        json!({
            "reports": reports,
            "passed": passed,
            "failed": failed,
            "all_passed": failed == 0,
        }),
    );
    let stdout = render(
        &record,
        out,
        |r| {
            let mut s = format!(
                "{:<14} {:<24} {:>2}  {:<22} {:<8} {}\n",
                "graph", "claim", "m", "max_abs_deviation", "tol", "status"
            );
            for rep in r["reports"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    s,
                    "{:<14} {:<24} {:>2}  {:<22} {:<8} {}",
                    fmt_num(&rep["graph_descriptor"]),
                    fmt_num(&rep["claim_id"]),
                    rep["m"],
                    fmt_num(&rep["max_abs_deviation"]),
                    fmt_num(&rep["tolerance"]),
                    if rep["passed"] == json!(true) {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                );
            }
            let _ = writeln!(s, "{} passed, {} failed", r["passed"], r["failed"]);
            s
        },
        |r| {
            let mut s =
                String::from("graph_descriptor,claim_id,m,max_abs_deviation,tolerance,passed\n");
            for rep in r["reports"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    csv_field(&fmt_num(&rep["graph_descriptor"])),
                    fmt_num(&rep["claim_id"]),
                    rep["m"],
                    fmt_num(&rep["max_abs_deviation"]),
                    fmt_num(&rep["tolerance"]),
                    rep["passed"]
                );
            }
            s
        },
    );
    Ok(Rendered {
        stdout,
        code: if failed == 0 { 0 } else { 1 },
    })
}
