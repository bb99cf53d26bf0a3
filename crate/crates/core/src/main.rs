use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use shearq::fatgraph::FatGraph;
use shearq::oracle::DEFAULT_MODULI;
use shearq::suites::{
    is_suite, list_suites, parse_script, run_suite, Environment, Inputs, Report, SuiteOptions,
    REPORT_SCHEMA, SUITES,
};

#[derive(Parser)]
#[command(
    name = "shearq",
    version,
    about = "Exact identity checks for quantum shear coordinates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites and write a JSON report.
    Run(RunArgs),
    /// Print suite ids with their anchors.
    #[command(alias = "list_suites")]
    ListSuites,
}

#[derive(Args)]
struct RunArgs {
    /// Suite to run (repeatable).
    #[arg(long = "suite", value_name = "NAME")]
    suites: Vec<String>,
    /// Graph file in JSON syntax (repeatable).
    #[arg(long = "graph", value_name = "FILE")]
    graphs: Vec<PathBuf>,
    /// Further graph files.
    #[arg(value_name = "FILE")]
    files: Vec<PathBuf>,
    /// Flip script applied to the first graph within flips-quantum.
    #[arg(long, value_name = "FILE")]
    flips: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Root-of-unity moduli, comma separated.
    #[arg(long = "oracle-mod", value_name = "LIST", value_delimiter = ',')]
    oracle_mod: Option<Vec<u32>>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Record zero elapsed times so reports are byte-identical across runs.
    #[arg(long)]
    no_timings: bool,
}

fn load_graph(p: &PathBuf) -> (String, Result<FatGraph, String>) {
    let name = p.display().to_string();
    let g = std::fs::read_to_string(p)
        .map_err(|e| format!("read {name}: {e}"))
        .and_then(|t| FatGraph::from_json(&t).map_err(|e| e.to_string()));
    (name, g)
}

fn run(args: RunArgs) -> Result<bool> {
    if args.suites.is_empty() {
        bail!("no suite given; use --suite NAME (see list-suites)");
    }
    let unknown: Vec<&String> = args.suites.iter().filter(|s| !is_suite(s)).collect();
    if !unknown.is_empty() {
        let known: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        bail!("unknown suite(s) {unknown:?}; known: {}", known.join(", "));
    }
    let moduli = args.oracle_mod.unwrap_or_else(|| DEFAULT_MODULI.to_vec());
    if moduli.is_empty() || moduli.iter().any(|&n| n < 3) {
        bail!("--oracle-mod needs moduli >= 3, got {moduli:?}");
    }
    let mut names: Vec<String> = Vec::new();
    for s in &args.suites {
        if !names.contains(s) {
            names.push(s.clone());
        }
    }
    let script = match &args.flips {
        Some(p) => {
            let text =
                std::fs::read_to_string(p).with_context(|| format!("read {}", p.display()))?;
            Some(parse_script(&text).map_err(anyhow::Error::msg)?)
        }
        None => None,
    };
    let inputs = Inputs {
        graphs: args
            .graphs
            .iter()
            .chain(&args.files)
            .map(load_graph)
            .collect(),
        script,
    };
    if let Some(j) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .context("thread pool")?;
    }
    let opts = SuiteOptions {
        seed: args.seed,
        samples: args.samples,
        moduli: moduli.clone(),
    };
    let per_suite: Vec<_> = names
        .par_iter()
        .map(|n| run_suite(n, &opts, &inputs).expect("suite names checked"))
        .collect();
    let mut reports: Vec<_> = per_suite.into_iter().flatten().collect();
    if args.no_timings {
        for r in reports.iter_mut() {
            r.elapsed_ms = 0.0;
        }
    }
    let report = Report {
        schema: REPORT_SCHEMA.into(),
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").into(),
            seed: args.seed,
            moduli,
            samples: args.samples,
            suites: names,
        },
        reports,
    };
    let json = serde_json::to_string_pretty(&report)?;
    let failed: Vec<_> = report.reports.iter().filter(|r| !r.passed()).collect();
    let summary = format!(
        "{} identities, {} passed, {} failed",
        report.reports.len(),
        report.reports.len() - failed.len(),
        failed.len()
    );
    match &args.report {
        Some(p) => {
            std::fs::write(p, json + "\n").with_context(|| format!("write {}", p.display()))?;
            for r in &failed {
                println!("FAIL {}", r.id);
            }
            println!("{summary}");
        }
        None => {
            println!("{json}");
            for r in &failed {
                eprintln!("FAIL {}", r.id);
            }
            eprintln!("{summary}");
        }
    }
    Ok(report.all_pass())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::ListSuites => {
            print!("{}", list_suites());
            ExitCode::SUCCESS
        }
        Cmd::Run(args) => match run(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
    }
}
