//! `toughlab`: build the circulant families, compute toughness and related
//! invariants, verify the families over ranges of `k`, and re-check reports.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use toughlab::certify::{certify_file, parse_report_file};
use toughlab::engine::{is_minimally_tough_with, toughness_with, SearchOptions};
use toughlab::families::{FamilyId, FamilyKind};
use toughlab::graph::Graph;
use toughlab::invariants::{maximum_independent_set, minimum_separator, vertex_connectivity};
use toughlab::io::{read_graph, write_dot, write_edge_list, write_graph6};
use toughlab::report::{render_table, verify_range, MinimalityRecord, ReportFile, ToughnessRecord, VerifyOptions};

/// Exit status for malformed input, bad arguments and unreadable reports.
const EXIT_USAGE: u8 = 2;
const EXIT_FAILED: u8 = 1;

#[derive(Parser)]
#[command(
    name = "toughlab",
    version,
    about = "Exact graph toughness and minimally tough circulant families"
)]
struct Cli {
    /// Worker threads for the subset sweep (0 = all cores).
    #[arg(long, global = true, env = "TOUGHLAB_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6, an edge list or DOT.
    Family {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exact toughness of a graph (graph6 or edge list; `-` or nothing reads stdin).
    Toughness {
        input: Option<PathBuf>,
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Independence number with a maximum independent set.
    Alpha { input: Option<PathBuf> },
    /// Vertex connectivity with a minimum separator.
    Kappa { input: Option<PathBuf> },
    /// Check whether a graph is minimally tough, edge by edge.
    Minimal {
        input: Option<PathBuf>,
        #[arg(long)]
        timeout: Option<u64>,
    },
    /// Verify a family over a range of k and write a JSON report.
    Verify {
        #[arg(long)]
        kind: Kind,
        /// A single k or a range `A..B` (inclusive).
        #[arg(long, conflicts_with = "k_range")]
        k: Option<KRange>,
        #[arg(long = "k-range")]
        k_range: Option<KRange>,
        /// Per-k timeout in seconds.
        #[arg(long, default_value_t = 600)]
        timeout: u64,
        #[arg(long, default_value = "toughlab-report.json")]
        report: PathBuf,
        /// Search every edge-deleted graph instead of trying the closed-form witnesses first.
        #[arg(long)]
        no_canonical: bool,
    },
    /// Re-check every certificate in a report without the search engine.
    Certify { report: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "4reg")]
    FourReg,
    #[value(name = "6reg")]
    SixReg,
}

impl From<Kind> for FamilyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::FourReg => FamilyKind::FourRegular,
            Kind::SixReg => FamilyKind::SixRegular,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, Debug)]
struct KRange {
    lo: usize,
    hi: usize,
}

impl FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid k `{t}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let k = num(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(KRange { lo, hi })
    }
}

/// An error carrying its process exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: anyhow::Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        error,
    }
}

fn read_input(path: Option<&Path>) -> Result<Graph, Failure> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .with_context(|| format!("reading {}", p.display()))
            .map_err(usage)?,
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")
                .map_err(usage)?;
            buf
        }
    };
    read_graph(&text).context("parsing graph").map_err(usage)
}

fn search_options(timeout: Option<u64>) -> SearchOptions {
    SearchOptions::parallel().with_deadline(timeout.map(|s| Instant::now() + Duration::from_secs(s)))
}

fn print_json<T: serde::Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Family {
            kind,
            k,
            format,
            output,
        } => {
            let id = FamilyId::new(kind.into(), k).map_err(|e| usage(anyhow!(e)))?;
            let g = id.graph();
            let text = match format {
                Format::Graph6 => write_graph6(&g) + "\n",
                Format::Edgelist => write_edge_list(&g),
                Format::Dot => write_dot(&g, &format!("family_{}_k{}", id.kind, id.k)),
            };
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
                None => io::stdout().write_all(text.as_bytes()).map_err(Into::into),
            }
            .map_err(usage)?;
            Ok(0)
        }
        Command::Toughness { input, timeout } => {
            let g = read_input(input.as_deref())?;
            let start = Instant::now();
            let result = toughness_with(&g, &search_options(timeout)).map_err(|e| Failure {
                code: EXIT_FAILED,
                error: anyhow!(e),
            })?;
            let elapsed = start.elapsed().as_millis() as u64;
            print_json(&ToughnessRecord::new(&result, Some(elapsed))).map_err(usage)?;
            Ok(0)
        }
        Command::Alpha { input } => {
            let g = read_input(input.as_deref())?;
            let set = maximum_independent_set(&g);
            print_json(&serde_json::json!({ "alpha": set.len(), "witness": set.labels() })).map_err(usage)?;
            Ok(0)
        }
        Command::Kappa { input } => {
            let g = read_input(input.as_deref())?;
            let kappa = vertex_connectivity(&g);
            let separator = minimum_separator(&g).map(|s| s.labels());
            print_json(&serde_json::json!({ "kappa": kappa, "separator": separator })).map_err(usage)?;
            Ok(0)
        }
        Command::Minimal { input, timeout } => {
            let g = read_input(input.as_deref())?;
            let start = Instant::now();
            let report = is_minimally_tough_with(&g, None, &search_options(timeout)).map_err(|e| Failure {
                code: EXIT_FAILED,
                error: anyhow!(e),
            })?;
            let elapsed = start.elapsed().as_millis() as u64;
            print_json(&MinimalityRecord::new(&report, Some(elapsed))).map_err(usage)?;
            Ok(0)
        }
        Command::Verify {
            kind,
            k,
            k_range,
            timeout,
            report,
            no_canonical,
        } => {
            let range = k
                .or(k_range)
                .ok_or_else(|| usage(anyhow!("one of --k or --k-range is required")))?;
            let opts = VerifyOptions {
                canonical: !no_canonical,
                timeout: Some(Duration::from_secs(timeout)),
                parallel: true,
            };
            let reports = verify_range(kind.into(), range.lo..=range.hi, &opts).map_err(|e| usage(anyhow!(e)))?;
            print!("{}", render_table(&reports));
            let file = ReportFile::new(reports);
            let json = serde_json::to_string_pretty(&file).map_err(|e| usage(e.into()))?;
            fs::write(&report, json + "\n")
                .with_context(|| format!("writing {}", report.display()))
                .map_err(usage)?;
            println!("report written to {}", report.display());
            Ok(if file.all_pass() { 0 } else { EXIT_FAILED })
        }
        Command::Certify { report } => {
            let text = fs::read_to_string(&report)
                .with_context(|| format!("reading {}", report.display()))
                .map_err(usage)?;
            let file = parse_report_file(&text).map_err(|e| usage(e.into()))?;
            let failures = certify_file(&file);
            if failures.is_empty() {
                println!("certified {} report(s)", file.reports.len());
                Ok(0)
            } else {
                for f in &failures {
                    println!("FAIL {f}");
                }
                Ok(EXIT_FAILED)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if cli.jobs > 0 {
        pool = pool.num_threads(cli.jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
