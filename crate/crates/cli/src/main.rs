use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gbei_algebra::{Dialect, OrderKind};
use gbei_cli::commands::{self, Ctx};
use gbei_cli::corpus::{parse_range, run_corpus, write_report, CorpusConfig, CorpusMode};
use gbei_cli::{resolve_graph, CliError, CliResult};
use gbei_core::{fixtures, io, Caps, Exec};

/// Depth bounds, class recognition and an exact depth oracle for generalized
/// binomial edge ideals J_{K_m,G}.
///
/// GRAPH is a fixture name (fig1..fig5, cycleN, pathN, completeN), a file with a
/// JSON graph or an edge list, or `-` for stdin. Caps are read from GBEI_CAPS.
#[derive(Parser, Debug)]
#[command(name = "gbei", version)]
struct Cli {
    /// Run every data-parallel routine on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Degrevlex => OrderKind::Degrevlex,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DialectArg {
    Macaulay2,
    Singular,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graph invariants: n, t, f, iv, d, kappa.
    Stats { graph: String },
    /// Every class recognizer with its witness.
    Classify { graph: String },
    /// Lower, upper and exact depth.
    Bounds {
        graph: String,
        #[arg(long)]
        m: usize,
    },
    /// Depth report, optionally certified by the symbolic oracle.
    Depth {
        graph: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
    /// Cut sets with component counts.
    Cutsets { graph: String },
    /// Prime components P_T and a check that their intersection is J.
    Decompose {
        graph: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
    },
    /// Macaulay2 or Singular script for J_{K_m,G}.
    ExportCas {
        graph: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        dialect: DialectArg,
    },
    /// Batch run over random or exhaustively enumerated connected graphs.
    Corpus {
        /// Vertex range `A..B`, inclusive.
        #[arg(long)]
        n_range: Option<String>,
        #[arg(long)]
        count: Option<usize>,
        /// One or more values, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        edge_probability: f64,
        /// JSON report path; the CSV summary goes next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        oracle: bool,
        /// All connected graphs on `--n` vertices up to isomorphism.
        #[arg(long, requires = "n")]
        exhaustive: bool,
        #[arg(long)]
        n: Option<usize>,
        /// Record wall-clock times (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Named graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand, Debug)]
enum FixtureAction {
    List,
    Show {
        name: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn violations(list: &[String]) -> CliResult<()> {
    if list.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(list.join("; ")))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let caps = Caps::from_env()?;
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let ctx = Ctx { caps, exec };
    match cli.command {
        Command::Stats { graph } => print_json(&commands::stats(&resolve_graph(&graph)?)?),
        Command::Classify { graph } => print_json(&commands::classify(&resolve_graph(&graph)?, &ctx)?),
        Command::Bounds { graph, m } => {
            let report = commands::bounds(&resolve_graph(&graph)?, m, &ctx)?;
            print_json(&report)?;
            violations(&report.violations())
        }
        Command::Depth { graph, m, oracle, order } => {
            let out = commands::depth(&resolve_graph(&graph)?, m, oracle, order.into(), &ctx)?;
            print_json(&out)?;
            violations(&out.violations)
        }
        Command::Cutsets { graph } => print_json(&commands::cutsets(&resolve_graph(&graph)?, &ctx)?),
        Command::Decompose { graph, m, order } => {
            let out = commands::decompose(&resolve_graph(&graph)?, m, order.into(), &ctx)?;
            print_json(&out)?;
            if out.verified {
                Ok(())
            } else {
                Err(CliError::Violation("intersection of the P_T differs from J".into()))
            }
        }
        Command::ExportCas { graph, m, dialect } => {
            let dialect = match dialect {
                DialectArg::Macaulay2 => Dialect::Macaulay2,
                DialectArg::Singular => Dialect::Singular,
            };
            emit(&commands::export(&resolve_graph(&graph)?, m, dialect)?)
        }
        Command::Corpus {
            n_range,
            count,
            m,
            seed,
            edge_probability,
            out,
            oracle,
            exhaustive,
            n,
            timings,
        } => {
            let mode = if exhaustive {
                CorpusMode::Exhaustive { n: n.expect("clap enforces --n") }
            } else {
                let range = n_range.ok_or_else(|| CliError::Usage("--n-range is required without --exhaustive".into()))?;
                let (n_min, n_max) = parse_range(&range).map_err(CliError::Usage)?;
                let count = count.ok_or_else(|| CliError::Usage("--count is required without --exhaustive".into()))?;
                CorpusMode::Random {
                    n_min,
                    n_max,
                    count,
                    seed,
                    edge_probability,
                }
            };
            let config = CorpusConfig { mode, m, oracle, timings };
            let report = run_corpus(&config, &ctx)?;
            match out {
                Some(path) => {
                    let csv = write_report(&report, &path)?;
                    eprintln!(
                        "{} records, {} violations -> {} and {}",
                        report.summary.records,
                        report.summary.violations,
                        path.display(),
                        csv.display()
                    );
                }
                None => print_json(&report)?,
            }
            let all: Vec<String> = report
                .records
                .iter()
                .flat_map(|r| r.violations.iter().map(move |v| format!("{} (m={}): {v}", r.graph_id, r.m)))
                .collect();
            violations(&all)
        }
        Command::Fixtures { action } => match action {
            FixtureAction::List => {
                emit(&fixtures::NAMED.iter().map(|n| format!("{n}\n")).collect::<String>())
            }
            FixtureAction::Show { name, format } => {
                let g = fixtures::by_name(&name)?;
                emit(&match format {
                    FormatArg::Json => format!("{}\n", io::to_canonical_json(&g)),
                    FormatArg::Text => io::to_text(&g),
                    FormatArg::Dot => io::to_dot(&g, &name),
                })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
