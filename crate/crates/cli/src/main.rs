//! `nulla`: low-degree Nullstellensatz certificates for non-3-colorable graphs.
//!
//! Exit codes: 0 success, 1 usage, 2 input parse, 3 capacity, 4 internal.

mod render;
mod source;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nulla_core::graph::{hajos_join, is_4critical, write_graph6};
use nulla_core::nulla::{census, nulla_degree, CensusConfig, Schedule, SearchOptions, Support};
use nulla_core::pathcover::corollary_obstruction;
use nulla_core::Graph;

use render::Analysis;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Capacity(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Capacity(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<nulla_core::Error> for CliError {
    fn from(e: nulla_core::Error) -> Self {
        use nulla_core::Error as E;
        match e {
            E::Graph6 { .. } => CliError::Parse(e.to_string()),
            E::Capacity(_) => CliError::Capacity(e.to_string()),
            E::Domain(_) => CliError::Usage(e.to_string()),
            E::DimensionMismatch { .. } | E::Unsound(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Internal(format!("writing output: {e}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScheduleArg {
    /// Degrees 1, 4, 7, ...
    Mod3,
    /// Every degree up to the cap.
    All,
}

#[derive(Parser)]
#[command(
    name = "nulla",
    version,
    about = "Nullstellensatz degree of graph non-3-colorability over GF(2)"
)]
struct Cli {
    /// Progress on stderr (repeat for more).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze each input graph: colorability, criticality, degree, cover, obstruction.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Count 4-critical graphs by certificate degree, one row per order.
    ///
    /// Orders above 7 need a graph6 file holding every non-isomorphic graph
    /// of that order, one per line (nauty's `geng N` output).
    Census {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        engine: EngineArgs,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Hajós join of two graphs along an edge of each, then analyze it.
    ///
    /// Graphs are graph6 strings or `gen:NAME[:ARG]`; edges are `v,w`
    /// (0-indexed). The join identifies v with x, drops vw and xy and
    /// adds wy.
    Hajos {
        graph_a: String,
        edge_a: String,
        graph_b: String,
        edge_b: String,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// graph6 file, one graph per line (`-` for stdin).
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Built-in graph: k4, complete:N, wheel:N, cycle:N, path:N, star:N, empty:N, moser-spindle, hajos-k4.
    #[arg(long, value_name = "NAME[:ARG]")]
    gen: Option<String>,
    /// Every non-isomorphic graph with LO..HI vertices (inclusive, HI <= 7).
    #[arg(long, value_name = "LO..HI")]
    enumerate: Option<String>,
}

#[derive(Args)]
struct EngineArgs {
    /// Largest certificate degree searched.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    #[arg(long, value_enum, default_value_t = ScheduleArg::Mod3)]
    schedule: ScheduleArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Memory cap per linear system, in bytes.
    #[arg(long, value_name = "BYTES", default_value_t = nulla_core::gf2::DEFAULT_MEM_CAP)]
    mem_cap: u64,
    /// Search only the degree-graded part of the multiplier space (same answers, smaller systems).
    #[arg(long)]
    graded: bool,
    /// Include wall-clock timings (output is then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

impl EngineArgs {
    fn schedule(&self) -> Schedule {
        match self.schedule {
            ScheduleArg::Mod3 => Schedule::Mod3,
            ScheduleArg::All => Schedule::All,
        }
    }

    fn search(&self) -> SearchOptions {
        SearchOptions {
            mem_cap: self.mem_cap,
            support: if self.graded { Support::Graded } else { Support::Full },
        }
    }

    fn cap(&self) -> usize {
        usize::try_from(self.cap).unwrap_or(usize::MAX)
    }
}

fn load(source: &SourceArgs) -> Result<Vec<Graph>, CliError> {
    if let Some(path) = &source.input {
        source::read_graph6_file(path)
    } else if let Some(spec) = &source.gen {
        Ok(vec![source::generate(spec)?])
    } else if let Some(spec) = &source.enumerate {
        let (lo, hi) = source::parse_range(spec)?;
        source::enumerate(lo, hi)
    } else {
        Err(CliError::Usage("no input given".into()))
    }
}

fn analyze_one(g: &Graph, engine: &EngineArgs) -> Result<Analysis, CliError> {
    let report = nulla_degree(g, engine.cap(), engine.schedule(), &engine.search()).map_err(|f| {
        let tried: Vec<String> = f.partial.tried.iter().map(usize::to_string).collect();
        let mut e = CliError::from(f.error);
        if let CliError::Capacity(m) = &mut e {
            m.push_str(&format!(" (degrees attempted: {})", tried.join(", ")));
        }
        e
    })?;
    let is_4critical = !report.colorable && is_4critical(g)?;
    let obstruction = if report.colorable {
        None
    } else {
        corollary_obstruction(g)?
    };
    Ok(Analysis {
        edges: g.edge_count(),
        report,
        is_4critical,
        obstruction,
    })
}

fn emit(f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    f(&mut out)?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { source, engine } => {
            let graphs = load(&source)?;
            let mut items = Vec::with_capacity(graphs.len());
            for (i, g) in graphs.iter().enumerate() {
                log::info!("graph {} of {}", i + 1, graphs.len());
                items.push(analyze_one(g, &engine)?);
            }
            emit(|out| render::analyses(out, &items, engine.format, engine.timings))
        }
        Command::Census {
            source,
            engine,
            workers,
        } => {
            let graphs = load(&source)?;
            log::info!("census over {} graphs", graphs.len());
            let cfg = CensusConfig {
                cap: engine.cap(),
                schedule: engine.schedule(),
                search: engine.search(),
                workers,
            };
            let table = census(&graphs, &cfg)?;
            for f in &table.failures {
                log::warn!(
                    "graph {} ({}): {}",
                    f.index,
                    f.graph6.as_deref().unwrap_or("too large for graph6"),
                    f.error
                );
            }
            emit(|out| render::census(out, &table, engine.format, engine.timings))?;
            if !graphs.is_empty() && table.failures.len() == graphs.len() {
                let first = CliError::from(table.failures[0].error.clone());
                return Err(match first {
                    CliError::Capacity(m) => CliError::Capacity(format!("every graph failed; first: {m}")),
                    other => CliError::Internal(format!("every graph failed; first: {}", other.message())),
                });
            }
            if !table.failures.is_empty() {
                log::warn!("{} of {} graphs failed", table.failures.len(), graphs.len());
            }
            Ok(())
        }
        Command::Hajos {
            graph_a,
            edge_a,
            graph_b,
            edge_b,
            engine,
        } => {
            let g = source::inline_graph(&graph_a)?;
            let h = source::inline_graph(&graph_b)?;
            let ea = source::edge_in(&g, source::parse_edge(&edge_a)?)?;
            let eb = source::edge_in(&h, source::parse_edge(&edge_b)?)?;
            let joined = hajos_join(&g, ea, &h, eb)?;
            log::info!("join: {}", write_graph6(&joined).unwrap_or_default());
            let a = analyze_one(&joined, &engine)?;
            emit(|out| render::analyses(out, &[a], engine.format, engine.timings))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
