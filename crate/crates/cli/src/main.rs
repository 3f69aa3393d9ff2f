mod report;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use wheelshp::{
    exception_generator, find_k_wheel_with, is_k_wheel, iso_classes, make_wheel, parse_edge_list, split_regions,
    to_dot, wheelproof_with, write_edge_list, Generation, GenerationError, GenerationOptions, Graph, GraphError,
    IsoClassSummary, ParseError, SearchConfig, SearchOutcome, SkipMode, VertexId, VertexSet,
};

use crate::report::RunReport;

#[derive(Parser)]
#[command(name = "wheelshp", version, about = "Wheel subdivision search and exception generation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Run {
    /// Worker threads for candidate testing; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Node budget per search; exhaustion exits with status 3.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Search a graph for a W_k-subdivision.
    Findwheel {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        run: Run,
        /// Directory for witness.txt; printed to stdout otherwise.
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Test whether a graph contracts to W_k.
    Iskwheel {
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Place a new hub neighbour on W_{k-1} in every way and keep the graphs without W_k.
    Wheelproof {
        #[arg(short)]
        k: usize,
        /// Also group the exceptions into isomorphism classes.
        #[arg(long)]
        dedup: bool,
        #[command(flatten)]
        run: Run,
        #[arg(short = 'o', default_value = ".")]
        out: PathBuf,
    },
    /// Add one path between two regions in every way and keep the graphs without W_k.
    Exceptions {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// Separating set, e.g. `0,1,4`; the two components of G - S become the regions.
        #[arg(long, conflicts_with = "regions", required_unless_present = "regions")]
        sep: Option<String>,
        /// Explicit regions, e.g. `0,1,2;3,4,5`.
        #[arg(long)]
        regions: Option<String>,
        #[arg(long, default_value_t = SkipMode::Dedup)]
        skip_mode: SkipMode,
        #[arg(long)]
        dedup: bool,
        #[command(flatten)]
        run: Run,
        #[arg(short = 'o', default_value = ".")]
        out: PathBuf,
    },
    /// Group graph files into isomorphism classes.
    Isoclasses {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Print a graph in DOT format.
    Dot { input: PathBuf },
    /// Print W_k in the edge-list format.
    Wheel {
        #[arg(short)]
        k: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generation(#[from] GenerationError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("search budget exhausted")]
    Budget,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget | CliError::Generation(GenerationError::BudgetExhausted(_)) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Findwheel { input, k, run, out } => findwheel(&input, k, &run, out.as_deref()),
        Command::Iskwheel { input, k } => {
            let g = read_graph(&input)?;
            match is_k_wheel(&g, k) {
                Some(w) => {
                    println!("W_{k}: yes");
                    print!("{}", write_edge_list(&w));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("W_{k}: no");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Wheelproof { k, dedup, run, out } => {
            let start = Instant::now();
            let generation = with_jobs(run.jobs, |parallel| {
                wheelproof_with(k, &GenerationOptions { parallel, budget: run.budget, ..Default::default() })
            })??;
            let mut report = RunReport::new("wheelproof", k);
            report.note("enumeration", "canonical");
            finish(report, generation, dedup, &out, start)
        }
        Command::Exceptions { input, k, sep, regions, skip_mode, dedup, run, out } => {
            let g = read_graph(&input)?;
            let (a, b) = match (sep, regions) {
                (Some(sep), _) => split_regions(&g, &parse_set(&sep)?)?,
                (None, Some(regions)) => parse_regions(&regions)?,
                (None, None) => return Err(CliError::Usage("one of --sep or --regions is required".into())),
            };
            let start = Instant::now();
            let generation = with_jobs(run.jobs, |parallel| {
                exception_generator(&g, &a, &b, k, &GenerationOptions { parallel, budget: run.budget, skip_mode })
            })??;
            let mut report = RunReport::new("exceptions", k);
            report.note("skip_mode", skip_mode);
            report.note("regions", format!("{};{}", join(a.as_slice()), join(b.as_slice())));
            report.note(
                "conclusion",
                if generation.exceptions.is_empty() {
                    format!("every candidate contains a W_{k}-subdivision")
                } else {
                    format!("{} candidates need separate treatment", generation.exceptions.len())
                },
            );
            finish(report, generation, dedup, &out, start)
        }
        Command::Isoclasses { inputs } => {
            let graphs = inputs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>>>()?;
            let summary = iso_classes(&graphs);
            let names: Vec<String> = inputs.iter().map(|p| p.display().to_string()).collect();
            print!("{}", class_summary(&summary, &names));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { input } => {
            print!("{}", to_dot(&read_graph(&input)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Wheel { k } => {
            print!("{}", write_edge_list(&make_wheel(k)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn findwheel(input: &Path, k: usize, run: &Run, out: Option<&Path>) -> Result<ExitCode> {
    let g = read_graph(input)?;
    let search = with_jobs(run.jobs, |parallel| {
        find_k_wheel_with(&g, k, &SearchConfig { budget: run.budget, parallel, ..Default::default() })
    })?;
    match search.outcome {
        SearchOutcome::Found(w) => {
            println!("W_{k}-subdivision: found");
            eprintln!("nodes: {}", search.nodes);
            let text = write_edge_list(&w.subgraph);
            match out {
                Some(dir) => {
                    let path = dir.join("witness.txt");
                    write_file(dir, &path, &text)?;
                    println!("witness: {}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        SearchOutcome::NotFound => {
            println!("W_{k}-subdivision: not found");
            eprintln!("nodes: {}", search.nodes);
            Ok(ExitCode::from(1))
        }
        SearchOutcome::BudgetExhausted => Err(CliError::Budget),
    }
}

fn finish(mut report: RunReport, generation: Generation, dedup: bool, out: &Path, start: Instant) -> Result<ExitCode> {
    let stats = generation.stats;
    report.candidates_tested = stats.candidates_tested;
    report.exceptions_found = stats.exceptions_found;
    report.skipped_not_3connected = stats.skipped_not_3connected;
    let graphs = &generation.exceptions.graphs;
    for (idx, g) in graphs.iter().enumerate() {
        let path = out.join(format!("exception_{idx}.txt"));
        write_file(out, &path, &write_edge_list(g))?;
        report.outputs.push(path);
    }
    if dedup {
        let summary = iso_classes(graphs);
        report.note("classes", summary.classes.len());
        let names: Vec<String> = (0..graphs.len()).map(|i| format!("exception_{i}.txt")).collect();
        let path = out.join("classes.txt");
        write_file(out, &path, &class_summary(&summary, &names))?;
        report.outputs.push(path);
    }
    report.elapsed = start.elapsed();
    print!("{report}");
    Ok(ExitCode::SUCCESS)
}

fn class_summary(summary: &IsoClassSummary, names: &[String]) -> String {
    let mut text = format!("classes: {}\ntotal: {}\n", summary.classes.len(), summary.total);
    for (i, class) in summary.classes.iter().enumerate() {
        let members: Vec<&str> = class.members.iter().map(|&m| names[m].as_str()).collect();
        text.push_str(&format!("class {i} ({}): {}\n", members.len(), members.join(" ")));
    }
    text
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce(bool) -> T + Send) -> Result<T> {
    if jobs == 1 {
        return Ok(f(false));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(|| f(true)))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse_edge_list(&text).map_err(|source| CliError::Parse { path: path.into(), source })
}

fn write_file(dir: &Path, path: &Path, text: &str) -> Result<()> {
    fs::create_dir_all(dir)
        .and_then(|_| fs::write(path, text))
        .map_err(|source| CliError::Write { path: path.into(), source })
}

fn parse_set(text: &str) -> Result<VertexSet> {
    let ids = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<VertexId>().map_err(|_| CliError::Usage(format!("invalid vertex id `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    VertexSet::new(ids).map_err(CliError::from)
}

fn parse_regions(text: &str) -> Result<(VertexSet, VertexSet)> {
    let (a, b) =
        text.split_once(';').ok_or_else(|| CliError::Usage(format!("expected `A;B` regions, found `{text}`")))?;
    Ok((parse_set(a)?, parse_set(b)?))
}

fn join(ids: &[VertexId]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
