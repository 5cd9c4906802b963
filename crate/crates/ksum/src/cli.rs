//! Command-line front door: `solve`, `generate`, `verify`, `bench`.
//!
//! Solutions go to stdout (one line per solution: ascending indices,
//! `=`, the target); counters and diagnostics go to stderr. Exit codes:
//! 0 solutions found, 1 none or infeasible, 2 any error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_benchmark, write_csv, BenchConfig};
use crate::error::Error;
use crate::generate::{generate_instance, render_with_seed, GeneratorSpec};
use crate::instance::ProblemInstance;
use crate::mitm;
use crate::oracle;
use crate::partition::{make_partition, solve_partition, PartitionMode, Strategy};
use crate::report::{Algorithm, SolverReport, Status};
use crate::verify::{run_verify, VerifyConfig};
use crate::{ExclusionPolicy, Limit, SolveOptions};

#[derive(Parser)]
#[command(
    name = "ksum",
    version,
    about = "Exact fixed-cardinality subset-sum solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and print solutions plus counters
    Solve(SolveArgs),
    /// Write a seeded random instance file
    Generate(GenerateArgs),
    /// Cross-check every solver against exhaustive enumeration
    Verify(VerifyArgs),
    /// Emit an operation-count CSV over an (n, m) grid
    Bench(BenchArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Enumerate,
    Mitm,
    Partition,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PartitionModeArg {
    Pair,
    Composition,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Contiguous,
    RoundRobin,
}

impl From<StrategyArg> for Strategy {
    fn from(arg: StrategyArg) -> Self {
        match arg {
            StrategyArg::Contiguous => Strategy::Contiguous,
            StrategyArg::RoundRobin => Strategy::RoundRobin,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BenchAlgorithmArg {
    Enumerate,
    Mitm,
    PartitionPair,
    PartitionComposition,
}

impl From<BenchAlgorithmArg> for Algorithm {
    fn from(arg: BenchAlgorithmArg) -> Self {
        match arg {
            BenchAlgorithmArg::Enumerate => Algorithm::Enumerate,
            BenchAlgorithmArg::Mitm => Algorithm::Mitm,
            BenchAlgorithmArg::PartitionPair => Algorithm::PartitionPair,
            BenchAlgorithmArg::PartitionComposition => Algorithm::PartitionComposition,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file in the two-line text format
    instance: PathBuf,

    #[arg(long, value_enum, default_value_t = AlgorithmArg::Mitm)]
    algorithm: AlgorithmArg,

    /// Partition assembly: pair (two blocks per solution) or composition
    /// (complete)
    #[arg(long, value_enum, default_value_t = PartitionModeArg::Composition)]
    partition_mode: PartitionModeArg,

    #[arg(long, default_value_t = 2)]
    partition_blocks: usize,

    #[arg(long, value_enum, default_value_t = StrategyArg::Contiguous)]
    partition_strategy: StrategyArg,

    /// Pair-mode subset size taken from the table block (default m - m/2)
    #[arg(long)]
    k1: Option<usize>,

    /// Pair-mode subset size taken from the probe block (default m/2)
    #[arg(long)]
    k2: Option<usize>,

    /// Report at most this many solutions (`all` for every one)
    #[arg(long, default_value = "all")]
    limit: Limit,

    /// Never switch to the (n-m, total-S) mirror question
    #[arg(long)]
    no_complement: bool,

    /// Worker threads; 0 means machine parallelism
    #[arg(long, default_value_t = 0)]
    threads: usize,

    /// Print 0-based indices instead of 1-based
    #[arg(long)]
    zero_based: bool,

    /// Per-table entry cap
    #[arg(long, default_value_t = crate::DEFAULT_MEMORY_CAP_ENTRIES)]
    memory_cap_entries: u64,
}

#[derive(Args)]
struct GenerateArgs {
    /// Output file (`-` for stdout)
    output: PathBuf,

    #[arg(long)]
    n: usize,

    #[arg(long)]
    m: usize,

    #[arg(long, default_value_t = 1)]
    value_min: i64,

    #[arg(long, default_value_t = 100)]
    value_max: i64,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Set the target to the sum of a random m-subset (always solvable)
    #[arg(long)]
    planted: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    trials: u64,

    #[arg(long, default_value_t = 4)]
    n_min: usize,

    #[arg(long, default_value_t = 14)]
    n_max: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated set sizes
    #[arg(long, value_delimiter = ',', default_value = "10,12,14,16,18,20")]
    n: Vec<usize>,

    /// Comma-separated cardinalities
    #[arg(long, value_delimiter = ',', default_value = "4,5,6,7,8")]
    m: Vec<usize>,

    #[arg(long, default_value_t = 1)]
    reps: u32,

    #[arg(long, value_delimiter = ',', value_enum, default_value = "enumerate,mitm")]
    algorithms: Vec<BenchAlgorithmArg>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = 0)]
    threads: usize,

    /// CSV output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    result.unwrap_or_else(|message| {
        eprintln!("error: {message}");
        ExitCode::from(2)
    })
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.instance)
        .map_err(|e| format!("{}: {e}", args.instance.display()))?;
    let inst = ProblemInstance::parse(&text).map_err(|e| e.to_string())?;
    let opts = SolveOptions {
        limit: args.limit,
        use_complement: !args.no_complement,
        threads: args.threads,
        memory_cap_entries: args.memory_cap_entries,
        exclusions: ExclusionPolicy::Auto,
    };

    let report = match args.algorithm {
        AlgorithmArg::Enumerate => {
            oracle::solve(&inst, args.limit, oracle::DEFAULT_ENUMERATION_CAP)
        }
        AlgorithmArg::Mitm => mitm::solve(&inst, &opts),
        AlgorithmArg::Partition => {
            let m = inst.cardinality();
            let plan = make_partition(
                inst.n(),
                args.partition_blocks,
                args.partition_strategy.into(),
            )
            .map_err(|e| e.to_string())?;
            let mode = match args.partition_mode {
                PartitionModeArg::Composition => PartitionMode::Composition,
                PartitionModeArg::Pair => {
                    let k2 = args.k2.unwrap_or(m / 2);
                    let k1 = args.k1.unwrap_or_else(|| m.saturating_sub(k2));
                    if plan.min_block_len() < 2 * k1.max(k2) {
                        eprintln!(
                            "warning: smallest block has {} elements, below 2*k = {}",
                            plan.min_block_len(),
                            2 * k1.max(k2)
                        );
                    }
                    PartitionMode::Pair { k1, k2 }
                }
            };
            solve_partition(&inst, &plan, mode, &opts)
        }
    };

    match report {
        Ok(report) => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for s in &report.solutions {
                let indices = s.display_indices(args.zero_based);
                let line = if indices.is_empty() {
                    format!("= {}", inst.target())
                } else {
                    format!("{indices} = {}", inst.target())
                };
                if writeln!(out, "{line}").is_err() {
                    break; // downstream closed the pipe; stop writing
                }
            }
            drop(out);
            print_stats(&report);
            Ok(if report.status == Status::Found {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Err(err @ (Error::Capacity { .. } | Error::Overflow { .. })) => {
            eprintln!("status: {}", Status::CapacityExceeded);
            Err(err.to_string())
        }
        Err(err) => Err(err.to_string()),
    }
}

fn print_stats(report: &SolverReport) {
    eprintln!("status: {}", report.status);
    eprintln!("algorithm: {}", report.algorithm);
    eprintln!("solutions: {}", report.solutions.len());
    eprintln!("entries_built: {}", report.entries_built);
    eprintln!("probes: {}", report.probes);
    eprintln!("exclusions_tried: {}", report.exclusions_tried);
    eprintln!("tasks_run: {}", report.tasks_run);
    eprintln!("wall_ms: {}", report.wall_ms());
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let spec = GeneratorSpec {
        n: args.n,
        m: args.m,
        value_min: args.value_min,
        value_max: args.value_max,
        seed: args.seed,
        planted: args.planted,
    };
    let inst = generate_instance(&spec).map_err(|e| e.to_string())?;
    let text = render_with_seed(&spec, &inst);
    if args.output.as_os_str() == "-" {
        let _ = std::io::stdout().lock().write_all(text.as_bytes());
    } else {
        std::fs::write(&args.output, &text)
            .map_err(|e| format!("{}: {e}", args.output.display()))?;
        eprintln!("wrote {}", args.output.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let cfg = VerifyConfig {
        trials: args.trials,
        n_min: args.n_min,
        n_max: args.n_max,
        seed: args.seed,
        threads: args.threads,
    };
    let outcome = run_verify(&cfg).map_err(|e| e.to_string())?;
    println!("trials: {}", outcome.trials_run);
    println!("comparisons: {}", outcome.comparisons);
    match outcome.failure {
        None => {
            println!("result: pass");
            Ok(ExitCode::SUCCESS)
        }
        Some(discrepancy) => {
            println!("result: fail");
            print!("{discrepancy}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, String> {
    let mut points = Vec::new();
    for &n in &args.n {
        for &m in &args.m {
            if m > n {
                eprintln!("warning: skipping point n={n} m={m} (m > n)");
            } else {
                points.push((n, m));
            }
        }
    }
    let cfg = BenchConfig {
        points,
        repetitions: args.reps,
        algorithms: args.algorithms.iter().map(|&a| a.into()).collect(),
        seed: args.seed,
        threads: args.threads,
        memory_cap_entries: crate::DEFAULT_MEMORY_CAP_ENTRIES,
    };
    let rows = run_benchmark(&cfg).map_err(|e| e.to_string())?;
    match &args.output {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            write_csv(&rows, &mut file).map_err(|e| e.to_string())?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            if let Err(e) = write_csv(&rows, &mut std::io::stdout().lock()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.to_string());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
