//! Command-line front end: generate problems, solve them, enumerate exact
//! ground states, and run the benchmark experiments.
//!
//! Every command echoes its full effective configuration (defaults
//! resolved) before the results, prints energies with fixed 9-decimal
//! formatting, and never mutates its input files. Identical arguments and
//! inputs produce identical output; set `RAYON_NUM_THREADS` to control the
//! worker count (results do not depend on it).

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use qaga::bench::{
    gen_random, read_experiment_a, read_experiment_b, run_experiment_a, run_experiment_b, Dist,
    ExperimentAConfig, ExperimentBConfig, ProblemSpec,
};
use qaga::ising::{read_problem, write_problem};
use qaga::postprocess::mqc;
use qaga::sampler::{exact_ground_state, sample, Backend, SamplerConfig, SampleSet};
use qaga::solver::{qaga_run, Method, QagaConfig};

#[derive(Parser)]
#[command(
    name = "qaga",
    version,
    about = "Ising ground-state search: quantum-annealing-style greedy solver, baselines, and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random problem file
    Gen(GenArgs),
    /// Solve a problem file with qa, mqc, or qaga
    Solve(SolveArgs),
    /// Enumerate the exact ground state (guarded to small problems)
    Exact(ExactArgs),
    /// Run the two-method comparison experiment from a config file
    BenchA(BenchArgs),
    /// Run the threshold-sweep experiment from a config file
    BenchB(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Variable count
    #[arg(long, default_value_t = 50)]
    n: usize,
    /// Edge probability in [0,1]
    #[arg(long, default_value_t = 1.0)]
    sparsity: f64,
    /// Coefficient distribution: binary | uniform | normal
    #[arg(long, default_value = "normal")]
    dist: Dist,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Draw couplers only, no local fields
    #[arg(long)]
    zero_fields: bool,
    /// Problem file to write
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    /// Problem file to solve
    #[arg(long)]
    problem: PathBuf,
    /// qa | mqc | qaga
    #[arg(long)]
    method: Method,
    /// Sampling backend: sa | exact
    #[arg(long, default_value = "sa")]
    backend: Backend,
    /// Uncertainty threshold for qaga, in [0, 0.5)
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Reads per sampler invocation
    #[arg(long, default_value_t = 1000)]
    reads: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sweeps per read (default: 10 x problem size)
    #[arg(long)]
    sweeps: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    beta0: f64,
    #[arg(long, default_value_t = 10.0)]
    beta1: f64,
    /// Spin-reversal transforms (default: 10 for qa/mqc, 0 for qaga)
    #[arg(long)]
    gauges: Option<usize>,
    /// Stage cap for qaga (default: problem size)
    #[arg(long)]
    max_stages: Option<usize>,
    /// Directory for the assignment and trace files
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExactArgs {
    /// Problem file to enumerate
    #[arg(long)]
    problem: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Experiment config file (JSON; missing fields take defaults)
    #[arg(long)]
    config: PathBuf,
    /// Report directory (overrides the config file's out_dir)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Gen(args) => run_gen(args),
        Command::Solve(args) => run_solve(args),
        Command::Exact(args) => run_exact(args),
        Command::BenchA(args) => run_bench_a(args),
        Command::BenchB(args) => run_bench_b(args),
    }
}

fn echo_config<C: Serialize>(config: &C) -> Result<()> {
    println!(
        "config: {}",
        serde_json::to_string(config).context("config echo")?
    );
    Ok(())
}

fn run_gen(args: GenArgs) -> Result<()> {
    let spec = ProblemSpec {
        n_vars: args.n,
        sparsity: args.sparsity,
        dist: args.dist,
        seed: args.seed,
        zero_fields: args.zero_fields,
    };
    echo_config(&spec)?;
    let h = gen_random(&spec)?;
    write_problem(&h, &args.out)
        .with_context(|| format!("writing {}", args.out.display()))?;
    println!(
        "generated: n={} couplers={} -> {}",
        h.num_vars(),
        h.num_couplers(),
        args.out.display()
    );
    Ok(())
}

/// Effective solve configuration, echoed before the run.
#[derive(Serialize)]
struct SolveEcho<'a> {
    problem: &'a str,
    method: Method,
    backend: Backend,
    theta: f64,
    max_stages: Option<usize>,
    sampler: &'a SamplerConfig,
}

fn run_solve(args: SolveArgs) -> Result<()> {
    let h = read_problem(&args.problem)
        .with_context(|| format!("reading {}", args.problem.display()))?;
    let num_gauges = args.gauges.unwrap_or(match args.method {
        Method::Qa | Method::Mqc => 10,
        Method::Qaga => 0,
    });
    let sampler = SamplerConfig {
        reads: args.reads,
        seed: args.seed,
        sweeps: args.sweeps,
        beta0: args.beta0,
        beta1: args.beta1,
        num_gauges,
    };
    echo_config(&SolveEcho {
        problem: &args.problem.to_string_lossy(),
        method: args.method,
        backend: args.backend,
        theta: args.theta,
        max_stages: args.max_stages,
        sampler: &sampler,
    })?;

    let (assignment, energy, trace_table) = match args.method {
        Method::Qa => {
            let set = sample(&h, &sampler, &args.backend)?;
            let (best, energy) = set.best().expect("reads >= 1");
            (best.clone(), energy, baseline_trace(energy, args.reads))
        }
        Method::Mqc => {
            let set = sample(&h, &sampler, &args.backend)?;
            let z = mqc(&h, &set)?;
            let energy = h.energy(&z)?;
            (z, energy, baseline_trace(energy, args.reads))
        }
        Method::Qaga => {
            let cfg = QagaConfig {
                theta: args.theta,
                backend: args.backend,
                sampler: sampler.clone(),
                max_stages: args.max_stages,
            };
            let (z, trace) = qaga_run(&h, &cfg)?;
            println!(
                "stages: {} (fallback: {}, total reads: {})",
                trace.total_stages(),
                trace.fallback_used,
                trace.total_reads
            );
            let table = trace.to_table_string();
            (z, trace.final_energy, table)
        }
    };

    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;
    let assignment_path = args.out.join("assignment.csv");
    SampleSet::new(&h, vec![assignment])?
        .write_table(&assignment_path)
        .with_context(|| format!("writing {}", assignment_path.display()))?;
    let trace_path = args.out.join("trace.csv");
    std::fs::write(&trace_path, trace_table)
        .with_context(|| format!("writing {}", trace_path.display()))?;

    println!("energy: {energy:.9}");
    println!("wrote: {}", assignment_path.display());
    println!("wrote: {}", trace_path.display());
    Ok(())
}

/// Stage table for the single-batch baselines: no stages, just the summary.
fn baseline_trace(energy: f64, reads: usize) -> String {
    format!(
        "stage,vars_fixed,remaining,best_energy\n\ntotal_stages,fallback_used,final_energy\n0,false,{energy}\n# total_reads={reads}\n"
    )
}

fn run_exact(args: ExactArgs) -> Result<()> {
    let h = read_problem(&args.problem)
        .with_context(|| format!("reading {}", args.problem.display()))?;
    echo_config(&serde_json::json!({
        "problem": args.problem.to_string_lossy(),
        "n": h.num_vars(),
    }))?;
    let (assignment, energy) = exact_ground_state(&h)?;
    print!("{}", SampleSet::new(&h, vec![assignment])?.to_table_string());
    println!("energy: {energy:.9}");
    Ok(())
}

#[derive(Deserialize)]
#[serde(default)]
struct BenchAFile {
    #[serde(flatten)]
    experiment: ExperimentAConfig,
    out_dir: Option<PathBuf>,
}

impl Default for BenchAFile {
    fn default() -> Self {
        Self {
            experiment: ExperimentAConfig::default(),
            out_dir: None,
        }
    }
}

fn report_dir(cli_out: Option<PathBuf>, file_out: Option<PathBuf>) -> Result<PathBuf> {
    cli_out
        .or(file_out)
        .context("no report directory: pass --out or set out_dir in the config file")
}

fn run_bench_a(args: BenchArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let file: BenchAFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", args.config.display()))?;
    let out = report_dir(args.out, file.out_dir)?;
    echo_config(&file.experiment)?;

    let report = run_experiment_a(&file.experiment)?;
    qaga::bench::write_experiment_a(&report, &out)?;
    // Sanity: the files we just wrote parse back to the same report.
    let back = read_experiment_a(&out)?;
    anyhow::ensure!(back == report, "report round-trip mismatch");

    for cell in &report.cells {
        println!(
            "cell dist={} s={}: {}={} ties={} {}={}{}",
            cell.dist,
            cell.sparsity,
            report.config.method_a,
            cell.wins_a,
            cell.ties,
            report.config.method_b,
            cell.wins_b,
            cell.aborted
                .as_deref()
                .map(|m| format!(" [aborted: {m}]"))
                .unwrap_or_default()
        );
    }
    println!("wrote: {}", out.display());
    Ok(())
}

#[derive(Deserialize)]
#[serde(default)]
struct BenchBFile {
    #[serde(flatten)]
    experiment: ExperimentBConfig,
    out_dir: Option<PathBuf>,
}

impl Default for BenchBFile {
    fn default() -> Self {
        Self {
            experiment: ExperimentBConfig::default(),
            out_dir: None,
        }
    }
}

fn run_bench_b(args: BenchArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let file: BenchBFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {}", args.config.display()))?;
    let out = report_dir(args.out, file.out_dir)?;
    echo_config(&file.experiment)?;

    let report = run_experiment_b(&file.experiment)?;
    qaga::bench::write_experiment_b(&report, &out)?;
    let back = read_experiment_b(&out)?;
    anyhow::ensure!(back == report, "report round-trip mismatch");

    for cell in &report.cells {
        println!(
            "cell theta={} s={}: avg_stages={:.2}{}",
            cell.theta,
            cell.sparsity,
            cell.avg_stages,
            cell.aborted
                .as_deref()
                .map(|m| format!(" [aborted: {m}]"))
                .unwrap_or_default()
        );
    }
    println!("wrote: {}", out.display());
    Ok(())
}
