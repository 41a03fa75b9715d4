use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vdo::harness::{self, ExperimentConfig, OptimizerSpec, RankTable, OPTIMIZER_NAMES};
use vdo::problems::problem_names;
use vdo::Result;

/// Benchmark runner for the virus diffusion optimizer and its baselines.
#[derive(Parser)]
#[command(name = "vdo-bench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment and write summary.csv, ranks.csv, curves/ and config.json.
    Run(RunArgs),
    /// List registered problems and optimizers.
    List,
    /// Recompute ranks from an existing summary.csv.
    Rank {
        summary: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// JSON experiment configuration; the flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem name (repeatable or comma separated), e.g. pvd, sphere:30.
    #[arg(long, value_delimiter = ',')]
    problem: Vec<String>,
    /// Optimizer name (repeatable or comma separated): vdo, pso, ga, random.
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    max_fes: Option<u64>,
    /// Base seed; run r uses seed + r.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory with shift/rotation data for cec2017/cec2022 problems.
    #[arg(long)]
    cec_data: Option<PathBuf>,
}

impl RunArgs {
    fn into_config(self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if !self.problem.is_empty() {
            cfg.problems = self.problem;
        }
        if !self.algo.is_empty() {
            cfg.optimizers = self
                .algo
                .iter()
                .map(|name| OptimizerSpec::from_name(name))
                .collect::<Result<_>>()?;
        }
        if let Some(v) = self.runs {
            cfg.runs = v;
        }
        if let Some(v) = self.pop {
            cfg.population = v;
        }
        if let Some(v) = self.max_fes {
            cfg.max_fes = v;
        }
        if let Some(v) = self.seed {
            cfg.base_seed = v;
        }
        if let Some(v) = self.out {
            cfg.output = v;
        }
        if let Some(v) = self.cec_data {
            cfg.cec_data = v;
        }
        Ok(cfg)
    }
}

fn print_averages(table: &RankTable) {
    println!("optimizer,avg_rank_m,avg_rank_v");
    let m = table.average_rank_m();
    let v = table.average_rank_v();
    for (o, name) in table.optimizers.iter().enumerate() {
        println!("{name},{},{}", m[o], v[o]);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(args) => {
            let cfg = args.into_config()?;
            let report = harness::run_experiment(&cfg)?;
            println!("problem,optimizer,mean,variance,best,worst,rank_m,rank_v");
            for r in &report.summary {
                println!(
                    "{},{},{:e},{:e},{:e},{:e},{},{}",
                    r.problem, r.optimizer, r.mean, r.variance, r.best, r.worst, r.rank_m, r.rank_v
                );
            }
            println!();
            print_averages(&report.ranks);
            eprintln!("wrote results to {}", cfg.output.display());
        }
        Command::List => {
            println!("problems:");
            for name in problem_names() {
                println!("  {name}");
            }
            println!("optimizers:");
            for name in OPTIMIZER_NAMES {
                println!("  {name}");
            }
        }
        Command::Rank { summary } => {
            let rows = harness::read_summary(&summary)?;
            let (rows, table) = harness::rerank(&rows);
            println!("problem,optimizer,mean,variance,rank_m,rank_v");
            for r in &rows {
                println!("{},{},{:e},{:e},{},{}", r.problem, r.optimizer, r.mean, r.variance, r.rank_m, r.rank_v);
            }
            println!();
            print_averages(&table);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error [{}]: {e}", e.category());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
