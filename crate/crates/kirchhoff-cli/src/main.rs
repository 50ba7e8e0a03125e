use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kirchhoff_cli::config::{ExperimentConfig, Mode};
use kirchhoff_cli::error::Result;
use kirchhoff_cli::plot::emit_plot;
use kirchhoff_cli::record::{read_csv, to_csv_string};
use kirchhoff_cli::runner::{run_sweep, run_table};

#[derive(Parser)]
#[command(name = "kirchhoff", about = "Kirchhoff-index robustness experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One-link addition table: one row per (size, rep)
    TableAdd(RunArgs),
    /// One-link removal table: one row per (size, rep)
    TableRemove(RunArgs),
    /// Cumulative h-sweep with add and remove branches per base graph
    Sweep(RunArgs),
    /// Render a sweep CSV (one mode, one base graph) as an SVG curve
    Plot(PlotArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated graph orders, e.g. 10,20,100
    #[arg(long, value_delimiter = ',', default_value = "100")]
    sizes: Vec<usize>,
    /// Edge probability of the generated graphs
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Largest number of perturbed links in a sweep
    #[arg(long, default_value_t = 1)]
    h_max: usize,
    /// Replications per size
    #[arg(long, default_value_t = 1)]
    reps: u64,
    /// Base RNG seed; each rep draws from its own stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output path; stdout if omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Analyze this edge-list file instead of generating graphs
    #[arg(long)]
    graph_in: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// CSV produced by a sweep run
    #[arg(long = "in")]
    input: PathBuf,
    /// SVG output path; a sidecar .txt table is written next to it
    #[arg(long)]
    out: PathBuf,
}

fn to_config(args: &RunArgs, mode: Mode) -> ExperimentConfig {
    ExperimentConfig {
        mode,
        sizes: args.sizes.clone(),
        p: args.p,
        h_max: args.h_max,
        reps: args.reps,
        seed: args.seed,
        output_path: args.out.clone(),
        graph_in: args.graph_in.clone(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<()> = (|| {
        match cli.command {
            Command::TableAdd(args) => {
                let cfg = to_config(&args, Mode::TableAdd);
                let records = run_table(&cfg)?;
                if cfg.output_path.is_none() {
                    print!("{}", to_csv_string(&records));
                }
            }
            Command::TableRemove(args) => {
                let cfg = to_config(&args, Mode::TableRemove);
                let records = run_table(&cfg)?;
                if cfg.output_path.is_none() {
                    print!("{}", to_csv_string(&records));
                }
            }
            Command::Sweep(args) => {
                let cfg = to_config(&args, Mode::Sweep);
                let records = run_sweep(&cfg)?;
                if cfg.output_path.is_none() {
                    print!("{}", to_csv_string(&records));
                }
            }
            Command::Plot(args) => {
                let records = read_csv(&args.input)?;
                emit_plot(&records, &args.out)?;
            }
        }
        Ok(())
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
