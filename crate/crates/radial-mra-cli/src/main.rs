//! Command-line front end for the radial multiresolution library.
//!
//! Every failure path prints one machine-readable JSON object on
//! stderr; exit codes are 0 (success, all tolerances met), 1
//! (tolerance or internal failure), and 2 (malformed input or schema
//! violation). See `--help` and the per-subcommand help for the file
//! formats.

mod commands;
mod errors;
mod formats;
mod tolerances;

use clap::{Parser, Subcommand};

use commands::{cwt, fwt, plotdata, scaling, transform};
use errors::Result;

#[derive(Parser)]
#[command(
    name = "radial-mra",
    version,
    about = "Radial multiresolution analysis: transforms, scaling functions, filter banks, scale-space analysis, and frame checks",
    propagate_version = true
)]
struct Cli {
    /// Worker-thread cap (default: the RADIAL_MRA_THREADS environment
    /// variable, else one thread per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forward or inverse radial transform of a sampled profile.
    Hankel(transform::HankelArgs),
    /// Generalized translation of a sampled radial profile.
    Translate(transform::TranslateArgs),
    /// Scaling-function construction and diagnostics.
    #[command(subcommand)]
    Scaling(scaling::ScalingCommand),
    /// Refinement-filter operations.
    #[command(subcommand)]
    Filter(scaling::FilterCommand),
    /// Wavelet construction.
    #[command(subcommand)]
    Wavelet(scaling::WaveletCommand),
    /// Fast filter-bank decomposition and reconstruction.
    #[command(subcommand)]
    Fwt(fwt::FwtCommand),
    /// Continuous scale-space transform.
    #[command(subcommand)]
    Cwt(cwt::CwtCommand),
    /// Frame-bound estimation and energy sandwich checks.
    #[command(subcommand)]
    Frame(cwt::FrameCommand),
    /// Figure-ready CSV tables.
    Plotdata(plotdata::PlotdataArgs),
}

fn thread_cap(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| {
        std::env::var("RADIAL_MRA_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
    })
}

fn dispatch(command: &Command) -> Result<()> {
    match command {
        Command::Hankel(args) => transform::hankel(args),
        Command::Translate(args) => transform::translate(args),
        Command::Scaling(cmd) => match cmd {
            scaling::ScalingCommand::Build(args) => scaling::build(args),
            scaling::ScalingCommand::Orthogonalize(args) => scaling::orthogonalize(args),
            scaling::ScalingCommand::Validate(args) => scaling::validate(args),
        },
        Command::Filter(cmd) => match cmd {
            scaling::FilterCommand::Extract(args) => scaling::extract(args),
        },
        Command::Wavelet(cmd) => match cmd {
            scaling::WaveletCommand::Build(args) => scaling::wavelet_build(args),
        },
        Command::Fwt(cmd) => match cmd {
            fwt::FwtCommand::Decompose(args) => fwt::run_decompose(args),
            fwt::FwtCommand::Reconstruct(args) => fwt::run_reconstruct(args),
            fwt::FwtCommand::Qr(args) => fwt::run_qr(args),
        },
        Command::Cwt(cmd) => match cmd {
            cwt::CwtCommand::Run(args) => cwt::run(args),
        },
        Command::Frame(cmd) => match cmd {
            cwt::FrameCommand::Check(args) => cwt::check(args),
        },
        Command::Plotdata(args) => plotdata::plotdata(args),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(n) = thread_cap(cli.threads) {
        // A second global-pool initialization (e.g. in tests) is not an
        // error worth dying for; the first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli.command) {
        Ok(()) => {}
        Err(err) => {
            err.emit();
            std::process::exit(err.exit_code());
        }
    }
}
