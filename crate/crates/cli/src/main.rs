//! `saft`: special affine Fourier transforms, sampling, wavelets and
//! collocation approximation from the command line.

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{approx, check, sample, transform, wavelet};
use config::{ConfigError, MatrixArgs, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "saft", version, about = "Special affine Fourier transform toolkit")]
struct Cli {
    #[command(flatten)]
    matrix: MatrixArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Forward or inverse transform of a built-in signal or a CSV file.
    Transform(transform::TransformArgs),
    /// Sample a band-limited signal and reconstruct it on a grid.
    Sample(sample::SampleArgs),
    /// Tabulate a Shannon or Haar wavelet.
    Wavelet(wavelet::WaveletArgs),
    /// Collocation error table for levels J = 1..=jmax.
    Approx(approx::ApproxArgs),
    /// Run the invariant suites and print a JSON report.
    Check(check::CheckArgs),
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let cfg = RunConfig::resolve(&cli.matrix)?;
    match &cli.command {
        Command::Transform(args) => transform::run(&cfg, args)?,
        Command::Sample(args) => sample::run(&cfg, args)?,
        Command::Wavelet(args) => wavelet::run(&cfg, args)?,
        Command::Approx(args) => approx::run(&cfg, args)?,
        Command::Check(args) => return check::run(&cfg, args),
    }
    Ok(true)
}

/// A closed downstream pipe (`saft ... | head`) is not a failure.
fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<csv::Error>().is_some_and(|ce| matches!(ce.kind(), csv::ErrorKind::Io(io) if io.kind() == std::io::ErrorKind::BrokenPipe))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.chain().any(|c| c.is::<ConfigError>()) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
