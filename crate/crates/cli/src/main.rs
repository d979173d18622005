use clap::{Args, Parser, Subcommand};
use csdc::run::{run, Mode, RunConfig};
use csdc_core::{DEFAULT_TOL, DEFAULT_ZERO_ANGLE};
use std::path::PathBuf;
use std::process::ExitCode;

/// Compile unitary matrices to SEO gate files and back.
#[derive(Parser)]
#[command(name = "csdc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix file to SEO file.
    Compile {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        #[command(flatten)]
        tol: Tolerance,
        /// Radians.
        #[arg(long, default_value_t = DEFAULT_ZERO_ANGLE, value_parser = positive)]
        zero_angle_threshold: f64,
        /// Keep factors with zero rotation angles.
        #[arg(long)]
        no_opt: bool,
    },
    /// SEO file to matrix file.
    Decompile {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        /// Register size; defaults to the largest bit index plus one.
        #[arg(long)]
        nbits: Option<usize>,
    },
    /// Check that an SEO file implements a matrix.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        seo: PathBuf,
        #[command(flatten)]
        tol: Tolerance,
        #[arg(long)]
        nbits: Option<usize>,
    },
}

#[derive(Args)]
struct Tolerance {
    /// Unitarity and residual tolerance, multiplied by the dimension.
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
    tol: f64,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got `{s}`")),
    }
}

fn config(cmd: Command) -> RunConfig {
    match cmd {
        Command::Compile {
            input,
            output,
            tol,
            zero_angle_threshold,
            no_opt,
        } => RunConfig {
            output: Some(output),
            unitarity_tol: tol.tol,
            zero_angle_threshold,
            optimize: !no_opt,
            ..RunConfig::new(Mode::Compile, input)
        },
        Command::Decompile { input, output, nbits } => RunConfig {
            output: Some(output),
            nbits_override: nbits,
            ..RunConfig::new(Mode::Decompile, input)
        },
        Command::Verify { input, seo, tol, nbits } => RunConfig {
            seo: Some(seo),
            unitarity_tol: tol.tol,
            nbits_override: nbits,
            ..RunConfig::new(Mode::Verify, input)
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&config(cli.command)) {
        Ok(report) => {
            eprint!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("csdc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
