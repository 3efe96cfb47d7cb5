//! The `sammy` command: run programs, validate and compare structure files,
//! export DOT, build the standard constructions, search complexities, and
//! enumerate programs.
//!
//! Exit codes: 0 ok, 1 input/output, 2 parse, 3 runtime, 4 resource limit,
//! 5 not found / not isomorphic.

mod commands;
mod config;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sammy", version, about = "Interpreter and toolbox for the Sammy language")]
struct Cli {
    /// Maximum interpreter steps per run [env: MAX_STEPS]
    #[arg(long, global = true)]
    max_steps: Option<u64>,
    /// Object cap for constructed categories [env: MAX_OBJECTS]
    #[arg(long, global = true)]
    max_objects: Option<usize>,
    /// Morphism cap for constructed categories [env: MAX_MORPHISMS]
    #[arg(long, global = true)]
    max_morphisms: Option<usize>,
    /// Path-length bound for presentation saturation [env: SATURATION_BOUND]
    #[arg(long, global = true)]
    saturation_bound: Option<usize>,
    /// Output format: json, dot or text [env: FORMAT]
    #[arg(long, global = true)]
    format: Option<String>,
    /// Evaluate search candidates on worker threads [env: PARALLEL]
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a .sammy program with structure files as inputs
    Run {
        program: PathBuf,
        inputs: Vec<PathBuf>,
    },
    /// Validate a structure file and print the report
    Check { path: PathBuf },
    /// Test two structure files for isomorphism
    Iso { a: PathBuf, b: PathBuf },
    /// Export a category file as DOT
    Export { path: PathBuf },
    /// Build a named construction (omega, omega_d, omega_i, omega_bar,
    /// three_dot, three_hat, two_tilde, lollipop)
    Build {
        name: String,
        params: Vec<usize>,
    },
    /// Search for the shortest program producing the target structure
    Ksearch {
        target: PathBuf,
        #[arg(long, default_value_t = 3)]
        budget: u32,
        #[arg(long)]
        given: Vec<PathBuf>,
    },
    /// Enumerate canonical programs up to a token bound
    Enumerate {
        #[arg(long, default_value_t = 16)]
        max_tokens: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = config::Config::resolve(
        cli.max_steps,
        cli.max_objects,
        cli.max_morphisms,
        cli.saturation_bound,
        cli.format.as_deref(),
        cli.parallel,
    );
    let config = match config {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.command {
        Command::Run { program, inputs } => commands::cmd_run(&program, &inputs, &config),
        Command::Check { path } => commands::cmd_check(&path, &config),
        Command::Iso { a, b } => commands::cmd_iso(&a, &b, &config),
        Command::Export { path } => commands::cmd_export(&path, &config),
        Command::Build { name, params } => commands::cmd_build(&name, &params, &config),
        Command::Ksearch {
            target,
            budget,
            given,
        } => commands::cmd_ksearch(&target, budget, &given, &config),
        Command::Enumerate { max_tokens, limit } => {
            commands::cmd_enumerate(max_tokens, limit, &config)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
