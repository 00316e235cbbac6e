//! `bcla` — bicomplex linear algebra on JSON matrix files.
//!
//! Exit codes: 0 success, 1 parse/usage, 2 not-self-adjoint,
//! 3 no-convergence, 4 not-cyclic.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use bicomplex_linalg::cli::{
    cmd_eig, cmd_measure, cmd_split, cmd_verify, exit_code, exit_code_for, parse_matrix_file,
    parse_vector_json, MatrixFile,
};
use bicomplex_linalg::error::{Error, Result};
use bicomplex_linalg::vector::BCVector;

#[derive(Parser)]
#[command(name = "bcla", version, about = "Bicomplex linear algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Pretty-print the JSON report (default is compact machine output).
    #[arg(long, global = true)]
    pretty: bool,

    /// Emit compact machine JSON (the default; kept as an explicit flag).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Split a bicomplex matrix into its two complex components.
    Split {
        #[arg(long)]
        input: String,
    },
    /// Spectral decomposition of a self-adjoint matrix.
    Eig {
        #[arg(long)]
        input: String,
        /// Residual tolerance, relative to 1 + ||T||.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Spectral measure and L2 unitary of a cyclic vector.
    Measure {
        #[arg(long)]
        input: String,
        /// Vector as a path to a JSON array of 4-tuples, or inline JSON.
        #[arg(long)]
        vector: Option<String>,
        /// Search for a cyclic vector instead of requiring one.
        #[arg(long)]
        find_cyclic: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Randomized invariant suites; deterministic under a fixed seed.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

fn load(path: &str) -> Result<MatrixFile> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    parse_matrix_file(&text)
}

fn load_vector(spec: &str) -> Result<BCVector<f64>> {
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        fs::read_to_string(spec).map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?
    };
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid vector JSON: {e}")))?;
    parse_vector_json(&v)
}

fn run(cmd: &Command) -> Result<(Value, i32)> {
    match cmd {
        Command::Split { input } => Ok((cmd_split(&load(input)?)?, exit_code::OK)),
        Command::Eig { input, tol } => {
            let report = cmd_eig(&load(input)?, *tol)?;
            let code = if report["pass"].as_bool() == Some(true) {
                exit_code::OK
            } else {
                exit_code::NO_CONVERGENCE
            };
            Ok((report, code))
        }
        Command::Measure {
            input,
            vector,
            find_cyclic,
            tol,
        } => {
            let file = load(input)?;
            let v = vector.as_deref().map(load_vector).transpose()?;
            let report = cmd_measure(&file, v, *find_cyclic, *tol)?;
            let code = if report["pass"].as_bool() == Some(true) {
                exit_code::OK
            } else {
                exit_code::NO_CONVERGENCE
            };
            Ok((report, code))
        }
        Command::Verify { seed, trials, tol } => {
            Ok((cmd_verify(*seed, *trials, *tol), exit_code::OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, code) = match run(&cli.command) {
        Ok(r) => r,
        Err(err) => {
            let report = serde_json::json!({
                "error": err.to_string(),
                "exit_code": exit_code_for(&err),
            });
            let out = if cli.pretty {
                serde_json::to_string_pretty(&report).unwrap()
            } else {
                serde_json::to_string(&report).unwrap()
            };
            println!("{out}");
            return ExitCode::from(exit_code_for(&err) as u8);
        }
    };
    let out = if cli.pretty {
        serde_json::to_string_pretty(&report).unwrap()
    } else {
        serde_json::to_string(&report).unwrap()
    };
    println!("{out}");
    ExitCode::from(code as u8)
}
