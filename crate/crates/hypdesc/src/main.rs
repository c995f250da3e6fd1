use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypdesc::documents::pretty;
use hypdesc::*;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "hypdesc", version, about = "Descent of hyperelliptic curves with cyclic reduced automorphism group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonal or dihedral invariants of the normal form.
    Invariants {
        file: PathBuf,
        /// Scale to the canonical weighted projective representative.
        #[arg(long)]
        normalize: bool,
    },
    /// A model over k, a conic model, or an obstruction certificate (exit 10).
    Descend { file: PathBuf },
    /// Cocycle and extension data; exit 10 when no hyperelliptic model exists.
    Obstruction { file: PathBuf },
    /// A member of the family with prescribed d1, d2 and its certificate.
    Counterexample {
        #[arg(long, allow_hyphen_values = true)]
        d1: String,
        #[arg(long, allow_hyphen_values = true)]
        d2: String,
        #[arg(long)]
        n: u32,
        #[arg(long = "l")]
        ell: usize,
        /// Norm-one element of k(√d1).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        u: String,
        /// JSON array a_m, …, a_ℓ; random small coefficients when omitted.
        #[arg(long, allow_hyphen_values = true)]
        upper: Option<String>,
        /// The xz-twisted family.
        #[arg(long)]
        xz: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal generators of the invariant monomials for weight m.
    Gens {
        #[arg(long)]
        m: usize,
    },
    /// Check a descent document against its input form.
    Verify { input: PathBuf, output: PathBuf },
}

fn read(path: &Path) -> DocResult<String> {
    std::fs::read_to_string(path).map_err(|e| DocError::Parse(format!("{}: {e}", path.display())))
}

fn load_form(path: &Path) -> DocResult<FormDocument> {
    FormDocument::parse(&read(path)?)
}

fn run(cli: Cli) -> DocResult<Outcome> {
    match cli.command {
        Command::Invariants { file, normalize } => cmd_invariants(&load_form(&file)?, normalize),
        Command::Descend { file } => cmd_descend(&load_form(&file)?),
        Command::Obstruction { file } => cmd_obstruction(&load_form(&file)?),
        Command::Counterexample { d1, d2, n, ell, u, upper, xz, seed } => {
            cmd_counterexample(&CounterexampleArgs { d1, d2, n, ell, u, upper, xz, seed })
        }
        Command::Gens { m } => cmd_gens(m),
        Command::Verify { input, output } => {
            let out: Value = serde_json::from_str(&read(&output)?)?;
            cmd_verify(&load_form(&input)?, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", pretty(&o.doc));
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("hypdesc: {e}");
            print!("{}", pretty(&error_document(&e)));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
