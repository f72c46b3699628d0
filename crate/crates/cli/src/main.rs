//! `minpoly`: minimal polynomials of simple highest weight modules, with
//! certificates and diagnostics, as JSON.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minpoly_core::{Error, Mode};

#[derive(Parser, Debug)]
#[command(name = "minpoly", version, about = "Exact minimal polynomials of simple highest weight modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal polynomial of L(λ).
    Minpoly(Job),
    /// Shuffle decomposition of λ + ρ, or of a raw sequence when no rank is given.
    Shuffle(ShuffleJob),
    /// Certify the predicted polynomial, or the one given by --poly.
    Certify(Job),
    /// Projected resolvent series and their reconstructed denominators.
    Resolvent(Job),
    /// Inductive projection formulas checked order by order.
    Relcheck(Job),
    /// Trace series against the closed forms for sp/o.
    Ppdiag(Job),
    /// Even/odd classification of q(M) at λ (sp/o).
    Parity(Job),
    /// Minimal polynomial from explicit representation matrices.
    Oracle(Job),
    /// Dual pair (gl_n, gl_k) identities: `howe gl <n> <k>`.
    Howe(Job),
    /// Divisibility order of certified minimal polynomials.
    Poset(Job),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gl,
    Sp,
    O,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Fast,
    Certified,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Fast => Mode::Fast,
            ModeArg::Certified => Mode::Certified,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// fast: shuffle rule; certified: projection certificate.
    #[arg(long, value_enum, default_value = "fast")]
    pub mode: ModeArg,
    /// Truncation order of resolvent series.
    #[arg(long = "K", env = "MINPOLY_TRUNCATION")]
    pub truncation: Option<usize>,
    /// Depth bound: Schur-Weyl size cap (oracle), identity order (howe).
    #[arg(long)]
    pub depth: Option<usize>,
    /// Seed for sampled weights (poset).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled weights when poset gets no weight list.
    #[arg(long, default_value_t = 8)]
    pub samples: usize,
    /// Polynomial coefficients, ascending, comma separated (certify, parity).
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Odd orthogonal algebra o_{2n+1} instead of o_{2n}.
    #[arg(long)]
    pub odd: bool,
    /// Write the JSON document here instead of standard output.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Job {
    #[arg(value_enum)]
    pub family: FamilyArg,
    pub rank: usize,
    /// Comma-separated rationals such as `1,-1/2,0`.
    #[arg(allow_hyphen_values = true)]
    pub weight: Option<String>,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct ShuffleJob {
    #[arg(value_enum)]
    pub family: FamilyArg,
    /// A rank (then a weight), or a sequence to decompose as is.
    #[arg(allow_hyphen_values = true)]
    pub first: String,
    #[arg(allow_hyphen_values = true)]
    pub weight: Option<String>,
    #[command(flatten)]
    pub options: Options,
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Certification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAnnihilating { .. }
            | Error::NotMinimal { .. }
            | Error::CertificationFailed { .. }
            | Error::NoRationalFit { .. } => Failure::Certification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let (result, json) = match &cli.command {
        Command::Shuffle(job) => (commands::shuffle(job), job.options.json.clone()),
        Command::Minpoly(job) => (commands::minpoly(job), job.options.json.clone()),
        Command::Certify(job) => (commands::certify(job), job.options.json.clone()),
        Command::Resolvent(job) => (commands::resolvent(job), job.options.json.clone()),
        Command::Relcheck(job) => (commands::relcheck(job), job.options.json.clone()),
        Command::Ppdiag(job) => (commands::ppdiag(job), job.options.json.clone()),
        Command::Parity(job) => (commands::parity(job), job.options.json.clone()),
        Command::Oracle(job) => (commands::oracle(job), job.options.json.clone()),
        Command::Howe(job) => (commands::howe(job), job.options.json.clone()),
        Command::Poset(job) => (commands::poset(job), job.options.json.clone()),
    };
    match result {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.document).expect("serializable output") + "\n";
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => {
                    // a closed pipe is not an error worth reporting
                    let _ = std::io::stdout().write_all(text.as_bytes());
                }
            }
            if out.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Certification(msg)) => {
            eprintln!("certification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
