use clap::{Parser, Subcommand};
use conformal_ybe::cli::{self, Command as JobCommand, ConstructKind, Format, JobSpec};
use conformal_ybe::format::parse_star_sign;
use conformal_ybe::novikov::StarSign;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "conformal-ybe",
    about = "Exact checker for Leibniz conformal (bi)algebras, Novikov (bi-)dialgebras and their Yang-Baxter equations",
    version
)]
struct Args {
    #[command(subcommand)]
    command: Cmd,

    /// Report format.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Output path for constructed objects or machine reports.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Extra parameter names, comma separated (e.g. `b,c`).
    #[arg(long, global = true, value_delimiter = ',')]
    params: Vec<String>,

    /// Sign convention for the derived star operator.
    #[arg(long, global = true, default_value = "plus")]
    star_sign: String,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check the defining axioms of the object in FILE.
    Check { file: PathBuf },
    /// Build a derived object and write it in the same file format.
    Construct {
        /// current | corresponding | semidirect | dual_rep | coboundary |
        /// lift_bidialgebra | bicrossed | perm_novikov
        kind: String,
        inputs: Vec<PathBuf>,
    },
    /// Evaluate a Yang-Baxter residual.
    Ybe {
        /// clcybe | cdnybe
        which: String,
        algebra: PathBuf,
        rmatrix: PathBuf,
    },
    /// Closed-form diagnostics for coboundary structures.
    Diagnose {
        /// coboundary | bidialgebra | relcdn
        which: String,
        algebra: PathBuf,
        rmatrix: PathBuf,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let format = match args.format.as_str() {
        "text" => Format::Text,
        "machine" => Format::Machine,
        other => {
            eprintln!("error: unknown format '{}' (use text|machine)", other);
            return ExitCode::from(cli::EXIT_PRECONDITION as u8);
        }
    };
    let star_sign = match parse_star_sign(&args.star_sign) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(cli::EXIT_PRECONDITION as u8);
        }
    };
    let (command, inputs) = match args.command {
        Cmd::Check { file } => (JobCommand::Check, vec![file]),
        Cmd::Construct { kind, inputs } => match ConstructKind::from_name(&kind) {
            Some(k) => (JobCommand::Construct(k), inputs),
            None => {
                eprintln!("error: unknown construction '{}'", kind);
                return ExitCode::from(cli::EXIT_PRECONDITION as u8);
            }
        },
        Cmd::Ybe {
            which,
            algebra,
            rmatrix,
        } => match which.as_str() {
            "clcybe" => (JobCommand::YbeClcybe, vec![algebra, rmatrix]),
            "cdnybe" => (JobCommand::YbeCdnybe, vec![algebra, rmatrix]),
            other => {
                eprintln!("error: unknown equation '{}' (use clcybe|cdnybe)", other);
                return ExitCode::from(cli::EXIT_PRECONDITION as u8);
            }
        },
        Cmd::Diagnose {
            which,
            algebra,
            rmatrix,
        } => match which.as_str() {
            "coboundary" => (JobCommand::DiagnoseCoboundary, vec![algebra, rmatrix]),
            "bidialgebra" => (JobCommand::DiagnoseBidialgebra, vec![algebra, rmatrix]),
            "relcdn" => (JobCommand::DiagnoseRelcdn, vec![algebra, rmatrix]),
            other => {
                eprintln!(
                    "error: unknown diagnostic '{}' (use coboundary|bidialgebra|relcdn)",
                    other
                );
                return ExitCode::from(cli::EXIT_PRECONDITION as u8);
            }
        },
    };
    let job = JobSpec {
        command,
        inputs,
        format,
        out: args.out,
        params: args.params,
        star_sign: if matches!(star_sign, StarSign::Minus) {
            StarSign::Minus
        } else {
            StarSign::Plus
        },
    };
    let outcome = cli::run(&job);
    if let Some((path, contents)) = &outcome.file_output {
        if let Err(e) = std::fs::write(path, contents) {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            return ExitCode::from(cli::EXIT_INTERNAL as u8);
        }
    }
    print!("{}", outcome.stdout);
    ExitCode::from(outcome.status as u8)
}
