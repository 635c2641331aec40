//! Drive the batch front end programmatically on the shipped corpus files:
//! checks, Yang-Baxter residuals, a construction chain, and a
//! machine-readable report.

use conformal_ybe::cli::{self, Command, ConstructKind, Format, JobSpec};
use conformal_ybe::novikov::StarSign;
use std::path::{Path, PathBuf};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn job(command: Command, inputs: Vec<PathBuf>) -> JobSpec {
    JobSpec {
        command,
        inputs,
        format: Format::Text,
        out: None,
        params: vec![],
        star_sign: StarSign::Plus,
    }
}

fn main() {
    for file in ["virasoro.json", "parametric_double_dialgebra.json"] {
        let out = cli::run(&job(Command::Check, vec![data(file)]));
        println!("check {}:\n{}", file, out.stdout);
        assert_eq!(out.status, cli::EXIT_PASS);
    }

    let out = cli::run(&job(
        Command::YbeCdnybe,
        vec![
            data("parametric_double_dialgebra.json"),
            data("parametric_double_r.json"),
        ],
    ));
    println!("ybe cdnybe:\n{}", out.stdout);

    let out = cli::run(&job(
        Command::Construct(ConstructKind::Corresponding),
        vec![data("parametric_double_dialgebra.json")],
    ));
    println!(
        "construct corresponding → {} bytes of canonical JSON",
        out.stdout.len()
    );

    let mut machine = job(Command::Check, vec![data("virasoro.json")]);
    machine.format = Format::Machine;
    let out = cli::run(&machine);
    println!("machine report:\n{}", out.stdout);
}
