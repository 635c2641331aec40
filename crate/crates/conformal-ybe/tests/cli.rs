//! Batch front-end tests: exit codes, report determinism, file-format round
//! trips, and one end-to-end run of the real binary.

use conformal_ybe::cli::{self, Command, ConstructKind, Format, JobSpec};
use conformal_ybe::format::{parse_object, realize, write_object};
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

#[test]
fn check_virasoro_passes() {
    let out = cli::run(&job(Command::Check, vec![data("virasoro.json")]));
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
    assert!(out.stdout.contains("overall: pass"));
}

#[test]
fn check_broken_virasoro_fails_with_residual() {
    let out = cli::run(&job(Command::Check, vec![data("broken_virasoro.json")]));
    assert_eq!(out.status, cli::EXIT_FAIL);
    assert!(out.stdout.contains("overall: FAIL"));
    assert!(out.stdout.contains("residual:"));
}

#[test]
fn check_all_corpus_files() {
    for file in [
        "virasoro.json",
        "two_dim_leibniz.json",
        "perm_example.json",
        "parametric_double_dialgebra.json",
        "parametric_double_conformal.json",
        "parametric_double_bidialgebra.json",
        "ldca_example.json",
        "current_xxy_dual_rep.json",
    ] {
        let out = cli::run(&job(Command::Check, vec![data(file)]));
        assert_eq!(out.status, cli::EXIT_PASS, "{}: {}", file, out.stdout);
    }
}

#[test]
fn ybe_cdnybe_on_corpus_solution() {
    let out = cli::run(&job(
        Command::YbeCdnybe,
        vec![
            data("parametric_double_dialgebra.json"),
            data("parametric_double_r.json"),
        ],
    ));
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
}

#[test]
fn ybe_clcybe_on_lifted_solution() {
    let out = cli::run(&job(
        Command::YbeClcybe,
        vec![
            data("parametric_double_conformal.json"),
            data("parametric_double_r.json"),
        ],
    ));
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
}

#[test]
fn diagnose_all_variants() {
    for cmd in [
        Command::DiagnoseCoboundary,
        Command::DiagnoseBidialgebra,
        Command::DiagnoseRelcdn,
    ] {
        let alg = if cmd == Command::DiagnoseCoboundary {
            data("parametric_double_conformal.json")
        } else {
            data("parametric_double_dialgebra.json")
        };
        let out = cli::run(&job(cmd, vec![alg, data("parametric_double_r.json")]));
        assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
    }
}

#[test]
fn construct_corresponding_matches_golden_file() {
    let dir = tempdir();
    let out_path = dir.join("constructed.json");
    let mut j = job(
        Command::Construct(ConstructKind::Corresponding),
        vec![data("parametric_double_dialgebra.json")],
    );
    j.out = Some(out_path.clone());
    let out = cli::run(&j);
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
    std::fs::write(&out_path, &out.file_output.as_ref().unwrap().1).unwrap();
    let constructed = std::fs::read_to_string(&out_path).unwrap();
    let golden = std::fs::read_to_string(data("parametric_double_conformal.json")).unwrap();
    assert_eq!(constructed, golden);
}

#[test]
fn construct_current_then_check() {
    let dir = tempdir();
    let out_path = dir.join("current.json");
    let mut j = job(
        Command::Construct(ConstructKind::Current),
        vec![data("two_dim_leibniz.json")],
    );
    j.out = Some(out_path.clone());
    let out = cli::run(&j);
    assert_eq!(out.status, cli::EXIT_PASS);
    std::fs::write(&out_path, &out.file_output.as_ref().unwrap().1).unwrap();
    let check = cli::run(&job(Command::Check, vec![out_path]));
    assert_eq!(check.status, cli::EXIT_PASS);
}

#[test]
fn construct_chain_perm_to_lift() {
    // perm → novikov → conformal, checking each stage.
    let dir = tempdir();
    let novikov_path = dir.join("novikov.json");
    let mut j = job(
        Command::Construct(ConstructKind::PermNovikov),
        vec![data("perm_example.json")],
    );
    j.out = Some(novikov_path.clone());
    let out = cli::run(&j);
    assert_eq!(out.status, cli::EXIT_PASS);
    std::fs::write(&novikov_path, &out.file_output.as_ref().unwrap().1).unwrap();
    assert_eq!(
        cli::run(&job(Command::Check, vec![novikov_path.clone()])).status,
        cli::EXIT_PASS
    );
    let conf_path = dir.join("conformal.json");
    let mut j2 = job(
        Command::Construct(ConstructKind::Corresponding),
        vec![novikov_path],
    );
    j2.out = Some(conf_path.clone());
    let out2 = cli::run(&j2);
    assert_eq!(out2.status, cli::EXIT_PASS);
    std::fs::write(&conf_path, &out2.file_output.as_ref().unwrap().1).unwrap();
    assert_eq!(
        cli::run(&job(Command::Check, vec![conf_path])).status,
        cli::EXIT_PASS
    );
}

#[test]
fn construct_lift_bidialgebra_passes_check() {
    let dir = tempdir();
    let out_path = dir.join("bialgebra.json");
    let mut j = job(
        Command::Construct(ConstructKind::LiftBidialgebra),
        vec![data("parametric_double_bidialgebra.json")],
    );
    j.out = Some(out_path.clone());
    let out = cli::run(&j);
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
    std::fs::write(&out_path, &out.file_output.as_ref().unwrap().1).unwrap();
    let check = cli::run(&job(Command::Check, vec![out_path]));
    assert_eq!(check.status, cli::EXIT_PASS, "{}", check.stdout);
}

#[test]
fn construct_dual_rep_and_semidirect() {
    let dir = tempdir();
    let sd_path = dir.join("double.json");
    let mut j = job(
        Command::Construct(ConstructKind::Semidirect),
        vec![data("current_xxy_dual_rep.json")],
    );
    j.out = Some(sd_path.clone());
    let out = cli::run(&j);
    assert_eq!(out.status, cli::EXIT_PASS, "{}", out.stdout);
    std::fs::write(&sd_path, &out.file_output.as_ref().unwrap().1).unwrap();
    assert_eq!(
        cli::run(&job(Command::Check, vec![sd_path])).status,
        cli::EXIT_PASS
    );

    let dual_path = dir.join("dual.json");
    let mut j2 = job(
        Command::Construct(ConstructKind::DualRep),
        vec![data("current_xxy_dual_rep.json")],
    );
    j2.out = Some(dual_path.clone());
    let out2 = cli::run(&j2);
    assert_eq!(out2.status, cli::EXIT_PASS);
    std::fs::write(&dual_path, &out2.file_output.as_ref().unwrap().1).unwrap();
    assert_eq!(
        cli::run(&job(Command::Check, vec![dual_path])).status,
        cli::EXIT_PASS
    );
}

#[test]
fn machine_reports_are_byte_identical() {
    let mut j = job(
        Command::Check,
        vec![data("parametric_double_dialgebra.json")],
    );
    j.format = Format::Machine;
    let a = cli::run(&j);
    let b = cli::run(&j);
    assert_eq!(a.status, cli::EXIT_PASS);
    assert_eq!(a.stdout, b.stdout);
    let parsed: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(parsed["overall"], "pass");
    assert!(parsed["meta"]["tool_version"].is_string());
    assert!(parsed["meta"]["input_hash"].is_string());
    assert!(parsed["items"]
        .as_array()
        .map(|v| !v.is_empty())
        .unwrap_or(false));
}

#[test]
fn file_round_trip_on_canonical_files() {
    // parse ∘ write = identity on canonical files.
    for file in [
        "virasoro.json",
        "parametric_double_dialgebra.json",
        "parametric_double_conformal.json",
        "parametric_double_r.json",
        "parametric_double_bidialgebra.json",
    ] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let obj = parse_object(&text).unwrap();
        assert_eq!(write_object(&obj), text, "{}", file);
        assert!(realize(&obj, &[]).is_ok());
    }
}

#[test]
fn exit_codes_for_bad_inputs() {
    // Unreadable file → parse error.
    let out = cli::run(&job(
        Command::Check,
        vec![PathBuf::from("/nonexistent.json")],
    ));
    assert_eq!(out.status, cli::EXIT_PARSE);
    // Syntactically broken JSON → parse error.
    let dir = tempdir();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = cli::run(&job(Command::Check, vec![bad]));
    assert_eq!(out.status, cli::EXIT_PARSE);
    // An r-matrix cannot be checked standalone → precondition failure.
    let out = cli::run(&job(Command::Check, vec![data("parametric_double_r.json")]));
    assert_eq!(out.status, cli::EXIT_PRECONDITION);
    // Mixing kinds in ybe → precondition failure.
    let out = cli::run(&job(
        Command::YbeCdnybe,
        vec![data("virasoro.json"), data("parametric_double_r.json")],
    ));
    assert_eq!(out.status, cli::EXIT_PRECONDITION);
}

#[test]
fn binary_end_to_end() {
    let exe = env!("CARGO_BIN_EXE_conformal-ybe");
    let out = std::process::Command::new(exe)
        .args(["check", data("virasoro.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("overall: pass"));

    let out = std::process::Command::new(exe)
        .args([
            "ybe",
            "cdnybe",
            data("parametric_double_dialgebra.json").to_str().unwrap(),
            data("parametric_double_r.json").to_str().unwrap(),
            "--format",
            "machine",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(parsed["overall"], "pass");

    let out = std::process::Command::new(exe)
        .args(["check", data("broken_virasoro.json").to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(cli::EXIT_FAIL));
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "conformal-ybe-test-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
