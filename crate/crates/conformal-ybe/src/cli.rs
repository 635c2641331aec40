//! Batch front end: parse object files, dispatch checks, constructions and
//! Yang-Baxter computations, and emit deterministic reports.
//!
//! Exit status: 0 pass/success, 1 check failed, 2 parse error,
//! 3 precondition failure, 4 internal invariant violation.

use crate::bialgebra::{self, RMatrix};
use crate::bidialgebra::{self, ScalarTensor};
use crate::format::{self, Object, ObjectFile};
use crate::ldca;
use crate::novikov::{self, StarSign};
use crate::rep;
use crate::report::{Report, ReportItem};
use crate::tensor::TensorElement;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

/// A resolved batch job.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub params: Vec<String>,
    pub star_sign: StarSign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check,
    Construct(ConstructKind),
    YbeClcybe,
    YbeCdnybe,
    DiagnoseCoboundary,
    DiagnoseBidialgebra,
    DiagnoseRelcdn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructKind {
    Current,
    Corresponding,
    Semidirect,
    DualRep,
    Coboundary,
    LiftBidialgebra,
    Bicrossed,
    PermNovikov,
}

impl ConstructKind {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "current" => Some(ConstructKind::Current),
            "corresponding" => Some(ConstructKind::Corresponding),
            "semidirect" => Some(ConstructKind::Semidirect),
            "dual_rep" => Some(ConstructKind::DualRep),
            "coboundary" => Some(ConstructKind::Coboundary),
            "lift_bidialgebra" => Some(ConstructKind::LiftBidialgebra),
            "bicrossed" => Some(ConstructKind::Bicrossed),
            "perm_novikov" => Some(ConstructKind::PermNovikov),
            _ => None,
        }
    }
}

/// Outcome handed back to the binary: exit status plus rendered output.
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub file_output: Option<(PathBuf, String)>,
}

fn ok_text(s: impl Into<String>) -> Outcome {
    Outcome {
        status: EXIT_PASS,
        stdout: s.into(),
        file_output: None,
    }
}

fn failure(status: i32, msg: impl Into<String>) -> Outcome {
    Outcome {
        status,
        stdout: format!("error: {}\n", msg.into()),
        file_output: None,
    }
}

fn load(path: &Path) -> Result<(ObjectFile, Vec<u8>), Outcome> {
    let bytes = std::fs::read(path)
        .map_err(|e| failure(EXIT_PARSE, format!("cannot read {}: {}", path.display(), e)))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| failure(EXIT_PARSE, format!("{} is not UTF-8", path.display())))?;
    let obj = format::parse_object(&text)
        .map_err(|e| failure(EXIT_PARSE, format!("{}: {}", path.display(), e)))?;
    Ok((obj, bytes))
}

fn realize_input(job: &JobSpec, path: &Path) -> Result<(Object, Vec<u8>), Outcome> {
    let (obj, bytes) = load(path)?;
    let object = format::realize(&obj, &job.params)
        .map_err(|e| failure(EXIT_PARSE, format!("{}: {}", path.display(), e)))?;
    Ok((object, bytes))
}

fn render_report(job: &JobSpec, report: &Report, hash: &str, title: &str) -> Outcome {
    let status = if report.overall() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    match job.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", title);
            let _ = writeln!(s, "{}", report);
            let _ = writeln!(s, "elapsed: {:?}", report.elapsed);
            Outcome {
                status,
                stdout: s,
                file_output: None,
            }
        }
        Format::Machine => {
            let machine = format::machine_report(report, hash);
            let mut json = serde_json::to_string_pretty(&machine).expect("report serialization");
            json.push('\n');
            match &job.out {
                Some(path) => Outcome {
                    status,
                    stdout: String::new(),
                    file_output: Some((path.clone(), json)),
                },
                None => Outcome {
                    status,
                    stdout: json,
                    file_output: None,
                },
            }
        }
    }
}

fn scalar_r(t: &TensorElement) -> Result<ScalarTensor, Outcome> {
    let mut out = ScalarTensor::zero(t.bases[0].rank(), 2);
    for (idx, p) in t.terms() {
        match p.as_constant() {
            Some(s) => out.add_term(idx.clone(), s),
            None => {
                return Err(failure(
                    EXIT_PRECONDITION,
                    "this computation needs a scalar r-matrix (no D1/D2 coefficients)",
                ))
            }
        }
    }
    Ok(out)
}

fn check_object(job: &JobSpec, object: &Object) -> Result<Report, Outcome> {
    Ok(match object {
        Object::LeibnizConformal(a) => a.check_jacobi(),
        Object::LeibnizAlgebra(a) => a.check_leibniz(),
        Object::NovikovDialgebra(n) => n.check(),
        Object::Perm(p) => p.check(),
        Object::Codialgebra(basis, co) => co.check(basis),
        Object::Representation(rep) => rep.check(),
        Object::Bialgebra(a, co) => bialgebra::check_bialgebra(a, co),
        Object::Bidialgebra(b) => {
            let mut b = b.clone();
            b.star_sign = job.star_sign;
            b.check()
        }
        Object::MatchedPair(mp) => mp.check(),
        Object::Ldca(d) => d.check(),
        Object::Rmatrix(..) => {
            return Err(failure(
                EXIT_PRECONDITION,
                "an r-matrix has no standalone axioms; use `ybe` or `diagnose`",
            ))
        }
    })
}

/// Runs a job end to end. Pure apart from reading the input files.
pub fn run(job: &JobSpec) -> Outcome {
    match &job.command {
        Command::Check => {
            if job.inputs.len() != 1 {
                return failure(EXIT_PRECONDITION, "check takes exactly one input file");
            }
            let (object, bytes) = match realize_input(job, &job.inputs[0]) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let report = match check_object(job, &object) {
                Ok(r) => r,
                Err(o) => return o,
            };
            let hash = format::input_hash(&[bytes]);
            render_report(job, &report, &hash, "check")
        }
        Command::Construct(kind) => construct(job, *kind),
        Command::YbeClcybe => {
            let ((alg, bytes1), (rm, bytes2)) = match two_inputs(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let a = match alg {
                Object::LeibnizConformal(a) => a,
                Object::Bialgebra(a, _) => a,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "ybe clcybe needs a leibniz_conformal algebra and an rmatrix",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(basis, t) => {
                    if basis.generators != a.basis.generators {
                        return failure(EXIT_PRECONDITION, "r-matrix basis mismatch");
                    }
                    RMatrix::new(t)
                }
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let residual = bialgebra::clcybe(&a, &r);
            let mut report = Report::new();
            if residual.is_zero() {
                report.push(ReportItem::pass("clcybe"));
            } else {
                report.push(ReportItem::fail("clcybe", vec![], residual.to_string()));
            }
            let hash = format::input_hash(&[bytes1, bytes2]);
            render_report(job, &report, &hash, "ybe clcybe")
        }
        Command::YbeCdnybe => {
            let ((alg, bytes1), (rm, bytes2)) = match two_inputs(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let n = match alg {
                Object::NovikovDialgebra(n) => n,
                Object::Bidialgebra(b) => b.algebra,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "ybe cdnybe needs a novikov_dialgebra and an rmatrix",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(basis, t) => {
                    if basis.generators != n.basis.generators {
                        return failure(EXIT_PRECONDITION, "r-matrix basis mismatch");
                    }
                    match scalar_r(&t) {
                        Ok(s) => s,
                        Err(o) => return o,
                    }
                }
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let residual = bidialgebra::cdnybe_n(&n, &r);
            let mut report = Report::new();
            if residual.is_zero() {
                report.push(ReportItem::pass("cdnybe: N(r)=0"));
            } else {
                report.push(ReportItem::fail(
                    "cdnybe: N(r)=0",
                    vec![],
                    residual.display(&n.basis),
                ));
            }
            let hash = format::input_hash(&[bytes1, bytes2]);
            render_report(job, &report, &hash, "ybe cdnybe")
        }
        Command::DiagnoseCoboundary => {
            let ((alg, bytes1), (rm, bytes2)) = match two_inputs(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let a = match alg {
                Object::LeibnizConformal(a) => a,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "diagnose coboundary needs a leibniz_conformal algebra",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(_, t) => RMatrix::new(t),
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let report = bialgebra::coboundary_diagnostics(&a, &r);
            let hash = format::input_hash(&[bytes1, bytes2]);
            render_report(job, &report, &hash, "diagnose coboundary")
        }
        Command::DiagnoseBidialgebra => {
            let ((alg, bytes1), (rm, bytes2)) = match two_inputs(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let n = match alg {
                Object::NovikovDialgebra(n) => n,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "diagnose bidialgebra needs a novikov_dialgebra",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(_, t) => match scalar_r(&t) {
                    Ok(s) => s,
                    Err(o) => return o,
                },
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let mut report = bidialgebra::codialgebra_diagnostics(&n, &r, job.star_sign);
            report.merge(bidialgebra::bidialgebra_diagnostics(&n, &r, job.star_sign));
            let hash = format::input_hash(&[bytes1, bytes2]);
            render_report(job, &report, &hash, "diagnose bidialgebra")
        }
        Command::DiagnoseRelcdn => {
            let ((alg, bytes1), (rm, bytes2)) = match two_inputs(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let n = match alg {
                Object::NovikovDialgebra(n) => n,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "diagnose relcdn needs a novikov_dialgebra",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(_, t) => match scalar_r(&t) {
                    Ok(s) => s,
                    Err(o) => return o,
                },
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let report = match bidialgebra::relcdn_check(&n, &r) {
                Ok(r) => r,
                Err(e) => return failure(EXIT_PRECONDITION, e.to_string()),
            };
            let hash = format::input_hash(&[bytes1, bytes2]);
            render_report(job, &report, &hash, "diagnose relcdn")
        }
    }
}

type LoadedInput = (Object, Vec<u8>);

fn two_inputs(job: &JobSpec) -> Result<(LoadedInput, LoadedInput), Outcome> {
    if job.inputs.len() != 2 {
        return Err(failure(
            EXIT_PRECONDITION,
            "this command takes exactly two input files",
        ));
    }
    Ok((
        realize_input(job, &job.inputs[0])?,
        realize_input(job, &job.inputs[1])?,
    ))
}

fn emit_object(job: &JobSpec, obj: &ObjectFile, what: &str) -> Outcome {
    let text = format::write_object(obj);
    match &job.out {
        Some(path) => Outcome {
            status: EXIT_PASS,
            stdout: format!("wrote {} to {}\n", what, path.display()),
            file_output: Some((path.clone(), text)),
        },
        None => ok_text(text),
    }
}

fn construct(job: &JobSpec, kind: ConstructKind) -> Outcome {
    let one = |job: &JobSpec| -> Result<(Object, Vec<u8>), Outcome> {
        if job.inputs.len() != 1 {
            return Err(failure(
                EXIT_PRECONDITION,
                "this construction takes exactly one input file",
            ));
        }
        realize_input(job, &job.inputs[0])
    };
    match kind {
        ConstructKind::Current => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let alg = match object {
                Object::LeibnizAlgebra(a) => a,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct current needs a leibniz_algebra",
                    )
                }
            };
            match crate::algebra::current(&alg) {
                Ok(c) => emit_object(job, &format::conformal_to_file(&c), "leibniz_conformal"),
                Err(e) => failure(EXIT_PRECONDITION, e.to_string()),
            }
        }
        ConstructKind::Corresponding => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let n = match object {
                Object::NovikovDialgebra(n) => n,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct corresponding needs a novikov_dialgebra",
                    )
                }
            };
            let c = novikov::novikov_to_conformal(&n);
            emit_object(job, &format::conformal_to_file(&c), "leibniz_conformal")
        }
        ConstructKind::Semidirect => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let rep = match object {
                Object::Representation(r) => r,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct semidirect needs a representation",
                    )
                }
            };
            let c = rep::semidirect(&rep);
            emit_object(job, &format::conformal_to_file(&c), "leibniz_conformal")
        }
        ConstructKind::DualRep => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let rep = match object {
                Object::Representation(r) => r,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct dual_rep needs a representation",
                    )
                }
            };
            emit_object(
                job,
                &format::representation_to_file(&rep.dual()),
                "representation",
            )
        }
        ConstructKind::Coboundary => {
            if job.inputs.len() != 2 {
                return failure(
                    EXIT_PRECONDITION,
                    "construct coboundary takes an algebra file and an rmatrix file",
                );
            }
            let (alg, _) = match realize_input(job, &job.inputs[0]) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let (rm, _) = match realize_input(job, &job.inputs[1]) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let a = match alg {
                Object::LeibnizConformal(a) => a,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct coboundary needs a leibniz_conformal algebra",
                    )
                }
            };
            let r = match rm {
                Object::Rmatrix(_, t) => RMatrix::new(t),
                _ => return failure(EXIT_PRECONDITION, "second input must be an rmatrix"),
            };
            let co = bialgebra::coboundary_delta(&a, &r);
            emit_object(job, &format::bialgebra_to_file(&a, &co), "bialgebra")
        }
        ConstructKind::LiftBidialgebra => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let mut b = match object {
                Object::Bidialgebra(b) => b,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct lift_bidialgebra needs a bidialgebra",
                    )
                }
            };
            b.star_sign = job.star_sign;
            let (conf, alpha) = bidialgebra::lift_bidialgebra(&b);
            emit_object(job, &format::bialgebra_to_file(&conf, &alpha), "bialgebra")
        }
        ConstructKind::Bicrossed => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let mp = match object {
                Object::MatchedPair(mp) => mp,
                _ => {
                    return failure(
                        EXIT_PRECONDITION,
                        "construct bicrossed needs a matched_pair",
                    )
                }
            };
            match rep::bicrossed(&mp) {
                Ok(c) => emit_object(job, &format::conformal_to_file(&c), "leibniz_conformal"),
                Err(e) => failure(EXIT_PRECONDITION, e.to_string()),
            }
        }
        ConstructKind::PermNovikov => {
            let (object, _) = match one(job) {
                Ok(v) => v,
                Err(o) => return o,
            };
            let p = match object {
                Object::Perm(p) => p,
                _ => return failure(EXIT_PRECONDITION, "construct perm_novikov needs a perm"),
            };
            match novikov::perm_to_novikov(&p) {
                Ok(n) => emit_object(job, &format::dialgebra_to_file(&n), "novikov_dialgebra"),
                Err(e) => failure(EXIT_PRECONDITION, e.to_string()),
            }
        }
    }
}

/// Embeds an O-operator candidate taken from an LDCA file: convenience used
/// by examples and tests (identity operator on the associated pair).
pub fn embed_identity(d: &Ldca) -> Result<(crate::ConformalAlgebra, RMatrix), Outcome> {
    let (_, rep) = ldca::ldca_to_lca(d).map_err(|e| failure(EXIT_PRECONDITION, e.to_string()))?;
    let id = crate::ConformalLinearMap::identity(&d.basis);
    bialgebra::embed_symmetric_solution(&rep, &id)
        .map_err(|e| failure(EXIT_PRECONDITION, e.to_string()))
}

use crate::ldca::Ldca;

/// Convenience wrapper used by tests: run `check` on a file with defaults.
pub fn check_file(path: &Path) -> Outcome {
    run(&JobSpec {
        command: Command::Check,
        inputs: vec![path.to_path_buf()],
        format: Format::Text,
        out: None,
        params: vec![],
        star_sign: StarSign::Plus,
    })
}

impl Default for JobSpec {
    fn default() -> Self {
        JobSpec {
            command: Command::Check,
            inputs: vec![],
            format: Format::Text,
            out: None,
            params: vec![],
            star_sign: StarSign::Plus,
        }
    }
}

/// Instantiates every parameter of a dialgebra at a rational value; used by
/// the randomized property tests and examples.
pub fn instantiate_dialgebra(
    n: &novikov::NovikovDialgebra,
    values: &std::collections::BTreeMap<String, num_rational::BigRational>,
) -> novikov::NovikovDialgebra {
    let mut out = novikov::NovikovDialgebra::new(n.basis.clone());
    for ((i, j), row) in n.left.entries() {
        for (k, s) in row {
            out.left.add(*i, *j, *k, s.eval_params(values));
        }
    }
    for ((i, j), row) in n.right.entries() {
        for (k, s) in row {
            out.right.add(*i, *j, *k, s.eval_params(values));
        }
    }
    out
}
