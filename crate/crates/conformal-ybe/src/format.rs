//! Structured, human-writable JSON descriptions of algebras, co-structures
//! and r-matrices, plus the machine-readable report schema.
//!
//! Polynomial coefficients use the textual grammar of
//! [`crate::poly::parse_polynomial`]: rationals `p/q`, declared parameter
//! identifiers, the variables `L` (λ), `M` (μ), `D`/`D1` (∂ of the result),
//! `D2`, `D3` (tensor slots), operators `+ - * ^` and parentheses. Scalar
//! tables (dialgebras, perm algebras, co-dialgebras) allow no variables at
//! all. Tables are keyed `"gen|gen"`; absent entries are zero.

use crate::algebra::{BilinearTable, ConformalAlgebra, LeibnizAlgebra};
use crate::bialgebra::CoBracket;
use crate::bidialgebra::{BiDialgebra, CoDialgebra, ScalarTensor};
use crate::ldca::Ldca;
use crate::novikov::{NovikovDialgebra, PermAlgebra, StarSign};
use crate::poly::{parse_polynomial, Polynomial, Variable};
use crate::rep::{MatchedPair, Representation};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{ModuleBasis, TensorElement};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::rc::Rc;

/// Error while reading an object file.
#[derive(Debug)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

/// One target generator with its polynomial coefficient.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Entry {
    pub gen: String,
    pub coeff: String,
}

/// One `left ⊗ right` tensor term with its coefficient.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoEntry {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

pub type Table = BTreeMap<String, Vec<Entry>>;
pub type CoTable = BTreeMap<String, Vec<CoEntry>>;

/// A conformal algebra stanza shared by several kinds.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct AlgebraStanza {
    pub basis: Vec<String>,
    #[serde(default)]
    pub bracket: Table,
}

/// Top-level object file, dispatched on `kind`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObjectFile {
    LeibnizConformal {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        bracket: Table,
    },
    LeibnizAlgebra {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        bracket: Table,
    },
    NovikovDialgebra {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        left: Table,
        #[serde(default)]
        right: Table,
    },
    Perm {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        product: Table,
        #[serde(default)]
        derivation: BTreeMap<String, Vec<Entry>>,
    },
    Codialgebra {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        delta: CoTable,
        #[serde(default, rename = "Delta")]
        big_delta: CoTable,
    },
    Rmatrix {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        terms: Vec<CoEntry>,
    },
    Representation {
        #[serde(default)]
        params: Vec<String>,
        algebra: AlgebraStanza,
        module: Vec<String>,
        #[serde(default)]
        l: Table,
        #[serde(default)]
        r: Table,
    },
    Bialgebra {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        bracket: Table,
        #[serde(default)]
        cobracket: CoTable,
    },
    Bidialgebra {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        left: Table,
        #[serde(default)]
        right: Table,
        #[serde(default)]
        delta: CoTable,
        #[serde(default, rename = "Delta")]
        big_delta: CoTable,
    },
    MatchedPair {
        #[serde(default)]
        params: Vec<String>,
        q1: AlgebraStanza,
        q2: AlgebraStanza,
        #[serde(default)]
        l: Table,
        #[serde(default)]
        r: Table,
        #[serde(default)]
        phi: Table,
        #[serde(default)]
        psi: Table,
    },
    Ldca {
        #[serde(default)]
        params: Vec<String>,
        basis: Vec<String>,
        #[serde(default)]
        left: Table,
        #[serde(default)]
        right: Table,
    },
}

impl ObjectFile {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ObjectFile::LeibnizConformal { .. } => "leibniz_conformal",
            ObjectFile::LeibnizAlgebra { .. } => "leibniz_algebra",
            ObjectFile::NovikovDialgebra { .. } => "novikov_dialgebra",
            ObjectFile::Perm { .. } => "perm",
            ObjectFile::Codialgebra { .. } => "codialgebra",
            ObjectFile::Rmatrix { .. } => "rmatrix",
            ObjectFile::Representation { .. } => "representation",
            ObjectFile::Bialgebra { .. } => "bialgebra",
            ObjectFile::Bidialgebra { .. } => "bidialgebra",
            ObjectFile::MatchedPair { .. } => "matched_pair",
            ObjectFile::Ldca { .. } => "ldca",
        }
    }

    pub fn params(&self) -> &[String] {
        match self {
            ObjectFile::LeibnizConformal { params, .. }
            | ObjectFile::LeibnizAlgebra { params, .. }
            | ObjectFile::NovikovDialgebra { params, .. }
            | ObjectFile::Perm { params, .. }
            | ObjectFile::Codialgebra { params, .. }
            | ObjectFile::Rmatrix { params, .. }
            | ObjectFile::Representation { params, .. }
            | ObjectFile::Bialgebra { params, .. }
            | ObjectFile::Bidialgebra { params, .. }
            | ObjectFile::MatchedPair { params, .. }
            | ObjectFile::Ldca { params, .. } => params,
        }
    }
}

pub fn parse_object(text: &str) -> Result<ObjectFile, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError(format!("invalid object file: {}", e)))
}

pub fn write_object(obj: &ObjectFile) -> String {
    let mut s = serde_json::to_string_pretty(obj).expect("object serialization");
    s.push('\n');
    s
}

fn reserved(name: &str) -> bool {
    Variable::from_token(name).is_some()
}

fn make_param_set(declared: &[String], extra: &[String]) -> Result<BTreeSet<String>, FormatError> {
    let mut set = BTreeSet::new();
    for p in declared.iter().chain(extra.iter()) {
        if reserved(p) {
            return err(format!(
                "parameter name '{}' is a reserved variable token",
                p
            ));
        }
        set.insert(p.clone());
    }
    Ok(set)
}

fn basis_of(name: &str, gens: &[String]) -> Result<Rc<ModuleBasis>, FormatError> {
    if gens.is_empty() {
        return err("basis must be nonempty");
    }
    let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    let mut dedup = refs.clone();
    dedup.sort();
    dedup.dedup();
    if dedup.len() != refs.len() {
        return err("duplicate generator names");
    }
    Ok(ModuleBasis::new(name, &refs))
}

fn split_key(key: &str) -> Result<(String, String), FormatError> {
    match key.split_once('|') {
        Some((a, b)) => Ok((a.to_string(), b.to_string())),
        None => err(format!(
            "table key '{}' is not of the form \"gen|gen\"",
            key
        )),
    }
}

fn gen_index(basis: &ModuleBasis, name: &str) -> Result<usize, FormatError> {
    basis
        .index_of(name)
        .ok_or_else(|| FormatError(format!("unknown generator '{}'", name)))
}

fn bracket_vars() -> BTreeSet<Variable> {
    [Variable::Lambda, Variable::Slot(1)].into_iter().collect()
}

fn tensor2_vars() -> BTreeSet<Variable> {
    [Variable::Slot(1), Variable::Slot(2)].into_iter().collect()
}

fn parse_coeff(
    text: &str,
    params: &BTreeSet<String>,
    allowed: &BTreeSet<Variable>,
) -> Result<Polynomial, FormatError> {
    parse_polynomial(text, params, allowed)
        .map_err(|e| FormatError(format!("in coefficient '{}': {}", text, e)))
}

fn parse_scalar(text: &str, params: &BTreeSet<String>) -> Result<Scalar, FormatError> {
    let p = parse_coeff(text, params, &BTreeSet::new())?;
    p.as_constant()
        .ok_or_else(|| FormatError(format!("'{}' is not a scalar", text)))
}

fn load_bilinear(
    table: &Table,
    left: &ModuleBasis,
    right: &ModuleBasis,
    target: &ModuleBasis,
    params: &BTreeSet<String>,
) -> Result<BilinearTable, FormatError> {
    let mut out = BilinearTable::new();
    let vars = bracket_vars();
    for (key, entries) in table {
        let (a, b) = split_key(key)?;
        let i = gen_index(left, &a)?;
        let j = gen_index(right, &b)?;
        for e in entries {
            let k = gen_index(target, &e.gen)?;
            out.add(i, j, k, parse_coeff(&e.coeff, params, &vars)?);
        }
    }
    Ok(out)
}

fn dump_bilinear(
    table: &BilinearTable,
    left: &ModuleBasis,
    right: &ModuleBasis,
    target: &ModuleBasis,
) -> Table {
    let mut out = Table::new();
    for ((i, j), row) in table.entries() {
        let key = format!("{}|{}", left.generators[*i], right.generators[*j]);
        let entries = row
            .iter()
            .map(|(k, p)| Entry {
                gen: target.generators[*k].clone(),
                coeff: p.to_string(),
            })
            .collect();
        out.insert(key, entries);
    }
    out
}

fn load_scalar_table(
    table: &Table,
    basis: &ModuleBasis,
    params: &BTreeSet<String>,
) -> Result<crate::novikov::ScalarTable, FormatError> {
    let mut out = crate::novikov::ScalarTable::new();
    for (key, entries) in table {
        let (a, b) = split_key(key)?;
        let i = gen_index(basis, &a)?;
        let j = gen_index(basis, &b)?;
        for e in entries {
            out.add(
                i,
                j,
                gen_index(basis, &e.gen)?,
                parse_scalar(&e.coeff, params)?,
            );
        }
    }
    Ok(out)
}

fn dump_scalar_table(table: &crate::novikov::ScalarTable, basis: &ModuleBasis) -> Table {
    let mut out = Table::new();
    for ((i, j), row) in table.entries() {
        let key = format!("{}|{}", basis.generators[*i], basis.generators[*j]);
        let entries = row
            .iter()
            .map(|(k, s)| Entry {
                gen: basis.generators[*k].clone(),
                coeff: s.to_string(),
            })
            .collect();
        out.insert(key, entries);
    }
    out
}

fn load_scalar_cotable(
    table: &CoTable,
    basis: &ModuleBasis,
    params: &BTreeSet<String>,
) -> Result<Vec<ScalarTensor>, FormatError> {
    let n = basis.rank();
    let mut out = vec![ScalarTensor::zero(n, 2); n];
    for (gen, entries) in table {
        let g = gen_index(basis, gen)?;
        for e in entries {
            let i = gen_index(basis, &e.left)? as u16;
            let j = gen_index(basis, &e.right)? as u16;
            out[g].add_term(vec![i, j], parse_scalar(&e.coeff, params)?);
        }
    }
    Ok(out)
}

fn dump_scalar_cotable(tensors: &[ScalarTensor], basis: &ModuleBasis) -> CoTable {
    let mut out = CoTable::new();
    for (g, t) in tensors.iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let entries: Vec<CoEntry> = t
            .terms()
            .map(|(idx, s)| CoEntry {
                left: basis.generators[idx[0] as usize].clone(),
                right: basis.generators[idx[1] as usize].clone(),
                coeff: s.to_string(),
            })
            .collect();
        out.insert(basis.generators[g].clone(), entries);
    }
    out
}

fn load_cobracket(
    table: &CoTable,
    basis: &Rc<ModuleBasis>,
    params: &BTreeSet<String>,
) -> Result<CoBracket, FormatError> {
    let mut co = CoBracket::zero(basis);
    let vars = tensor2_vars();
    for (gen, entries) in table {
        let g = gen_index(basis, gen)?;
        let mut t = TensorElement::zero(&[basis.clone(), basis.clone()]);
        for e in entries {
            let i = gen_index(basis, &e.left)? as u16;
            let j = gen_index(basis, &e.right)? as u16;
            t.add_term(vec![i, j], parse_coeff(&e.coeff, params, &vars)?);
        }
        co.set(g, t);
    }
    Ok(co)
}

fn dump_cobracket(co: &CoBracket) -> CoTable {
    let mut out = CoTable::new();
    for (g, t) in co.delta.iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let entries: Vec<CoEntry> = t
            .terms()
            .map(|(idx, p)| CoEntry {
                left: co.space.generators[idx[0] as usize].clone(),
                right: co.space.generators[idx[1] as usize].clone(),
                coeff: p.to_string(),
            })
            .collect();
        out.insert(co.space.generators[g].clone(), entries);
    }
    out
}

/// Typed view of a parsed object file.
#[derive(Debug)]
pub enum Object {
    LeibnizConformal(ConformalAlgebra),
    LeibnizAlgebra(LeibnizAlgebra),
    NovikovDialgebra(NovikovDialgebra),
    Perm(PermAlgebra),
    Codialgebra(Rc<ModuleBasis>, CoDialgebra),
    Rmatrix(Rc<ModuleBasis>, TensorElement),
    Representation(Representation),
    Bialgebra(ConformalAlgebra, CoBracket),
    Bidialgebra(BiDialgebra),
    MatchedPair(MatchedPair),
    Ldca(Ldca),
}

/// Converts a parsed file into library types; `extra_params` come from the
/// command line and extend the declared set.
pub fn realize(obj: &ObjectFile, extra_params: &[String]) -> Result<Object, FormatError> {
    let params = make_param_set(obj.params(), extra_params)?;
    match obj {
        ObjectFile::LeibnizConformal { basis, bracket, .. } => {
            let b = basis_of("Q", basis)?;
            let mut a = ConformalAlgebra::new(b.clone());
            a.structure = load_bilinear(bracket, &b, &b, &b, &params)?;
            Ok(Object::LeibnizConformal(a))
        }
        ObjectFile::LeibnizAlgebra { basis, bracket, .. } => {
            let b = basis_of("A", basis)?;
            let mut alg = LeibnizAlgebra::new(b.clone());
            for (key, entries) in bracket {
                let (x, y) = split_key(key)?;
                let i = gen_index(&b, &x)?;
                let j = gen_index(&b, &y)?;
                for e in entries {
                    alg.add(
                        i,
                        j,
                        gen_index(&b, &e.gen)?,
                        parse_scalar(&e.coeff, &params)?,
                    );
                }
            }
            Ok(Object::LeibnizAlgebra(alg))
        }
        ObjectFile::NovikovDialgebra {
            basis, left, right, ..
        } => {
            let b = basis_of("A", basis)?;
            let mut n = NovikovDialgebra::new(b.clone());
            n.left = load_scalar_table(left, &b, &params)?;
            n.right = load_scalar_table(right, &b, &params)?;
            Ok(Object::NovikovDialgebra(n))
        }
        ObjectFile::Perm {
            basis,
            product,
            derivation,
            ..
        } => {
            let b = basis_of("P", basis)?;
            let mut p = PermAlgebra::new(b.clone());
            p.table = load_scalar_table(product, &b, &params)?;
            for (gen, entries) in derivation {
                let i = gen_index(&b, gen)?;
                let mut row = Vec::new();
                for e in entries {
                    row.push((gen_index(&b, &e.gen)?, parse_scalar(&e.coeff, &params)?));
                }
                p.set_derivation(i, &row);
            }
            Ok(Object::Perm(p))
        }
        ObjectFile::Codialgebra {
            basis,
            delta,
            big_delta,
            ..
        } => {
            let b = basis_of("A", basis)?;
            let co = CoDialgebra {
                delta: load_scalar_cotable(delta, &b, &params)?,
                big_delta: load_scalar_cotable(big_delta, &b, &params)?,
            };
            Ok(Object::Codialgebra(b, co))
        }
        ObjectFile::Rmatrix { basis, terms, .. } => {
            let b = basis_of("Q", basis)?;
            let mut t = TensorElement::zero(&[b.clone(), b.clone()]);
            let vars = tensor2_vars();
            for e in terms {
                let i = gen_index(&b, &e.left)? as u16;
                let j = gen_index(&b, &e.right)? as u16;
                t.add_term(vec![i, j], parse_coeff(&e.coeff, &params, &vars)?);
            }
            Ok(Object::Rmatrix(b, t))
        }
        ObjectFile::Representation {
            algebra,
            module,
            l,
            r,
            ..
        } => {
            let qb = basis_of("Q", &algebra.basis)?;
            let mut q = ConformalAlgebra::new(qb.clone());
            q.structure = load_bilinear(&algebra.bracket, &qb, &qb, &qb, &params)?;
            let mb = basis_of("M", module)?;
            let rep = Representation {
                algebra: q,
                module: mb.clone(),
                l: load_bilinear(l, &qb, &mb, &mb, &params)?,
                r: load_bilinear(r, &qb, &mb, &mb, &params)?,
            };
            Ok(Object::Representation(rep))
        }
        ObjectFile::Bialgebra {
            basis,
            bracket,
            cobracket,
            ..
        } => {
            let b = basis_of("Q", basis)?;
            let mut a = ConformalAlgebra::new(b.clone());
            a.structure = load_bilinear(bracket, &b, &b, &b, &params)?;
            let co = load_cobracket(cobracket, &b, &params)?;
            Ok(Object::Bialgebra(a, co))
        }
        ObjectFile::Bidialgebra {
            basis,
            left,
            right,
            delta,
            big_delta,
            ..
        } => {
            let b = basis_of("A", basis)?;
            let mut n = NovikovDialgebra::new(b.clone());
            n.left = load_scalar_table(left, &b, &params)?;
            n.right = load_scalar_table(right, &b, &params)?;
            let co = CoDialgebra {
                delta: load_scalar_cotable(delta, &b, &params)?,
                big_delta: load_scalar_cotable(big_delta, &b, &params)?,
            };
            Ok(Object::Bidialgebra(BiDialgebra::new(n, co)))
        }
        ObjectFile::MatchedPair {
            q1,
            q2,
            l,
            r,
            phi,
            psi,
            ..
        } => {
            let b1 = basis_of("Q1", &q1.basis)?;
            let b2 = basis_of("Q2", &q2.basis)?;
            let mut a1 = ConformalAlgebra::new(b1.clone());
            a1.structure = load_bilinear(&q1.bracket, &b1, &b1, &b1, &params)?;
            let mut a2 = ConformalAlgebra::new(b2.clone());
            a2.structure = load_bilinear(&q2.bracket, &b2, &b2, &b2, &params)?;
            let lr = Representation {
                algebra: a1.clone(),
                module: b2.clone(),
                l: load_bilinear(l, &b1, &b2, &b2, &params)?,
                r: load_bilinear(r, &b1, &b2, &b2, &params)?,
            };
            let phipsi = Representation {
                algebra: a2.clone(),
                module: b1.clone(),
                l: load_bilinear(phi, &b2, &b1, &b1, &params)?,
                r: load_bilinear(psi, &b2, &b1, &b1, &params)?,
            };
            Ok(Object::MatchedPair(MatchedPair {
                q1: a1,
                q2: a2,
                lr,
                phipsi,
            }))
        }
        ObjectFile::Ldca {
            basis, left, right, ..
        } => {
            let b = basis_of("Q", basis)?;
            let mut d = Ldca::new(b.clone());
            d.left = load_bilinear(left, &b, &b, &b, &params)?;
            d.right = load_bilinear(right, &b, &b, &b, &params)?;
            Ok(Object::Ldca(d))
        }
    }
}

fn gens_of(basis: &ModuleBasis) -> Vec<String> {
    basis.generators.clone()
}

fn all_params(polys: impl Iterator<Item = Vec<String>>) -> Vec<String> {
    let mut names: Vec<String> = polys.flatten().collect();
    names.sort();
    names.dedup();
    names
}

/// Serialises library types back into canonical object files.
pub fn conformal_to_file(a: &ConformalAlgebra) -> ObjectFile {
    let params = all_params(
        a.structure
            .entries()
            .flat_map(|(_, row)| row.iter().map(|(_, p)| p.params())),
    );
    ObjectFile::LeibnizConformal {
        params,
        basis: gens_of(&a.basis),
        bracket: dump_bilinear(&a.structure, &a.basis, &a.basis, &a.basis),
    }
}

pub fn dialgebra_to_file(n: &NovikovDialgebra) -> ObjectFile {
    let params = all_params(
        n.left
            .entries()
            .chain(n.right.entries())
            .flat_map(|(_, row)| row.iter().map(|(_, s)| s.params())),
    );
    ObjectFile::NovikovDialgebra {
        params,
        basis: gens_of(&n.basis),
        left: dump_scalar_table(&n.left, &n.basis),
        right: dump_scalar_table(&n.right, &n.basis),
    }
}

pub fn representation_to_file(rep: &Representation) -> ObjectFile {
    let params = all_params(
        rep.l
            .entries()
            .chain(rep.r.entries())
            .chain(rep.algebra.structure.entries())
            .flat_map(|(_, row)| row.iter().map(|(_, p)| p.params())),
    );
    ObjectFile::Representation {
        params,
        algebra: AlgebraStanza {
            basis: gens_of(&rep.algebra.basis),
            bracket: dump_bilinear(
                &rep.algebra.structure,
                &rep.algebra.basis,
                &rep.algebra.basis,
                &rep.algebra.basis,
            ),
        },
        module: gens_of(&rep.module),
        l: dump_bilinear(&rep.l, &rep.algebra.basis, &rep.module, &rep.module),
        r: dump_bilinear(&rep.r, &rep.algebra.basis, &rep.module, &rep.module),
    }
}

pub fn bialgebra_to_file(a: &ConformalAlgebra, co: &CoBracket) -> ObjectFile {
    let params = all_params(
        a.structure
            .entries()
            .flat_map(|(_, row)| row.iter().map(|(_, p)| p.params()))
            .chain(
                co.delta
                    .iter()
                    .flat_map(|t| t.terms().map(|(_, p)| p.params())),
            ),
    );
    ObjectFile::Bialgebra {
        params,
        basis: gens_of(&a.basis),
        bracket: dump_bilinear(&a.structure, &a.basis, &a.basis, &a.basis),
        cobracket: dump_cobracket(co),
    }
}

pub fn bidialgebra_to_file(b: &BiDialgebra) -> ObjectFile {
    let n = &b.algebra;
    let params = all_params(
        n.left
            .entries()
            .chain(n.right.entries())
            .flat_map(|(_, row)| row.iter().map(|(_, s)| s.params()))
            .chain(
                b.co.delta
                    .iter()
                    .chain(b.co.big_delta.iter())
                    .flat_map(|t| t.terms().map(|(_, s)| s.params())),
            ),
    );
    ObjectFile::Bidialgebra {
        params,
        basis: gens_of(&n.basis),
        left: dump_scalar_table(&n.left, &n.basis),
        right: dump_scalar_table(&n.right, &n.basis),
        delta: dump_scalar_cotable(&b.co.delta, &n.basis),
        big_delta: dump_scalar_cotable(&b.co.big_delta, &n.basis),
    }
}

pub fn rmatrix_to_file(basis: &ModuleBasis, t: &TensorElement) -> ObjectFile {
    let params = all_params(t.terms().map(|(_, p)| p.params()));
    ObjectFile::Rmatrix {
        params,
        basis: gens_of(basis),
        terms: t
            .terms()
            .map(|(idx, p)| CoEntry {
                left: basis.generators[idx[0] as usize].clone(),
                right: basis.generators[idx[1] as usize].clone(),
                coeff: p.to_string(),
            })
            .collect(),
    }
}

/// Machine-readable report schema `{overall, items[], meta{…}}`; byte-stable
/// across runs for identical inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MachineReport {
    pub overall: String,
    pub items: Vec<crate::report::ReportItem>,
    pub meta: ReportMeta,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportMeta {
    pub tool_version: String,
    pub input_hash: String,
}

pub fn machine_report(report: &Report, input_hash: &str) -> MachineReport {
    MachineReport {
        overall: if report.overall() { "pass" } else { "fail" }.to_string(),
        items: report.items.clone(),
        meta: ReportMeta {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_hash: input_hash.to_string(),
        },
    }
}

/// FNV-1a 64-bit over the concatenated input bytes, printed as hex.
pub fn input_hash(inputs: &[Vec<u8>]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for chunk in inputs {
        for b in chunk {
            h ^= *b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        h ^= 0xff;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{:016x}", h)
}

/// Star-sign choice as it appears on the command line.
pub fn parse_star_sign(s: &str) -> Result<StarSign, FormatError> {
    match s {
        "plus" => Ok(StarSign::Plus),
        "minus" => Ok(StarSign::Minus),
        other => err(format!("unknown star sign '{}' (use plus|minus)", other)),
    }
}
