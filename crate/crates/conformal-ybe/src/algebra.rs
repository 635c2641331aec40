//! λ-brackets from structure polynomials, sesquilinear evaluation, and the
//! Jacobi / skew-symmetry checkers.
//!
//! A bracket is stored only on generators, as polynomials `P^{ij}_k(λ, ∂)`
//! in `(Variable::Lambda, Slot(1))`; all other values are derived through
//! conformal sesquilinearity, so sesquilinearity holds by construction.

use crate::poly::{Polynomial, Variable};
use crate::report::{tuples, Report, ReportItem};
use crate::scalar::Scalar;
use crate::tensor::{ModuleBasis, TensorElement};
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;
use std::time::Instant;

/// Precondition failure for a construction operation.
#[derive(Debug, Clone)]
pub struct PreconditionError(pub String);

impl fmt::Display for PreconditionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "precondition failed: {}", self.0)
    }
}

impl std::error::Error for PreconditionError {}

/// Bilinear table over generator pairs with polynomial rows in `(λ, ∂)`.
/// Used for λ-brackets, module actions and dendriform λ-products alike.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BilinearTable {
    entries: BTreeMap<(usize, usize), Vec<(usize, Polynomial)>>,
}

impl BilinearTable {
    pub fn new() -> Self {
        BilinearTable::default()
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        let row = self.entries.entry((i, j)).or_default();
        match row.iter_mut().find(|(t, _)| *t == k) {
            Some((_, q)) => {
                let sum = &*q + &p;
                *q = sum;
            }
            None => {
                row.push((k, p));
                row.sort_by_key(|(t, _)| *t);
            }
        }
        self.canonicalize(i, j);
    }

    fn canonicalize(&mut self, i: usize, j: usize) {
        if let Some(row) = self.entries.get_mut(&(i, j)) {
            row.retain(|(_, p)| !p.is_zero());
            if row.is_empty() {
                self.entries.remove(&(i, j));
            }
        }
    }

    pub fn row(&self, i: usize, j: usize) -> Vec<(usize, Polynomial)> {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Polynomial)>)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Evaluates the table bilinearly at spectral value `at` (a polynomial in
    /// the free variables and the result's `∂ = Slot(1)`):
    /// for `u = f(∂)·eᵢ`, `v = g(∂)·eⱼ` the value is
    /// `f(−at) · g(at+∂) · Σₖ P^{ij}ₖ(at, ∂) eₖ`, extended bilinearly.
    ///
    /// Substitutions are simultaneous, which is exactly the "substitute after
    /// full expansion" reading of spectral arguments like `−λ−∂`.
    pub fn eval(
        &self,
        left: &TensorElement,
        right: &TensorElement,
        out_basis: &Rc<ModuleBasis>,
        at: &Polynomial,
    ) -> TensorElement {
        assert_eq!(left.order(), 1);
        assert_eq!(right.order(), 1);
        let mut out = TensorElement::zero(std::slice::from_ref(out_basis));
        let s1 = Variable::Slot(1);
        for (li, lp) in left.terms() {
            let f = lp.subst_var(s1, &(-at));
            for (ri, rp) in right.terms() {
                let g = rp.subst_var(s1, &(at + &Polynomial::var(s1)));
                let fg = &f * &g;
                if fg.is_zero() {
                    continue;
                }
                for (k, entry) in self.row(li[0] as usize, ri[0] as usize) {
                    out.add_term(vec![k as u16], &fg * &entry.subst_var(Variable::Lambda, at));
                }
            }
        }
        out
    }
}

/// Finite Leibniz conformal algebra presented by structure polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalAlgebra {
    pub basis: Rc<ModuleBasis>,
    pub structure: BilinearTable,
}

impl ConformalAlgebra {
    pub fn new(basis: Rc<ModuleBasis>) -> Self {
        ConformalAlgebra {
            basis,
            structure: BilinearTable::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn gen(&self, i: usize) -> TensorElement {
        TensorElement::gen(&self.basis, i)
    }

    /// `[u_at v]`, extended from the generator table by sesquilinearity.
    pub fn bracket(&self, u: &TensorElement, v: &TensorElement, at: &Polynomial) -> TensorElement {
        self.structure.eval(u, v, &self.basis, at)
    }

    /// Left multiplication row `L(eₐ)` as a conformal-linear map row set.
    pub fn left_rows(&self, a: usize) -> impl Fn(usize) -> Vec<(usize, Polynomial)> + '_ {
        move |u| self.structure.row(a, u)
    }

    /// Right multiplication `R(eₐ)λ u = [u_{−λ−∂} eₐ]` as rows in `(λ, ∂)`.
    pub fn right_rows(&self, a: usize) -> impl Fn(usize) -> Vec<(usize, Polynomial)> + '_ {
        move |u| {
            let arg = &(-&Polynomial::var(Variable::Lambda)) - &Polynomial::var(Variable::Slot(1));
            self.structure
                .row(u, a)
                .into_iter()
                .map(|(k, p)| (k, p.subst_var(Variable::Lambda, &arg)))
                .collect()
        }
    }

    /// Jacobi identity `[a_λ[b_μ c]] = [[a_λ b]_{λ+μ} c] + [b_μ[a_λ c]]`
    /// checked on every generator triple.
    pub fn check_jacobi(&self) -> Report {
        let start = Instant::now();
        let lam = Polynomial::var(Variable::Lambda);
        let mu = Polynomial::var(Variable::Mu);
        let lam_mu = &lam + &mu;
        let mut report = Report::new();
        let names = |t: &Vec<usize>| {
            t.iter()
                .map(|&i| self.basis.generators[i].clone())
                .collect()
        };
        report.check_axiom("jacobi", tuples(self.rank(), 3).into_iter(), names, |t| {
            let (a, b, c) = (self.gen(t[0]), self.gen(t[1]), self.gen(t[2]));
            let lhs = self.bracket(&a, &self.bracket(&b, &c, &mu), &lam);
            let r1 = self.bracket(&self.bracket(&a, &b, &lam), &c, &lam_mu);
            let r2 = self.bracket(&b, &self.bracket(&a, &c, &lam), &mu);
            let res = lhs.sub(&r1).sub(&r2);
            if res.is_zero() {
                None
            } else {
                Some(res.to_string())
            }
        });
        report.elapsed = start.elapsed();
        report
    }

    /// Skew-symmetry `[a_λ b] = −[b_{−λ−∂} a]` (the Lie-conformal test).
    pub fn check_skew(&self) -> Report {
        let start = Instant::now();
        let lam = Polynomial::var(Variable::Lambda);
        let neg = &(-&lam) - &Polynomial::var(Variable::Slot(1));
        let mut report = Report::new();
        let names = |t: &Vec<usize>| {
            t.iter()
                .map(|&i| self.basis.generators[i].clone())
                .collect()
        };
        report.check_axiom("skew", tuples(self.rank(), 2).into_iter(), names, |t| {
            let (a, b) = (self.gen(t[0]), self.gen(t[1]));
            let res = self.bracket(&a, &b, &lam).add(&self.bracket(&b, &a, &neg));
            if res.is_zero() {
                None
            } else {
                Some(res.to_string())
            }
        });
        report.elapsed = start.elapsed();
        report
    }
}

/// Ordinary Leibniz algebra given by scalar structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    pub basis: Rc<ModuleBasis>,
    pub table: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl LeibnizAlgebra {
    pub fn new(basis: Rc<ModuleBasis>) -> Self {
        LeibnizAlgebra {
            basis,
            table: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        if s.is_zero() {
            return;
        }
        let row = self.table.entry((i, j)).or_default();
        match row.iter_mut().find(|(t, _)| *t == k) {
            Some((_, q)) => *q = &*q + &s,
            None => {
                row.push((k, s));
                row.sort_by_key(|(t, _)| *t);
            }
        }
        row.retain(|(_, p)| !p.is_zero());
        if row.is_empty() {
            self.table.remove(&(i, j));
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    fn mul_vec(
        &self,
        u: &BTreeMap<usize, Scalar>,
        v: &BTreeMap<usize, Scalar>,
    ) -> BTreeMap<usize, Scalar> {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&i, a) in u {
            for (&j, b) in v {
                if let Some(row) = self.table.get(&(i, j)) {
                    for (k, c) in row {
                        let term = &(a * b) * c;
                        let e = out.entry(*k).or_insert_with(Scalar::zero);
                        *e = &*e + &term;
                    }
                }
            }
        }
        out.retain(|_, s| !s.is_zero());
        out
    }

    /// Leibniz identity `[a,[b,c]] = [[a,b],c] + [b,[a,c]]` over all triples.
    pub fn check_leibniz(&self) -> Report {
        let start = Instant::now();
        let mut report = Report::new();
        let names = |t: &Vec<usize>| {
            t.iter()
                .map(|&i| self.basis.generators[i].clone())
                .collect()
        };
        report.check_axiom("leibniz", tuples(self.dim(), 3).into_iter(), names, |t| {
            let single = |i: usize| BTreeMap::from([(i, Scalar::one())]);
            let (a, b, c) = (single(t[0]), single(t[1]), single(t[2]));
            let lhs = self.mul_vec(&a, &self.mul_vec(&b, &c));
            let r1 = self.mul_vec(&self.mul_vec(&a, &b), &c);
            let r2 = self.mul_vec(&b, &self.mul_vec(&a, &c));
            let mut res = lhs;
            for (k, s) in r1.into_iter().chain(r2) {
                let e = res.entry(k).or_insert_with(Scalar::zero);
                *e = &*e - &s;
            }
            res.retain(|_, s| !s.is_zero());
            if res.is_empty() {
                None
            } else {
                let txt: Vec<String> = res
                    .iter()
                    .map(|(k, s)| format!("({})·{}", s, self.basis.generators[*k]))
                    .collect();
                Some(txt.join(" + "))
            }
        });
        report.elapsed = start.elapsed();
        report
    }
}

/// Current Leibniz conformal algebra of an ordinary Leibniz algebra: the
/// structure polynomials are the constant structure scalars.
pub fn current(alg: &LeibnizAlgebra) -> Result<ConformalAlgebra, PreconditionError> {
    let check = alg.check_leibniz();
    if !check.overall() {
        return Err(PreconditionError(
            "input table fails the Leibniz identity".to_string(),
        ));
    }
    let mut out = ConformalAlgebra::new(alg.basis.clone());
    for ((i, j), row) in &alg.table {
        for (k, s) in row {
            out.structure
                .add(*i, *j, *k, Polynomial::constant(s.clone()));
        }
    }
    Ok(out)
}

/// Report wrapper for a single named zero-test.
pub fn zero_item(axiom: &str, residual: &TensorElement) -> ReportItem {
    if residual.is_zero() {
        ReportItem::pass(axiom)
    } else {
        ReportItem::fail(axiom, vec![], residual.to_string())
    }
}
