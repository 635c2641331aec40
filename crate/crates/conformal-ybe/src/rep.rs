//! Representations of Leibniz conformal algebras, semidirect and bicrossed
//! products, dual representations, matched pairs, conformal bilinear forms
//! and Manin-triple verification.
//!
//! Action tables follow the same storage convention as brackets: rows are
//! polynomials in `(λ, ∂)` keyed by `(algebra generator, module generator)`,
//! and every λ-shifted evaluation such as `r(b)_{−λ−∂}` is an affine
//! substitution into the stored polynomials with `∂` the slot of the value
//! being acted on.

use crate::algebra::{BilinearTable, ConformalAlgebra, PreconditionError};
use crate::poly::{Polynomial, Variable};
use crate::report::{tuples, Report};
use crate::scalar::Scalar;
use crate::tensor::{ModuleBasis, TensorElement};
use std::collections::BTreeMap;
use std::rc::Rc;
use std::time::Instant;

fn lam() -> Polynomial {
    Polynomial::var(Variable::Lambda)
}

fn mu() -> Polynomial {
    Polynomial::var(Variable::Mu)
}

fn s1() -> Polynomial {
    Polynomial::var(Variable::Slot(1))
}

/// Representation `(M, l, r)` of a Leibniz conformal algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub algebra: ConformalAlgebra,
    pub module: Rc<ModuleBasis>,
    pub l: BilinearTable,
    pub r: BilinearTable,
}

impl Representation {
    pub fn zero(algebra: &ConformalAlgebra, module: &Rc<ModuleBasis>) -> Self {
        Representation {
            algebra: algebra.clone(),
            module: module.clone(),
            l: BilinearTable::new(),
            r: BilinearTable::new(),
        }
    }

    /// Regular representation: `L(a)_λ b = [a_λ b]`, `R(a)_λ b = [b_{−λ−∂} a]`.
    pub fn regular(algebra: &ConformalAlgebra) -> Self {
        let mut l = BilinearTable::new();
        let mut r = BilinearTable::new();
        let arg = &(-&lam()) - &s1();
        for ((i, j), row) in algebra.structure.entries() {
            for (k, p) in row {
                // L(e_i) acting on e_j.
                l.add(*i, *j, *k, p.clone());
                // R(e_j) acting on e_i: [e_i_{−λ−∂} e_j].
                r.add(*j, *i, *k, p.subst_var(Variable::Lambda, &arg));
            }
        }
        Representation {
            algebra: algebra.clone(),
            module: algebra.basis.clone(),
            l,
            r,
        }
    }

    pub fn l_act(&self, a: &TensorElement, v: &TensorElement, at: &Polynomial) -> TensorElement {
        self.l.eval(a, v, &self.module, at)
    }

    pub fn r_act(&self, a: &TensorElement, v: &TensorElement, at: &Polynomial) -> TensorElement {
        self.r.eval(a, v, &self.module, at)
    }

    /// The three representation identities over all generator tuples.
    pub fn check(&self) -> Report {
        let start = Instant::now();
        let n = self.algebra.rank();
        let m = self.module.rank();
        let mut report = Report::new();
        let names = |t: &Vec<usize>| {
            vec![
                self.algebra.basis.generators[t[0]].clone(),
                self.algebra.basis.generators[t[1]].clone(),
                self.module.generators[t[2]].clone(),
            ]
        };
        let pairs = || {
            tuples(n, 2)
                .into_iter()
                .flat_map(move |ab| (0..m).map(move |v| vec![ab[0], ab[1], v]))
        };
        let neg_mu = &(-&mu()) - &s1();
        let neg_lam_mu = &(&(-&lam()) - &mu()) - &s1();
        report.check_axiom("m1", pairs(), names, |t| {
            let (a, b) = (self.algebra.gen(t[0]), self.algebra.gen(t[1]));
            let v = TensorElement::gen(&self.module, t[2]);
            let lhs = self.l_act(&a, &self.l_act(&b, &v, &mu()), &lam());
            let r1 = self.l_act(&self.algebra.bracket(&a, &b, &lam()), &v, &(&lam() + &mu()));
            let r2 = self.l_act(&b, &self.l_act(&a, &v, &lam()), &mu());
            let res = lhs.sub(&r1).sub(&r2);
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("m2", pairs(), names, |t| {
            let (a, b) = (self.algebra.gen(t[0]), self.algebra.gen(t[1]));
            let v = TensorElement::gen(&self.module, t[2]);
            let lhs = self.l_act(&a, &self.r_act(&b, &v, &neg_mu), &lam());
            let r1 = self.r_act(&b, &self.l_act(&a, &v, &lam()), &neg_lam_mu);
            let r2 = self.r_act(&self.algebra.bracket(&a, &b, &lam()), &v, &neg_mu);
            let res = lhs.sub(&r1).sub(&r2);
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("m3", pairs(), names, |t| {
            let (a, b) = (self.algebra.gen(t[0]), self.algebra.gen(t[1]));
            let v = TensorElement::gen(&self.module, t[2]);
            let lhs = self.r_act(&b, &self.r_act(&a, &v, &neg_mu), &neg_lam_mu);
            let rhs = self.r_act(&b, &self.l_act(&a, &v, &lam()), &neg_lam_mu);
            let res = lhs.add(&rhs);
            (!res.is_zero()).then(|| res.to_string())
        });
        report.elapsed = start.elapsed();
        report
    }

    /// Dual representation `(M^{*c}, l*, −l*−r*)` with
    /// `⟨l*(a)_λ f, v⟩_μ = −⟨f, l(a)_λ v⟩_{μ−λ}`.
    pub fn dual(&self) -> Representation {
        let dual_module = self.module.dual();
        let sub = &(-&lam()) - &s1();
        let dualize = |table: &BilinearTable| {
            let mut out = BilinearTable::new();
            for ((a, src), row) in table.entries() {
                for (tgt, p) in row {
                    // Entry (a; j → t) of the dual is −entry(a; t → j)
                    // with ∂ ↦ −λ−∂.
                    out.add(*a, *tgt, *src, -&p.subst_var(Variable::Slot(1), &sub));
                }
            }
            out
        };
        let l_star = dualize(&self.l);
        let r_star = dualize(&self.r);
        let mut second = BilinearTable::new();
        for ((a, j), row) in l_star.entries() {
            for (k, p) in row {
                second.add(*a, *j, *k, -p);
            }
        }
        for ((a, j), row) in r_star.entries() {
            for (k, p) in row {
                second.add(*a, *j, *k, -p);
            }
        }
        Representation {
            algebra: self.algebra.clone(),
            module: dual_module,
            l: l_star,
            r: second,
        }
    }

    /// Reinterprets the module over another basis of the same rank (used for
    /// the canonical double-dual identification).
    pub fn with_module(&self, module: &Rc<ModuleBasis>) -> Representation {
        assert_eq!(self.module.rank(), module.rank());
        Representation {
            algebra: self.algebra.clone(),
            module: module.clone(),
            l: self.l.clone(),
            r: self.r.clone(),
        }
    }
}

/// Semidirect product `Q ⋉_{l,r} M`:
/// `[(a+x)_λ(b+y)] = [a_λ b] + l(a)_λ y + r(b)_{−λ−∂} x`.
pub fn semidirect(rep: &Representation) -> ConformalAlgebra {
    let q = &rep.algebra;
    let n = q.rank();
    let basis = ModuleBasis::concat(&q.basis, &rep.module);
    let mut out = ConformalAlgebra::new(basis);
    for ((i, j), row) in q.structure.entries() {
        for (k, p) in row {
            out.structure.add(*i, *j, *k, p.clone());
        }
    }
    for ((a, v), row) in rep.l.entries() {
        for (k, p) in row {
            out.structure.add(*a, n + v, n + k, p.clone());
        }
    }
    let arg = &(-&lam()) - &s1();
    for ((b, v), row) in rep.r.entries() {
        for (k, p) in row {
            out.structure
                .add(n + v, *b, n + k, p.subst_var(Variable::Lambda, &arg));
        }
    }
    out
}

/// Matched pair of Leibniz conformal algebras: `(l, r)` is a representation
/// of `Q1` on `Q2`, `(φ, ψ)` one of `Q2` on `Q1`.
#[derive(Debug, Clone)]
pub struct MatchedPair {
    pub q1: ConformalAlgebra,
    pub q2: ConformalAlgebra,
    /// Q1 acting on Q2.
    pub lr: Representation,
    /// Q2 acting on Q1.
    pub phipsi: Representation,
}

impl MatchedPair {
    /// The six matched-pair identities over all generator tuples.
    pub fn check(&self) -> Report {
        let start = Instant::now();
        let mut report = Report::new();
        report.merge(self.lr.check_named("rep(l,r)"));
        report.merge(self.phipsi.check_named("rep(phi,psi)"));

        let q1 = &self.q1;
        let q2 = &self.q2;
        let l = |a: &TensorElement, x: &TensorElement, at: &Polynomial| self.lr.l_act(a, x, at);
        let r = |a: &TensorElement, x: &TensorElement, at: &Polynomial| self.lr.r_act(a, x, at);
        let phi =
            |x: &TensorElement, a: &TensorElement, at: &Polynomial| self.phipsi.l_act(x, a, at);
        let psi =
            |x: &TensorElement, a: &TensorElement, at: &Polynomial| self.phipsi.r_act(x, a, at);
        let nl = q1.rank();
        let n2 = q2.rank();
        let neg_l = &(-&lam()) - &s1();
        let neg_m = &(-&mu()) - &s1();
        let neg_lm = &(&(-&lam()) - &mu()) - &s1();
        let lm = &lam() + &mu();

        // Tuples (a; x, y): one Q1 generator, two Q2 generators.
        let axy = || {
            (0..nl).flat_map(move |a| {
                tuples(n2, 2)
                    .into_iter()
                    .map(move |xy| vec![a, xy[0], xy[1]])
            })
        };
        let axy_names = |t: &Vec<usize>| {
            vec![
                q1.basis.generators[t[0]].clone(),
                q2.basis.generators[t[1]].clone(),
                q2.basis.generators[t[2]].clone(),
            ]
        };
        // Tuples (a, b; x): two Q1 generators, one Q2 generator.
        let abx = || {
            tuples(nl, 2)
                .into_iter()
                .flat_map(move |ab| (0..n2).map(move |x| vec![ab[0], ab[1], x]))
        };
        let abx_names = |t: &Vec<usize>| {
            vec![
                q1.basis.generators[t[0]].clone(),
                q1.basis.generators[t[1]].clone(),
                q2.basis.generators[t[2]].clone(),
            ]
        };

        report.check_axiom("mp1", axy(), axy_names, |t| {
            let a = q1.gen(t[0]);
            let (x, y) = (q2.gen(t[1]), q2.gen(t[2]));
            let res = q2
                .bracket(&x, &r(&a, &y, &neg_m), &lam())
                .add(&r(&phi(&y, &a, &mu()), &x, &neg_l))
                .sub(&r(&a, &q2.bracket(&x, &y, &lam()), &neg_lm))
                .sub(&q2.bracket(&y, &r(&a, &x, &neg_l), &mu()))
                .sub(&r(&phi(&x, &a, &lam()), &y, &neg_m));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("mp2", axy(), axy_names, |t| {
            let a = q1.gen(t[0]);
            let (x, y) = (q2.gen(t[1]), q2.gen(t[2]));
            let res = l(&a, &q2.bracket(&x, &y, &mu()), &lam())
                .sub(&q2.bracket(&l(&a, &x, &lam()), &y, &lm))
                .sub(&l(&psi(&x, &a, &neg_l), &y, &lm))
                .sub(&q2.bracket(&x, &l(&a, &y, &lam()), &mu()))
                .sub(&r(&psi(&y, &a, &neg_l), &x, &neg_m));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("mp3", axy(), axy_names, |t| {
            let a = q1.gen(t[0]);
            let (x, y) = (q2.gen(t[1]), q2.gen(t[2]));
            let res = q2
                .bracket(&x, &l(&a, &y, &mu()), &lam())
                .add(&r(&psi(&y, &a, &neg_m), &x, &neg_l))
                .sub(&l(&phi(&x, &a, &lam()), &y, &lm))
                .sub(&l(&a, &q2.bracket(&x, &y, &lam()), &mu()))
                .sub(&q2.bracket(&r(&a, &x, &neg_l), &y, &lm));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("mp4", abx(), abx_names, |t| {
            let (a, b) = (q1.gen(t[0]), q1.gen(t[1]));
            let x = q2.gen(t[2]);
            let res = q1
                .bracket(&a, &psi(&x, &b, &neg_m), &lam())
                .add(&psi(&l(&b, &x, &mu()), &a, &neg_l))
                .sub(&psi(&x, &q1.bracket(&a, &b, &lam()), &neg_lm))
                .sub(&q1.bracket(&b, &psi(&x, &a, &neg_l), &mu()))
                .sub(&psi(&l(&a, &x, &lam()), &b, &neg_m));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("mp5", abx(), abx_names, |t| {
            let (a, b) = (q1.gen(t[0]), q1.gen(t[1]));
            let x = q2.gen(t[2]);
            let res = q1
                .bracket(&a, &phi(&x, &b, &mu()), &lam())
                .add(&psi(&r(&b, &x, &neg_m), &a, &neg_l))
                .sub(&q1.bracket(&psi(&x, &a, &neg_l), &b, &lm))
                .sub(&phi(&l(&a, &x, &lam()), &b, &lm))
                .sub(&phi(&x, &q1.bracket(&a, &b, &lam()), &mu()));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("mp6", abx(), abx_names, |t| {
            let (a, b) = (q1.gen(t[0]), q1.gen(t[1]));
            let x = q2.gen(t[2]);
            let res = q1
                .bracket(&phi(&x, &a, &lam()), &b, &lm)
                .add(&phi(&r(&a, &x, &neg_l), &b, &lm))
                .add(&q1.bracket(&psi(&x, &a, &neg_m), &b, &lm))
                .add(&phi(&l(&a, &x, &mu()), &b, &lm));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.elapsed = start.elapsed();
        report
    }
}

impl Representation {
    fn check_named(&self, prefix: &str) -> Report {
        let mut r = self.check();
        for item in &mut r.items {
            item.axiom = format!("{}:{}", prefix, item.axiom);
        }
        r
    }
}

/// Bicrossed product of a matched pair on `Q1 ⊕ Q2`.
pub fn bicrossed(mp: &MatchedPair) -> Result<ConformalAlgebra, PreconditionError> {
    if !mp.check().overall() {
        return Err(PreconditionError(
            "matched-pair identities do not hold".to_string(),
        ));
    }
    Ok(bicrossed_unchecked(mp))
}

pub fn bicrossed_unchecked(mp: &MatchedPair) -> ConformalAlgebra {
    let n1 = mp.q1.rank();
    let basis = ModuleBasis::concat(&mp.q1.basis, &mp.q2.basis);
    let mut out = ConformalAlgebra::new(basis);
    let arg = &(-&lam()) - &s1();
    for ((i, j), row) in mp.q1.structure.entries() {
        for (k, p) in row {
            out.structure.add(*i, *j, *k, p.clone());
        }
    }
    for ((i, j), row) in mp.q2.structure.entries() {
        for (k, p) in row {
            out.structure.add(n1 + i, n1 + j, n1 + k, p.clone());
        }
    }
    // [a_λ y] = l(a)_λ y + ψ(y)_{−λ−∂} a.
    for ((a, v), row) in mp.lr.l.entries() {
        for (k, p) in row {
            out.structure.add(*a, n1 + v, n1 + k, p.clone());
        }
    }
    for ((y, a), row) in mp.phipsi.r.entries() {
        for (k, p) in row {
            out.structure
                .add(*a, n1 + y, *k, p.subst_var(Variable::Lambda, &arg));
        }
    }
    // [x_λ b] = φ(x)_λ b + r(b)_{−λ−∂} x.
    for ((x, b), row) in mp.phipsi.l.entries() {
        for (k, p) in row {
            out.structure.add(n1 + x, *b, *k, p.clone());
        }
    }
    for ((b, x), row) in mp.lr.r.entries() {
        for (k, p) in row {
            out.structure
                .add(n1 + x, *b, n1 + k, p.subst_var(Variable::Lambda, &arg));
        }
    }
    out
}

/// Conformal bilinear form with entries `B_λ(eᵢ, eⱼ) ∈ k[λ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalBilinearForm {
    pub space: Rc<ModuleBasis>,
    pub entries: BTreeMap<(usize, usize), Polynomial>,
}

impl ConformalBilinearForm {
    pub fn zero(space: &Rc<ModuleBasis>) -> Self {
        ConformalBilinearForm {
            space: space.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `B_at(u, v)` with `B_λ(∂u,v) = −λB_λ(u,v)`, `B_λ(u,∂v) = λB_λ(u,v)`.
    pub fn eval(&self, u: &TensorElement, v: &TensorElement, at: &Polynomial) -> Polynomial {
        assert_eq!(u.order(), 1);
        assert_eq!(v.order(), 1);
        let mut out = Polynomial::zero();
        for (ui, up) in u.terms() {
            let f = up.subst_var(Variable::Slot(1), &(-at));
            for (vi, vp) in v.terms() {
                let g = vp.subst_var(Variable::Slot(1), at);
                let e = self.entry(ui[0] as usize, vi[0] as usize);
                out = &out + &(&(&f * &g) * &e.subst_var(Variable::Lambda, at));
            }
        }
        out
    }

    /// Skew-symmetry `B_λ(u,v) = −B_{−λ}(v,u)` on all generator pairs.
    pub fn check_skew_symmetric(&self) -> Report {
        let mut report = Report::new();
        let n = self.space.rank();
        let names = |t: &Vec<usize>| {
            t.iter()
                .map(|&i| self.space.generators[i].clone())
                .collect()
        };
        report.check_axiom("form-skew", tuples(n, 2).into_iter(), names, |t| {
            let u = TensorElement::gen(&self.space, t[0]);
            let v = TensorElement::gen(&self.space, t[1]);
            let res = &self.eval(&u, &v, &lam()) + &self.eval(&v, &u, &(-&lam()));
            (!res.is_zero()).then(|| res.to_string())
        });
        report
    }

    /// Determinant of the `B_λ(eᵢ,eⱼ)` matrix, by minor expansion.
    pub fn det(&self) -> Polynomial {
        let n = self.space.rank();
        let mut memo: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        fn go(
            form: &ConformalBilinearForm,
            row: usize,
            mask: u32,
            n: usize,
            memo: &mut BTreeMap<(usize, u32), Polynomial>,
        ) -> Polynomial {
            if row == n {
                return Polynomial::one();
            }
            if let Some(p) = memo.get(&(row, mask)) {
                return p.clone();
            }
            let mut acc = Polynomial::zero();
            let mut sign = 1i64;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let e = form.entry(row, col);
                if !e.is_zero() {
                    let sub = go(form, row + 1, mask | (1 << col), n, memo);
                    let term = (&e * &sub).scale(&Scalar::from_int(sign));
                    acc = &acc + &term;
                }
                sign = -sign;
            }
            memo.insert((row, mask), acc.clone());
            acc
        }
        go(self, 0, 0, n, &mut memo)
    }
}

/// The standard form `B_λ(a+f, b+g) = ⟨f,b⟩_λ − ⟨g,a⟩_{−λ}` on a double
/// `Q ⊕ Q^{*c}` presented as a concatenated basis (first half primal).
pub fn standard_form(space: &Rc<ModuleBasis>) -> Result<ConformalBilinearForm, PreconditionError> {
    let n2 = space.rank();
    if !n2.is_multiple_of(2) {
        return Err(PreconditionError(
            "standard form needs an even-rank double".to_string(),
        ));
    }
    let n = n2 / 2;
    let mut form = ConformalBilinearForm::zero(space);
    for i in 0..n {
        form.entries.insert((i, n + i), Polynomial::int(-1));
        form.entries.insert((n + i, i), Polynomial::int(1));
    }
    Ok(form)
}

/// Invariance `B_μ(a, [b_λ c]) = B_{−λ}([a_μ c] + [c_{−μ−∂} a], b)`.
pub fn check_invariance(q: &ConformalAlgebra, form: &ConformalBilinearForm) -> Report {
    let start = Instant::now();
    assert_eq!(q.basis.generators, form.space.generators, "basis mismatch");
    let mut report = Report::new();
    let names = |t: &Vec<usize>| t.iter().map(|&i| q.basis.generators[i].clone()).collect();
    let neg_m = &(-&mu()) - &s1();
    report.check_axiom("invariance", tuples(q.rank(), 3).into_iter(), names, |t| {
        let (a, b, c) = (q.gen(t[0]), q.gen(t[1]), q.gen(t[2]));
        let lhs = form.eval(&a, &q.bracket(&b, &c, &lam()), &mu());
        let w = q.bracket(&a, &c, &mu()).add(&q.bracket(&c, &a, &neg_m));
        let rhs = form.eval(&w, &b, &(-&lam()));
        let res = &lhs - &rhs;
        (!res.is_zero()).then(|| res.to_string())
    });
    report.elapsed = start.elapsed();
    report
}

/// Conformal Manin triple check: invariance, skew-symmetry, closure of both
/// parts, isotropy, and non-degeneracy (unit determinant over `k[λ]`).
pub fn check_manin_triple(
    q: &ConformalAlgebra,
    part0: &[usize],
    part1: &[usize],
    form: &ConformalBilinearForm,
) -> Result<Report, PreconditionError> {
    let start = Instant::now();
    let n = q.rank();
    let mut seen: Vec<usize> = part0.iter().chain(part1.iter()).copied().collect();
    seen.sort();
    if seen != (0..n).collect::<Vec<_>>() {
        return Err(PreconditionError(
            "index sets do not partition the generators".to_string(),
        ));
    }
    let mut report = Report::new();
    report.merge(check_invariance(q, form));
    report.merge(form.check_skew_symmetric());
    for (label, part) in [("closure(Q0)", part0), ("closure(Q1)", part1)] {
        let names = |t: &Vec<usize>| t.iter().map(|&i| q.basis.generators[i].clone()).collect();
        let pairs: Vec<Vec<usize>> = part
            .iter()
            .flat_map(|&i| part.iter().map(move |&j| vec![i, j]))
            .collect();
        report.check_axiom(label, pairs.into_iter(), names, |t| {
            let val = q.bracket(&q.gen(t[0]), &q.gen(t[1]), &lam());
            let outside: Vec<String> = val
                .terms()
                .filter(|(idx, _)| !part.contains(&(idx[0] as usize)))
                .map(|(idx, p)| format!("({})·{}", p, q.basis.generators[idx[0] as usize]))
                .collect();
            (!outside.is_empty()).then(|| outside.join(" + "))
        });
    }
    for (label, part) in [("isotropy(Q0)", part0), ("isotropy(Q1)", part1)] {
        let names = |t: &Vec<usize>| t.iter().map(|&i| q.basis.generators[i].clone()).collect();
        let pairs: Vec<Vec<usize>> = part
            .iter()
            .flat_map(|&i| part.iter().map(move |&j| vec![i, j]))
            .collect();
        report.check_axiom(label, pairs.into_iter(), names, |t| {
            let res = form.eval(&q.gen(t[0]), &q.gen(t[1]), &lam());
            (!res.is_zero()).then(|| res.to_string())
        });
    }
    let det = form.det();
    let unit = det.as_constant().map(|s| !s.is_zero()).unwrap_or(false);
    if unit {
        report.push(crate::report::ReportItem::pass("nondegenerate"));
    } else {
        report.push(crate::report::ReportItem::fail(
            "nondegenerate",
            vec![],
            format!("det = {}", det),
        ));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
