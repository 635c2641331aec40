//! Dendriform splittings of Leibniz conformal algebras (two λ-products
//! `◁, ▷` summing to a bracket), O-operators, and their interplay.

use crate::algebra::{BilinearTable, ConformalAlgebra, PreconditionError};
use crate::bialgebra::ConformalLinearMap;
use crate::poly::{Polynomial, Variable};
use crate::rep::Representation;
use crate::report::{tuples, Report};
use crate::tensor::{ModuleBasis, TensorElement};
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

/// Leibniz-dendriform conformal algebra: λ-products `◁` (left) and `▷`
/// (right) subject to three coupled identities; both products satisfy the
/// same sesquilinearity as a bracket, by the storage convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Ldca {
    pub basis: Rc<ModuleBasis>,
    /// `◁` table.
    pub left: BilinearTable,
    /// `▷` table.
    pub right: BilinearTable,
}

impl Ldca {
    pub fn new(basis: Rc<ModuleBasis>) -> Self {
        Ldca {
            basis,
            left: BilinearTable::new(),
            right: BilinearTable::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    fn gen(&self, i: usize) -> TensorElement {
        TensorElement::gen(&self.basis, i)
    }

    /// `u ◁_at v`.
    pub fn ldiamond(&self, u: &TensorElement, v: &TensorElement, at: &Polynomial) -> TensorElement {
        self.left.eval(u, v, &self.basis, at)
    }

    /// `u ▷_at v`.
    pub fn rdiamond(&self, u: &TensorElement, v: &TensorElement, at: &Polynomial) -> TensorElement {
        self.right.eval(u, v, &self.basis, at)
    }

    /// The three dendriform identities over all generator triples.
    pub fn check(&self) -> Report {
        let start = Instant::now();
        let mut report = Report::new();
        let names = |t: &Vec<usize>| {
            t.iter()
                .map(|&i| self.basis.generators[i].clone())
                .collect()
        };
        let lm = &lam() + &mu();
        report.check_axiom("ldca1", tuples(self.rank(), 3).into_iter(), names, |t| {
            let (a, b, c) = (self.gen(t[0]), self.gen(t[1]), self.gen(t[2]));
            let sum_bc = self
                .rdiamond(&b, &c, &mu())
                .add(&self.ldiamond(&b, &c, &mu()));
            let res = self
                .rdiamond(&a, &sum_bc, &lam())
                .sub(&self.rdiamond(&self.rdiamond(&a, &b, &lam()), &c, &lm))
                .sub(&self.ldiamond(&b, &self.rdiamond(&a, &c, &lam()), &mu()));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("ldca2", tuples(self.rank(), 3).into_iter(), names, |t| {
            let (a, b, c) = (self.gen(t[0]), self.gen(t[1]), self.gen(t[2]));
            let sum_ac = self
                .rdiamond(&a, &c, &lam())
                .add(&self.ldiamond(&a, &c, &lam()));
            let res = self
                .ldiamond(&a, &self.rdiamond(&b, &c, &mu()), &lam())
                .sub(&self.rdiamond(&self.ldiamond(&a, &b, &lam()), &c, &lm))
                .sub(&self.rdiamond(&b, &sum_ac, &mu()));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.check_axiom("ldca3", tuples(self.rank(), 3).into_iter(), names, |t| {
            let (a, b, c) = (self.gen(t[0]), self.gen(t[1]), self.gen(t[2]));
            let sum_ab = self
                .rdiamond(&a, &b, &lam())
                .add(&self.ldiamond(&a, &b, &lam()));
            let res = self
                .ldiamond(&a, &self.ldiamond(&b, &c, &mu()), &lam())
                .sub(&self.ldiamond(&sum_ab, &c, &lm))
                .sub(&self.ldiamond(&b, &self.ldiamond(&a, &c, &lam()), &mu()));
            (!res.is_zero()).then(|| res.to_string())
        });
        report.elapsed = start.elapsed();
        report
    }
}

/// Associated Leibniz conformal algebra `[a_λ b] = a▷_λ b + a◁_λ b` together
/// with the representation `(Q, L_◁, R_▷)` on which the identity map is an
/// O-operator.
pub fn ldca_to_lca(d: &Ldca) -> Result<(ConformalAlgebra, Representation), PreconditionError> {
    if !d.check().overall() {
        return Err(PreconditionError(
            "dendriform identities do not hold".to_string(),
        ));
    }
    let mut alg = ConformalAlgebra::new(d.basis.clone());
    for ((i, j), row) in d.left.entries().chain(d.right.entries()) {
        for (k, p) in row {
            alg.structure.add(*i, *j, *k, p.clone());
        }
    }
    // L_◁(a)_λ b = a ◁_λ b; R_▷(a)_λ b = b ▷_{−λ−∂} a.
    let mut r_table = BilinearTable::new();
    let arg = &(-&lam()) - &s1();
    for ((b, a), row) in d.right.entries() {
        for (k, p) in row {
            r_table.add(*a, *b, *k, p.subst_var(Variable::Lambda, &arg));
        }
    }
    let rep = Representation {
        algebra: alg.clone(),
        module: d.basis.clone(),
        l: d.left.clone(),
        r: r_table,
    };
    Ok((alg, rep))
}

/// O-operator identity
/// `[T(x)_λ T(y)] = T(l(T(x))_λ y + r(T(y))_{−λ−∂} x)` for a λ-free map `T`.
pub fn check_o_operator(
    rep: &Representation,
    t: &ConformalLinearMap,
) -> Result<Report, PreconditionError> {
    if !t.is_lambda_free() {
        return Err(PreconditionError(
            "O-operator candidate must be λ-free".to_string(),
        ));
    }
    let start = Instant::now();
    let q = &rep.algebra;
    let mut report = Report::new();
    let names = |tu: &Vec<usize>| {
        tu.iter()
            .map(|&i| rep.module.generators[i].clone())
            .collect()
    };
    let arg = &(-&lam()) - &s1();
    report.check_axiom(
        "o-operator",
        tuples(rep.module.rank(), 2).into_iter(),
        names,
        |tu| {
            let (x, y) = (tu[0], tu[1]);
            let gx = TensorElement::gen(&rep.module, x);
            let gy = TensorElement::gen(&rep.module, y);
            let tx = t.image(x);
            let ty = t.image(y);
            let lhs = q.bracket(&tx, &ty, &lam());
            let inner = rep.l_act(&tx, &gy, &lam()).add(&rep.r_act(&ty, &gx, &arg));
            let rhs = t.apply(&inner);
            let res = lhs.sub(&rhs);
            (!res.is_zero()).then(|| res.to_string())
        },
    );
    let mut out = report;
    out.elapsed = start.elapsed();
    Ok(out)
}

/// Dendriform structure induced by an O-operator:
/// `x◁_λ y = l(T(x))_λ y`, `x▷_λ y = r(T(y))_{−λ−∂} x`.
pub fn o_operator_to_ldca(
    rep: &Representation,
    t: &ConformalLinearMap,
) -> Result<Ldca, PreconditionError> {
    let check = check_o_operator(rep, t)?;
    if !check.overall() {
        return Err(PreconditionError(
            "map fails the O-operator identity".to_string(),
        ));
    }
    let mut d = Ldca::new(rep.module.clone());
    let arg = &(-&lam()) - &s1();
    for x in 0..rep.module.rank() {
        for y in 0..rep.module.rank() {
            let gx = TensorElement::gen(&rep.module, x);
            let gy = TensorElement::gen(&rep.module, y);
            let lv = rep.l_act(&t.image(x), &gy, &lam());
            for (idx, p) in lv.terms() {
                d.left.add(x, y, idx[0] as usize, p.clone());
            }
            let rv = rep.r_act(&t.image(y), &gx, &arg);
            for (idx, p) in rv.terms() {
                d.right.add(x, y, idx[0] as usize, p.clone());
            }
        }
    }
    Ok(d)
}
