//! Built-in structures used across tests, examples and the CLI corpus.
//!
//! The centrepiece is a four-dimensional Novikov dialgebra with free
//! parameters `b`, `c` on the basis `x, y, x*, y*` (a semidirect double of a
//! two-dimensional dialgebra with its dual representation), together with a
//! symmetric r-matrix `r = (y*+x*)⊗(x−y) + (x−y)⊗(y*+x*)` that solves the
//! duplicate Novikov Yang-Baxter equation. Its conformal lift is transcribed
//! independently of the lifting code so the two can be compared in tests.

use crate::algebra::{ConformalAlgebra, LeibnizAlgebra, PreconditionError};
use crate::bidialgebra::{CoDialgebra, ScalarTensor};
use crate::ldca::Ldca;
use crate::novikov::{NovikovDialgebra, PermAlgebra};
use crate::poly::{Polynomial, Variable};
use crate::scalar::Scalar;
use crate::tensor::{ModuleBasis, TensorElement};
use std::rc::Rc;

fn lam() -> Polynomial {
    Polynomial::var(Variable::Lambda)
}

fn dd() -> Polynomial {
    Polynomial::var(Variable::Slot(1))
}

fn b() -> Scalar {
    Scalar::param("b")
}

fn c() -> Scalar {
    Scalar::param("c")
}

/// `[L_λ L] = (∂ + 2λ)L`.
pub fn virasoro() -> ConformalAlgebra {
    let basis = ModuleBasis::new("Vir", &["L"]);
    let mut a = ConformalAlgebra::new(basis);
    a.structure
        .add(0, 0, 0, &dd() + &lam().scale(&Scalar::from_int(2)));
    a
}

/// Free rank-1 module with the zero bracket.
pub fn rank1_abelian() -> ConformalAlgebra {
    ConformalAlgebra::new(ModuleBasis::new("Ab", &["e"]))
}

/// The two-dimensional Leibniz algebra `[x,x] = y` (all other products zero).
pub fn two_dim_leibniz() -> LeibnizAlgebra {
    let basis = ModuleBasis::new("A", &["x", "y"]);
    let mut alg = LeibnizAlgebra::new(basis);
    alg.add(0, 0, 1, Scalar::one());
    alg
}

/// Perm algebra `x·x = y` with the derivation `D(x) = x, D(y) = 2y`.
pub fn perm_example() -> PermAlgebra {
    let basis = ModuleBasis::new("P", &["x", "y"]);
    let mut p = PermAlgebra::new(basis);
    p.table.add(0, 0, 1, Scalar::one());
    p.set_derivation(0, &[(0, Scalar::one())]);
    p.set_derivation(1, &[(1, Scalar::from_int(2))]);
    p
}

pub fn parametric_double_basis() -> Rc<ModuleBasis> {
    ModuleBasis::new("B", &["x", "y", "x*", "y*"])
}

/// Two-dimensional parametric Novikov dialgebra on `x, y`:
/// `y⊢x = x⊢x = −b(x−y)`, `y⊢y = x⊢y = −c(x−y)`, no `⊣` products.
pub fn parametric_sub_dialgebra() -> NovikovDialgebra {
    let basis = ModuleBasis::new("A", &["x", "y"]);
    let mut n = NovikovDialgebra::new(basis);
    for i in 0..2 {
        n.right.add(i, 0, 0, -&b());
        n.right.add(i, 0, 1, b());
        n.right.add(i, 1, 0, -&c());
        n.right.add(i, 1, 1, c());
    }
    n
}

/// The four-dimensional parametric double: the dialgebra above extended by
/// its dual space `x*, y*` through the dual of the regular representation.
pub fn parametric_double_dialgebra() -> NovikovDialgebra {
    let basis = parametric_double_basis();
    let mut n = NovikovDialgebra::new(basis);
    let (b, c) = (b(), c());
    // A ⊢ A.
    for i in 0..2 {
        n.right.add(i, 0, 0, -&b);
        n.right.add(i, 0, 1, b.clone());
        n.right.add(i, 1, 0, -&c);
        n.right.add(i, 1, 1, c.clone());
    }
    // A* ⊢ A: x*⊢x = −y*⊢x = b(x*+y*), x*⊢y = −y*⊢y = c(x*+y*).
    for (col, s) in [(0usize, b.clone()), (1usize, c.clone())] {
        n.right.add(2, col, 2, s.clone());
        n.right.add(2, col, 3, s.clone());
        n.right.add(3, col, 2, -&s);
        n.right.add(3, col, 3, -&s);
    }
    // A ⊢ A*: y⊢x* = x⊢x* = −y⊢y* = −x⊢y* = b·x* + c·y*.
    for row in 0..2 {
        n.right.add(row, 2, 2, b.clone());
        n.right.add(row, 2, 3, c.clone());
        n.right.add(row, 3, 2, -&b);
        n.right.add(row, 3, 3, -&c);
    }
    // A ⊣ A*: x⊣x* = −x⊣y* = (c−b)y*, y⊣x* = −y⊣y* = (b−c)x*.
    let cb = &c - &b;
    n.left.add(0, 2, 3, cb.clone());
    n.left.add(0, 3, 3, -&cb);
    n.left.add(1, 2, 2, -&cb);
    n.left.add(1, 3, 2, cb);
    n
}

/// The conformal lift of the parametric double, written out directly from its
/// λ-bracket table (independent of [`crate::novikov::novikov_to_conformal`]).
pub fn parametric_double_conformal() -> ConformalAlgebra {
    let basis = parametric_double_basis();
    let mut a = ConformalAlgebra::new(basis);
    let (b, c) = (b(), c());
    let cb = &c - &b;
    // [y_λ x] = [x_λ x] = −bλ(x−y), [y_λ y] = [x_λ y] = −cλ(x−y).
    for i in 0..2 {
        a.structure.add(i, 0, 0, lam().scale(&-&b));
        a.structure.add(i, 0, 1, lam().scale(&b));
        a.structure.add(i, 1, 0, lam().scale(&-&c));
        a.structure.add(i, 1, 1, lam().scale(&c));
    }
    // [x*_λ x] = −[y*_λ x] = (c−b)∂y* + λ(bx*+cy*).
    a.structure.add(2, 0, 2, lam().scale(&b));
    a.structure
        .add(2, 0, 3, &dd().scale(&cb) + &lam().scale(&c));
    a.structure.add(3, 0, 2, lam().scale(&-&b));
    a.structure
        .add(3, 0, 3, -&(&dd().scale(&cb) + &lam().scale(&c)));
    // [x*_λ y] = −[y*_λ y] = (b−c)∂x* + λ(bx*+cy*).
    a.structure
        .add(2, 1, 2, &dd().scale(&-&cb) + &lam().scale(&b));
    a.structure.add(2, 1, 3, lam().scale(&c));
    a.structure
        .add(3, 1, 2, -&(&dd().scale(&-&cb) + &lam().scale(&b)));
    a.structure.add(3, 1, 3, lam().scale(&-&c));
    // [y_λ x*] = [x_λ x*] = −[y_λ y*] = −[x_λ y*] = λ(bx*+cy*).
    for i in 0..2 {
        a.structure.add(i, 2, 2, lam().scale(&b));
        a.structure.add(i, 2, 3, lam().scale(&c));
        a.structure.add(i, 3, 2, lam().scale(&-&b));
        a.structure.add(i, 3, 3, lam().scale(&-&c));
    }
    a
}

/// Scalar r-matrix `r = (y*+x*)⊗(x−y) + (x−y)⊗(y*+x*)` on the double.
pub fn parametric_double_r_scalar() -> ScalarTensor {
    let mut r = ScalarTensor::zero(4, 2);
    for dual in [2u16, 3] {
        for (prim, sign) in [(0u16, 1i64), (1, -1)] {
            r.add_term(vec![dual, prim], Scalar::from_int(sign));
            r.add_term(vec![prim, dual], Scalar::from_int(sign));
        }
    }
    r
}

/// The same r-matrix as an element of the tensor square of the lift.
pub fn parametric_double_r_tensor() -> TensorElement {
    let basis = parametric_double_basis();
    let mut r = TensorElement::zero(&[basis.clone(), basis]);
    for dual in [2u16, 3] {
        for (prim, sign) in [(0u16, 1i64), (1, -1)] {
            r.add_term(vec![dual, prim], Polynomial::int(sign));
            r.add_term(vec![prim, dual], Polynomial::int(sign));
        }
    }
    r
}

/// Reference tabulation of the double's co-multiplications, transcribed
/// with the labels in the opposite assignment and zero on the dual part:
/// `δ(x) = δ(y) = (b−c)(x−y)⊗(y*+x*)`, `Δ(x) = Δ(y) = (c−b)(y*+x*)⊗(x−y)`.
/// The coboundary formulas produce the label-swap of these values on `x, y`
/// plus nonzero values on `x*, y*`; the swap-and-restrict tabulated here
/// fails the mixed compatibility axioms and is kept as a regression pin
/// (see `tests/acceptance.rs`).
pub fn parametric_double_codialgebra() -> CoDialgebra {
    let cb = &c() - &b();
    let mut delta = vec![ScalarTensor::zero(4, 2); 4];
    let mut big_delta = vec![ScalarTensor::zero(4, 2); 4];
    for g in 0..2 {
        for (dual, prim, sign) in [(2u16, 0u16, 1i64), (2, 1, -1), (3, 0, 1), (3, 1, -1)] {
            let s = if sign > 0 { -&cb } else { cb.clone() };
            delta[g].add_term(vec![prim, dual], s.clone());
            big_delta[g].add_term(vec![dual, prim], -&s);
        }
    }
    CoDialgebra { delta, big_delta }
}

/// Reference tabulation of the double's conformal co-bracket:
/// `α(x) = α(y) = (c−b)(∂(y*+x*)⊗(x−y) + (y*+x*)⊗∂(x−y))`, zero on duals.
/// This is the flip-negative of the co-bracket the coboundary construction
/// forces (`F(·)r`); kept as a regression pin for the orientation
/// discrepancy (see `tests/acceptance.rs`).
pub fn parametric_double_alpha() -> Vec<TensorElement> {
    let basis = parametric_double_basis();
    let cb = &c() - &b();
    let total = &Polynomial::var(Variable::Slot(1)) + &Polynomial::var(Variable::Slot(2));
    let mut out = Vec::new();
    for g in 0..4 {
        let mut t = TensorElement::zero(&[basis.clone(), basis.clone()]);
        if g < 2 {
            for dual in [2u16, 3] {
                for (prim, sign) in [(0u16, 1i64), (1, -1)] {
                    let coeff = total.scale(&(&cb * &Scalar::from_int(sign)));
                    t.add_term(vec![dual, prim], coeff);
                }
            }
        }
        out.push(t);
    }
    out
}

/// Nonzero dendriform corpus instance on the basis `x, y`:
/// `x◁_λ x = x▷_λ x = 2y`, all other products zero. It is the dendriform
/// splitting induced by the diagonal operator `x ↦ 2x, y ↦ y` on the current
/// algebra of `[x,x] = y`.
pub fn ldca_example() -> Ldca {
    let basis = ModuleBasis::new("Q", &["x", "y"]);
    let mut d = Ldca::new(basis);
    d.left.add(0, 0, 1, Polynomial::int(2));
    d.right.add(0, 0, 1, Polynomial::int(2));
    d
}

/// Built-in conformal algebras addressable by name.
pub fn builtin(name: &str) -> Result<ConformalAlgebra, PreconditionError> {
    match name {
        "virasoro" => Ok(virasoro()),
        "rank1_abelian" => Ok(rank1_abelian()),
        "parametric_double" => Ok(parametric_double_conformal()),
        other => Err(PreconditionError(format!(
            "unknown builtin algebra '{}'",
            other
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::novikov::novikov_to_conformal;

    #[test]
    fn double_dialgebra_passes_novikov_symbolically() {
        assert!(parametric_double_dialgebra().check().overall());
    }

    #[test]
    fn transposing_a_product_entry_breaks_novikov() {
        let mut n = parametric_double_dialgebra();
        // Swap the roles of the two factors in x⊢x*.
        let v = n.right.row(0, 2);
        n.right.add(0, 2, 2, -&v[&2]);
        n.right.add(0, 2, 3, -&v[&3]);
        n.right.add(2, 0, 2, v[&2].clone());
        n.right.add(2, 0, 3, v[&3].clone());
        assert!(!n.check().overall());
    }

    #[test]
    fn lift_matches_hand_written_bracket_table() {
        let lifted = novikov_to_conformal(&parametric_double_dialgebra());
        assert_eq!(lifted, parametric_double_conformal());
    }

    #[test]
    fn sub_dialgebra_is_novikov_and_lifts() {
        let sub = parametric_sub_dialgebra();
        assert!(sub.check().overall());
        assert!(novikov_to_conformal(&sub).check_jacobi().overall());
    }

    #[test]
    fn builtin_dispatch() {
        assert!(builtin("virasoro").is_ok());
        assert!(builtin("rank1_abelian").unwrap().structure.is_empty());
        assert!(builtin("parametric_double").is_ok());
        assert!(builtin("nope").is_err());
    }

    #[test]
    fn r_matrix_is_symmetric() {
        let r = parametric_double_r_tensor();
        assert_eq!(r.flip(), r);
        let rs = parametric_double_r_scalar();
        assert_eq!(rs.flip(), rs);
    }
}
