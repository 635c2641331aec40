//! Exact symbolic toolkit for Leibniz conformal (bi)algebras over `k[∂]`
//! and Novikov (bi-)dialgebras.
//!
//! Everything is computed over exact rationals extended by free commuting
//! parameters, so every axiom check is decisive: a report either certifies
//! an identity or exhibits the first failing generator tuple with its
//! nonzero residual polynomial.
//!
//! The main entry points:
//!
//! - [`algebra::ConformalAlgebra`] — λ-brackets from structure polynomials,
//!   with Jacobi and skew-symmetry checkers;
//! - [`novikov::NovikovDialgebra`] — scalar dialgebras, the perm-algebra
//!   construction, and the conformal lift;
//! - [`rep`] — representations, semidirect/bicrossed products, dual
//!   representations, matched pairs and conformal Manin triples;
//! - [`bialgebra`] — conformal coalgebras and bialgebras, the coboundary
//!   co-bracket `Δ_r = F(·)r`, and the Yang-Baxter residual
//!   `[[r,r]] mod ∂^{⊗3}` with its operator forms;
//! - [`ldca`] — dendriform splittings and O-operators;
//! - [`bidialgebra`] — Novikov (co/bi-)dialgebras, the duplicate Yang-Baxter
//!   tensor `N(r)`, coboundary co-multiplications and the bialgebra lift;
//! - [`mod@format`] / [`cli`] — the batch front end and its file format.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so independent checks may run concurrently.

pub mod algebra;
pub mod bialgebra;
pub mod bidialgebra;
pub mod cli;
pub mod corpus;
pub mod format;
pub mod ldca;
pub mod novikov;
pub mod poly;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::{current, BilinearTable, ConformalAlgebra, LeibnizAlgebra, PreconditionError};
pub use bialgebra::{
    check_bialgebra, clcybe, clcybe_raw, coboundary_delta, coboundary_diagnostics, dualize_algebra,
    dualize_coalgebra, embed_symmetric_solution, eta, f_action, induced_dual_bracket, is_invariant,
    operator_form_check, sigma, CoBracket, ConformalLinearMap, RMatrix,
};
pub use bidialgebra::{
    alpha_from_codialgebra, bidialgebra_diagnostics, cdnybe_m, cdnybe_n, coboundary_bidialgebra,
    codialgebra_diagnostics, lift_bidialgebra, relcdn_check, BiDialgebra, CoDialgebra,
    ScalarTensor,
};
pub use ldca::{check_o_operator, ldca_to_lca, o_operator_to_ldca, Ldca};
pub use novikov::{
    novikov_to_conformal, perm_derivation_conformal, perm_to_novikov, NovikovDialgebra,
    PermAlgebra, StarSign,
};
pub use poly::{parse_polynomial, ParseError, Polynomial, Variable};
pub use rep::{
    bicrossed, check_invariance, check_manin_triple, semidirect, standard_form,
    ConformalBilinearForm, MatchedPair, Representation,
};
pub use report::{Counterexample, Report, ReportItem};
pub use scalar::Scalar;
pub use tensor::{pair_dual_primal, pair_primal_dual, DualBasis, ModuleBasis, TensorElement};
