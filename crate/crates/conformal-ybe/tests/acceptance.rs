//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every tolerance is exact (zero polynomial / zero tensor); nothing is
//! deferred to calibration. Criterion 2(d) is split into its own test; see
//! the comment there for the pinned discrepancy it documents.

use conformal_ybe::algebra::current;
use conformal_ybe::bidialgebra::{
    bidialgebra_diagnostics, cdnybe_n, coboundary_bidialgebra, codialgebra_diagnostics,
    lift_bidialgebra, relcdn_check, BiDialgebra, ScalarTensor,
};
use conformal_ybe::cli::instantiate_dialgebra;
use conformal_ybe::novikov::{novikov_to_conformal, NovikovDialgebra, PermAlgebra, StarSign};
use conformal_ybe::*;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;

fn line(criterion: &str, passed: bool) -> bool {
    println!(
        "criterion {:<44} {}",
        criterion,
        if passed { "PASS" } else { "FAIL" }
    );
    passed
}

#[test]
fn criterion_1_virasoro_battery() {
    let v = corpus::virasoro();
    let jacobi = v.check_jacobi();
    let skew = v.check_skew();

    // Perturbed bracket (∂+3λ)L must fail with a nonzero printed residual.
    let basis = ModuleBasis::new("Q", &["L"]);
    let mut broken = ConformalAlgebra::new(basis);
    broken.structure.add(
        0,
        0,
        0,
        &Polynomial::var(Variable::Slot(1))
            + &Polynomial::var(Variable::Lambda).scale(&Scalar::from_int(3)),
    );
    let broken_report = broken.check_jacobi();
    let counterexample_nonzero = broken_report.items.iter().filter(|i| !i.passed).all(|i| {
        let ce = i.counterexample.as_ref().unwrap();
        !ce.residual.is_empty() && ce.residual != "0"
    });

    let ok = line(
        "1 (virasoro jacobi+skew, perturbed fails)",
        jacobi.overall() && skew.overall() && !broken_report.overall() && counterexample_nonzero,
    );
    assert!(ok);
}

#[test]
fn criterion_2_four_dim_double_end_to_end() {
    let n = corpus::parametric_double_dialgebra();
    let r_scalar = corpus::parametric_double_r_scalar();
    let r_tensor = RMatrix::new(corpus::parametric_double_r_tensor());

    // (a) symbolic Novikov check with free parameters b, c.
    let a_ok = n.check().overall();
    println!("  2(a) novikov check (symbolic in b, c): {}", a_ok);

    // (b) N(r) = 0 for r = (y*+x*)⊗(x−y) + (x−y)⊗(y*+x*).
    let b_ok = cdnybe_n(&n, &r_scalar).is_zero();
    println!("  2(b) cdnybe N(r) = 0: {}", b_ok);

    // (c) the coboundary co-dialgebra passes the bi-dialgebra check under
    // the selected orientation (the displayed co-multiplication formulas,
    // star sign plus); the opposite assignment fails, pinning the selection.
    let co = coboundary_bidialgebra(&n, &r_scalar, StarSign::Plus);
    let selected = BiDialgebra::new(n.clone(), co.clone());
    let c_ok = selected.check().overall();
    let swapped_fails = !BiDialgebra::new(n.clone(), co.swapped()).check().overall();
    println!(
        "  2(c) coboundary bi-dialgebra (selected orientation): {} (swap fails: {})",
        c_ok, swapped_fails
    );

    // (e) the lifted pair is a Leibniz conformal bialgebra.
    let (conf, alpha) = lift_bidialgebra(&selected);
    let e_ok = check_bialgebra(&conf, &alpha).overall();
    println!("  2(e) bialgebra check on the lifted pair: {}", e_ok);

    // (f) the CLCYBE holds for r in the lift.
    let f_ok = clcybe(&conf, &r_tensor).is_zero();
    println!("  2(f) clcybe(lift, r) = 0: {}", f_ok);

    let ok = line(
        "2 (double end-to-end: a, b, c, e, f)",
        a_ok && b_ok && c_ok && swapped_fails && e_ok && f_ok,
    );
    assert!(ok);
}

/// Criterion 2(d): the lifted co-bracket equals the reference tabulation
/// `corpus::parametric_double_alpha` exactly.
///
/// This is implemented literally and FAILS: the reference tabulation is the
/// flip-negative of the co-bracket forced by the coboundary formulas. Under
/// the only orientation and star sign for which the bi-dialgebra and
/// lifted-bialgebra checks pass (see criterion 2), the lifted co-bracket is
/// `α(x) = −τ(α_ref(x))`; the tabulated assignment itself fails both the
/// bi-dialgebra axioms and the conformal bialgebra axioms, through two
/// independent verification routes. The companion test below pins the exact
/// relationship so the discrepancy stays machine-checked.
#[test]
fn criterion_2d_lifted_alpha_equals_tabulated_value() {
    let n = corpus::parametric_double_dialgebra();
    let co = coboundary_bidialgebra(&n, &corpus::parametric_double_r_scalar(), StarSign::Plus);
    let (_, alpha) = lift_bidialgebra(&BiDialgebra::new(n, co));
    let tabulated = corpus::parametric_double_alpha();
    let d_ok = (0..4).all(|g| alpha.delta[g] == tabulated[g]);
    line("2(d) (lifted α = reference tabulation, literal)", d_ok);
    assert!(
        d_ok,
        "lifted α(x) = {} but the tabulated value is {} (= its flip-negative); \
         see criterion_2d_pinned_relationship",
        alpha.delta[0], tabulated[0]
    );
}

/// Companion to 2(d): the exact, machine-checked relationship between the
/// lifted co-bracket and the reference tabulation.
#[test]
fn criterion_2d_pinned_relationship() {
    let n = corpus::parametric_double_dialgebra();
    let co = coboundary_bidialgebra(&n, &corpus::parametric_double_r_scalar(), StarSign::Plus);
    let (conf, alpha) = lift_bidialgebra(&BiDialgebra::new(n, co));
    let tabulated = corpus::parametric_double_alpha();
    // On x and y the lifted α is exactly −τ of the tabulated tensor…
    for (lifted, reference) in alpha.delta.iter().zip(&tabulated).take(2) {
        assert_eq!(lifted, &reference.flip().neg());
        assert!(!lifted.is_zero());
    }
    // …and it is exactly the coboundary co-bracket F(·)r of the lift.
    let cob = coboundary_delta(&conf, &RMatrix::new(corpus::parametric_double_r_tensor()));
    for g in 0..4 {
        assert_eq!(alpha.delta[g], cob.delta[g]);
    }
    // The tabulated assignment extended by zero is not a bialgebra co-bracket.
    let mut tabulated_co = CoBracket::zero(&conf.basis);
    for (g, t) in tabulated.iter().enumerate() {
        tabulated_co.set(g, t.clone());
    }
    assert!(!check_bialgebra(&conf, &tabulated_co).overall());
    line("2(d) companion (pinned relationship)", true);
}

/// Random sparse scalar table over `dim` generators.
fn random_table(rng: &mut StdRng, dim: usize) -> NovikovDialgebra {
    let names: Vec<String> = (0..dim).map(|i| format!("e{}", i + 1)).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut n = NovikovDialgebra::new(ModuleBasis::new("A", &refs));
    for _ in 0..rng.gen_range(1..=3) {
        let (i, j, k) = (
            rng.gen_range(0..dim),
            rng.gen_range(0..dim),
            rng.gen_range(0..dim),
        );
        let c = rng.gen_range(-2i64..=2);
        if rng.gen_bool(0.5) {
            n.left.add(i, j, k, Scalar::from_int(c));
        } else {
            n.right.add(i, j, k, Scalar::from_int(c));
        }
    }
    n
}

/// Truncated polynomial perm algebra `t, t², …, tᵈ` with a random derivation
/// determined by `D(t)`.
fn random_perm_novikov(rng: &mut StdRng, dim: usize) -> NovikovDialgebra {
    let names: Vec<String> = (1..=dim).map(|i| format!("t{}", i)).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut p = PermAlgebra::new(ModuleBasis::new("P", &refs));
    for i in 1..=dim {
        for j in 1..=dim {
            if i + j <= dim {
                p.table.add(i - 1, j - 1, i + j - 1, Scalar::one());
            }
        }
    }
    let d_t: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2i64..=2)).collect();
    for m in 1..=dim {
        // D(t^m) = m·t^{m−1}·D(t), truncated.
        let mut row = Vec::new();
        for (k, c) in d_t.iter().enumerate() {
            let deg = m - 1 + k + 1;
            if deg <= dim && *c != 0 {
                row.push((deg - 1, Scalar::from_int(m as i64 * c)));
            }
        }
        p.set_derivation(m - 1, &row);
    }
    assert!(
        p.check().overall(),
        "construction must satisfy perm + derivation"
    );
    perm_to_novikov(&p).unwrap()
}

#[test]
fn criterion_3_novikov_jacobi_equivalence() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut cases: Vec<NovikovDialgebra> = Vec::new();
    for _ in 0..10 {
        let dim = rng.gen_range(2..=3);
        cases.push(random_perm_novikov(&mut rng, dim));
    }
    for _ in 0..10 {
        let dim = rng.gen_range(2..=3);
        cases.push(random_table(&mut rng, dim));
    }
    let (mut passing, mut failing) = (0, 0);
    for n in &cases {
        let novikov = n.check().overall();
        let jacobi = novikov_to_conformal(n).check_jacobi().overall();
        assert_eq!(novikov, jacobi, "verdicts disagree for\n{}", n);
        if novikov {
            passing += 1;
        } else {
            failing += 1;
        }
    }
    println!(
        "  3: {} cases, {} passing, {} failing",
        cases.len(),
        passing,
        failing
    );
    let ok = line(
        "3 (novikov ⇔ jacobi on ≥20 random tables)",
        cases.len() >= 20 && passing >= 5 && failing >= 5,
    );
    assert!(ok);
}

#[test]
fn criterion_4_generic_symmetric_parameters() {
    // r = Σ c_ij·eᵢ⊗eⱼ with fresh symmetric parameters c_ij = c_ji over the
    // parametric double; the identity must hold in all parameters at once.
    let n = corpus::parametric_double_dialgebra();
    let mut r = ScalarTensor::zero(4, 2);
    for i in 0..4u16 {
        for j in 0..4u16 {
            let (a, b) = (i.min(j), i.max(j));
            r.add_term(vec![i, j], Scalar::param(&format!("c{}{}", a + 1, b + 1)));
        }
    }
    assert_eq!(r.flip(), r);
    let report = relcdn_check(&n, &r).unwrap();
    let identity = report.item("relcdn-identity").unwrap().passed;
    let ok = line("4 (generic [[r,r]]+∂₁N+∂₃τ₁₃N ≡ 0)", identity);
    assert!(ok, "{}", report);
}

#[test]
fn criterion_5_o_operator_embedding() {
    let d = corpus::ldca_example();
    let (_, rep) = ldca_to_lca(&d).unwrap();
    // T = identity: the canonical symmetric candidate solves the CLCYBE.
    let id = ConformalLinearMap::identity(&d.basis);
    assert!(check_o_operator(&rep, &id).unwrap().overall());
    let (sdp, r) = embed_symmetric_solution(&rep, &id).unwrap();
    assert!(r.is_symmetric());
    let embedded_ok = clcybe(&sdp, &r).is_zero();

    // A nonzero λ-free twist breaks both sides of the equivalence.
    let mut twisted = ConformalLinearMap::identity(&d.basis);
    twisted.add_entry(1, 0, Polynomial::one());
    let twisted_op_fails = !check_o_operator(&rep, &twisted).unwrap().overall();
    let (sdp2, r2) = embed_symmetric_solution(&rep, &twisted).unwrap();
    let twisted_ybe_fails = !clcybe(&sdp2, &r2).is_zero();

    let ok = line(
        "5 (O-operator embedding + perturbation)",
        embedded_ok && twisted_op_fails && twisted_ybe_fails,
    );
    assert!(ok);
}

#[test]
fn criterion_6_duality_round_trips() {
    let mut round_trips = true;
    for a in [
        corpus::virasoro(),
        corpus::parametric_double_conformal(),
        current(&corpus::two_dim_leibniz()).unwrap(),
    ] {
        let back = dualize_coalgebra(&dualize_algebra(&a));
        round_trips &= back.structure == a.structure;
    }
    let dual_virasoro = Representation::regular(&corpus::virasoro())
        .dual()
        .check()
        .overall();
    let dual_double = Representation::regular(&corpus::parametric_double_conformal())
        .dual()
        .check()
        .overall();
    let ok = line(
        "6 (duality round trips + dual regular reps)",
        round_trips && dual_virasoro && dual_double,
    );
    assert!(ok);
}

#[test]
fn criterion_7_semidirect_and_manin() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    // Randomized instances: representations and perturbations thereof.
    let mut agreements = 0;
    let (mut passing, mut failing) = (0, 0);
    for trial in 0..12 {
        // Random Leibniz-passing table (filtered), then its current algebra.
        let alg = loop {
            let basis = ModuleBasis::new("A", &["x", "y"]);
            let mut cand = LeibnizAlgebra::new(basis);
            for _ in 0..rng.gen_range(1..=2) {
                cand.add(
                    rng.gen_range(0..2),
                    rng.gen_range(0..2),
                    rng.gen_range(0..2),
                    Scalar::from_int(rng.gen_range(-2i64..=2)),
                );
            }
            if cand.check_leibniz().overall() {
                break current(&cand).unwrap();
            }
        };
        let mut rep = match trial % 3 {
            0 => Representation::regular(&alg),
            1 => Representation::regular(&alg).dual(),
            _ => Representation::zero(&alg, &ModuleBasis::new("M", &["v"])),
        };
        if trial % 2 == 1 {
            // Perturb one action coefficient.
            rep.l.add(
                0,
                0,
                rng.gen_range(0..rep.module.rank()),
                Polynomial::var(Variable::Lambda),
            );
        }
        let rep_ok = rep.check().overall();
        let sd_ok = semidirect(&rep).check_jacobi().overall();
        if rep_ok == sd_ok {
            agreements += 1;
        }
        if rep_ok {
            passing += 1;
        } else {
            failing += 1;
        }
    }
    println!(
        "  7: 12 agreements required, got {}; {} passing, {} failing",
        agreements, passing, failing
    );

    // Manin triple of the double of current([x,x] = y) with the standard form.
    let q = current(&corpus::two_dim_leibniz()).unwrap();
    let double = semidirect(&Representation::regular(&q).dual());
    let form = standard_form(&double.basis).unwrap();
    let invariant = check_invariance(&double, &form).overall();
    let manin = check_manin_triple(&double, &[0, 1], &[2, 3], &form)
        .unwrap()
        .overall();

    let ok = line(
        "7 (semidirect ⇔ representation; manin triple)",
        agreements == 12 && passing >= 3 && failing >= 3 && invariant && manin,
    );
    assert!(ok);
}

#[test]
fn criterion_8_diagnostics_agreement() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut vals = BTreeMap::new();
    vals.insert("b".to_string(), BigRational::from_integer(2.into()));
    vals.insert("c".to_string(), BigRational::from_integer(5.into()));
    let hosts = [
        instantiate_dialgebra(&corpus::parametric_double_dialgebra(), &vals),
        random_perm_novikov(&mut StdRng::seed_from_u64(77), 3),
    ];
    let mut total = 0;
    for host in &hosts {
        assert!(host.check().overall());
        let dim = host.dim();
        for trial in 0..6 {
            let mut r = ScalarTensor::zero(dim, 2);
            for i in 0..dim as u16 {
                for j in 0..dim as u16 {
                    let v = rng.gen_range(-2i64..=2);
                    if v != 0 {
                        r.add_term(vec![i, j], Scalar::from_int(v));
                    }
                }
            }
            let r = if trial % 2 == 0 { r.add(&r.flip()) } else { r };
            let co = coboundary_bidialgebra(host, &r, StarSign::Plus);
            let direct_co = co.check(&host.basis).overall();
            let diag_co = codialgebra_diagnostics(host, &r, StarSign::Plus).overall();
            assert_eq!(direct_co, diag_co, "co-dialgebra diagnostics disagree");
            let direct_bi = BiDialgebra::new(host.clone(), co).check().overall();
            let diag_bi = diag_co && bidialgebra_diagnostics(host, &r, StarSign::Plus).overall();
            assert_eq!(direct_bi, diag_bi, "bi-dialgebra diagnostics disagree");
            total += 1;
        }
    }
    let ok = line("8 (diagnostics ⇔ direct checks, ≥10 random r)", total >= 10);
    assert!(ok);
}
