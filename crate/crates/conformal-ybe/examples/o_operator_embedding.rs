//! From a dendriform splitting to a symmetric Yang-Baxter solution: the
//! identity map is an O-operator on the associated pair, and its embedding
//! r = Σ(aᵢ⊗aⁱ + aⁱ⊗aᵢ) solves the conformal Yang-Baxter equation in the
//! semidirect double.

use conformal_ybe::*;

fn main() {
    let d = corpus::ldca_example();
    println!("dendriform identities:\n{}", d.check());

    let (alg, rep) = ldca_to_lca(&d).unwrap();
    println!("\nassociated algebra jacobi:\n{}", alg.check_jacobi());
    println!("associated representation:\n{}", rep.check());

    let id = ConformalLinearMap::identity(&d.basis);
    println!(
        "\nidentity O-operator:\n{}",
        check_o_operator(&rep, &id).unwrap()
    );

    let (sdp, r) = embed_symmetric_solution(&rep, &id).unwrap();
    assert!(r.is_symmetric());
    let residual = clcybe(&sdp, &r);
    println!("embedded clcybe residual: {}", residual);
    assert!(residual.is_zero());

    // The splitting induced by the identity returns the original structure.
    assert_eq!(o_operator_to_ldca(&rep, &id).unwrap(), d);

    // A nonzero λ-free twist breaks the O-operator identity and the
    // embedded Yang-Baxter equation together.
    let mut twisted = ConformalLinearMap::identity(&d.basis);
    twisted.add_entry(1, 0, Polynomial::one());
    let op = check_o_operator(&rep, &twisted).unwrap();
    let (sdp2, r2) = embed_symmetric_solution(&rep, &twisted).unwrap();
    println!(
        "\ntwisted operator: o-operator pass = {}, clcybe zero = {}",
        op.overall(),
        clcybe(&sdp2, &r2).is_zero()
    );
    assert!(!op.overall());
    assert!(!clcybe(&sdp2, &r2).is_zero());
}
