//! The correspondence [a_λ b] = ∂(b⊣a) + λ(a⊢b + b⊣a): Jacobi on the free
//! k[∂]-module is equivalent to the seven Novikov dialgebra identities, and
//! perm algebras with a derivation provide a supply of examples.

use conformal_ybe::novikov::{novikov_to_conformal, perm_to_novikov};
use conformal_ybe::*;

fn main() {
    // Perm algebra x·x = y with derivation D(x) = x, D(y) = 2y.
    let p = corpus::perm_example();
    println!("perm + derivation:\n{}", p.check());

    let n = perm_to_novikov(&p).expect("construction always yields a dialgebra");
    println!("\nderived dialgebra:\n{}", n);
    println!("novikov identities:\n{}", n.check());

    let lifted = novikov_to_conformal(&n);
    println!("\nlift jacobi:\n{}", lifted.check_jacobi());

    // Break one product and watch both sides fail together.
    let mut broken = n.clone();
    broken.right.add(0, 0, 0, Scalar::one());
    let scalar_verdict = broken.check().overall();
    let conformal_verdict = novikov_to_conformal(&broken).check_jacobi().overall();
    println!(
        "\nbroken table: novikov = {}, lifted jacobi = {}",
        scalar_verdict, conformal_verdict
    );
    assert_eq!(scalar_verdict, conformal_verdict);

    // The right-variant conversion is an involution exchanging the verdicts.
    let conv = n.convert_left_right();
    assert!(conv.check_right().overall());
    assert_eq!(conv.convert_left_right(), n);
}
