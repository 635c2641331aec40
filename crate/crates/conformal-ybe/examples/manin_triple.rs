//! Semidirect doubles, the standard bilinear form, and Manin-triple
//! verification, with the matched-pair route for comparison.

use conformal_ybe::algebra::current;
use conformal_ybe::*;

fn main() {
    // Q = current algebra of [x,x] = y; the double is Q ⋉ Q^{*c} through
    // the dual of the regular representation.
    let q = current(&corpus::two_dim_leibniz()).unwrap();
    let dualrep = Representation::regular(&q).dual();
    println!("dual representation axioms:\n{}", dualrep.check());

    let double = semidirect(&dualrep);
    println!("\ndouble jacobi:\n{}", double.check_jacobi());

    // Standard form B(a+f, b+g) = ⟨f,b⟩_λ − ⟨g,a⟩_{−λ}.
    let form = standard_form(&double.basis).unwrap();
    println!("\ninvariance:\n{}", check_invariance(&double, &form));
    let manin = check_manin_triple(&double, &[0, 1], &[2, 3], &form).unwrap();
    println!("\nmanin triple:\n{}", manin);
    assert!(manin.overall());

    // Moving a generator across the partition destroys isotropy.
    let bad = check_manin_triple(&double, &[0, 2], &[1, 3], &form).unwrap();
    println!("\nwrong partition:\n{}", bad);
    assert!(!bad.overall());
}
