//! Check the Jacobi and skew-symmetry axioms of a rank-1 λ-bracket, then
//! watch a perturbed bracket fail with a printed counterexample.

use conformal_ybe::*;

fn main() {
    let v = corpus::virasoro();
    println!("[L_λ L] = (∂ + 2λ)L");
    println!("jacobi:\n{}", v.check_jacobi());
    println!("skew:\n{}", v.check_skew());

    // The same rank-1 module with (∂ + 3λ)L is not a Leibniz conformal
    // algebra; the report carries the first nonzero residual.
    let basis = ModuleBasis::new("Q", &["L"]);
    let mut broken = ConformalAlgebra::new(basis);
    broken.structure.add(
        0,
        0,
        0,
        &Polynomial::var(Variable::Slot(1))
            + &Polynomial::var(Variable::Lambda).scale(&Scalar::from_int(3)),
    );
    println!("\n[L_λ L] = (∂ + 3λ)L");
    println!("jacobi:\n{}", broken.check_jacobi());
    assert!(!broken.check_jacobi().overall());
}
