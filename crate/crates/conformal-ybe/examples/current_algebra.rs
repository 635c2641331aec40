//! Build the current Leibniz conformal algebra of an ordinary Leibniz
//! algebra and see skew-symmetry fail exactly when the input is Leibniz
//! but not Lie.

use conformal_ybe::algebra::current;
use conformal_ybe::*;

fn main() {
    // [x, x] = y, all other products zero: Leibniz but not Lie.
    let alg = corpus::two_dim_leibniz();
    println!("scalar table check:\n{}", alg.check_leibniz());

    let cur = current(&alg).expect("the table satisfies the Leibniz identity");
    println!("\ncurrent algebra jacobi:\n{}", cur.check_jacobi());

    let skew = cur.check_skew();
    println!("\ncurrent algebra skew-symmetry:\n{}", skew);
    assert!(!skew.overall(), "a non-Lie Leibniz algebra stays non-skew");

    // The defining bracket evaluates through sesquilinearity:
    // [∂x_λ x] = −λ·y.
    let x = cur.gen(0);
    let lam = Polynomial::var(Variable::Lambda);
    let value = cur.bracket(&x.apply_partial(1), &x, &lam);
    println!("\n[∂x_λ x] = {}", value);
}
