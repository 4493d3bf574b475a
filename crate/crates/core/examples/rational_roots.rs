// Exact rational roots and polynomial gcds.
//
// `cargo run --example rational_roots`

use brahmagupta::arith::{poly_gcd, poly_rational_roots, q, z};
use brahmagupta::RationalPolynomial;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // (x - 65/2)(x - 91/10)(x^2 + 1): two rational roots, two complex ones
    let known = [q(65, 2), q(91, 10)];
    let p =
        RationalPolynomial::from_roots(&known) * RationalPolynomial::new(vec![z(1), z(0), z(1)]);
    let roots = poly_rational_roots(&p)?;
    println!("roots of {p}: {roots:?}");
    assert_eq!(
        roots.into_iter().collect::<Vec<_>>(),
        vec![q(91, 10), q(65, 2)]
    );

    // sharing only x = 65/2 with the first polynomial
    let other = RationalPolynomial::from_roots(&[q(65, 2), q(-3, 7)]);
    let g = poly_gcd(&p, &other)?;
    println!("gcd: {g}");
    assert_eq!(poly_rational_roots(&g)?.len(), 1);
    Ok(())
}

fn main() {
    run_example().expect("rational roots example");
}
