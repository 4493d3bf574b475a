//! Exact arithmetic substrate: rationals, rational polynomials and their
//! rational roots.

mod poly;
mod rational;
mod roots;

pub use poly::RationalPolynomial;
pub use rational::{lcm_of_denominators, q, z, Rational};
pub use roots::{poly_rational_roots, rational_roots_by_lifting, RootSearch};

use crate::error::Result;

/// Exact square root, `None` when irrational. Errors on negative input.
pub fn rational_sqrt(value: &Rational) -> Result<Option<Rational>> {
    value.sqrt()
}

/// Horner evaluation of `p` at `x`.
pub fn poly_evaluate(p: &RationalPolynomial, x: &Rational) -> Rational {
    p.evaluate(x)
}

/// Monic gcd of two polynomials, not both zero.
pub fn poly_gcd(a: &RationalPolynomial, b: &RationalPolynomial) -> Result<RationalPolynomial> {
    a.gcd(b)
}

/// Parses comma-separated rationals such as `2,1,-3,3/2`.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|part| part.trim().parse()).collect()
}
