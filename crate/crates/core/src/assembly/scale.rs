use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::polygon::CyclicPolygon;
use crate::arith::{lcm_of_denominators, Rational};

/// Integral similar copies of a rational polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerForm {
    /// Integer sides and diagonals with collective gcd 1.
    pub primitive: CyclicPolygon,
    /// `primitive = original * length_factor`.
    pub length_factor: Rational,
    /// Smallest integer `L` with `L^2 * primitive.area` integral.
    pub area_factor: BigInt,
    /// `primitive` scaled by `area_factor`; equal to it when that is 1.
    pub area_integral: CyclicPolygon,
}

/// Clears denominators with the lcm, then divides out the common gcd.
pub fn scale_to_integers(poly: &CyclicPolygon) -> IntegerForm {
    let lengths: Vec<&Rational> = poly
        .sides()
        .iter()
        .chain(poly.diagonals().values())
        .collect();
    let lambda = lcm_of_denominators(lengths.iter().copied());
    let g = lengths
        .iter()
        .map(|l| l.numer() * (&lambda / l.denom()))
        .fold(BigInt::zero(), |g, v| g.gcd(&v));
    let length_factor = Rational::new(lambda, g);
    let primitive = poly
        .scaled(&length_factor)
        .expect("a positive factor keeps every length positive");
    let area_factor = square_clearing_factor(primitive.area().denom());
    let area_integral = if area_factor.is_one() {
        primitive.clone()
    } else {
        primitive
            .scaled(&Rational::from_integer(area_factor.clone()))
            .expect("positive factor")
    };
    IntegerForm {
        primitive,
        length_factor,
        area_factor,
        area_integral,
    }
}

/// Smallest `L > 0` with `d | L^2`.
fn square_clearing_factor(d: &BigInt) -> BigInt {
    let mut rest = d.clone();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        out *= p.pow(e.div_ceil(2));
        p += 1;
    }
    out * rest
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn pentagon() -> CyclicPolygon {
        CyclicPolygon::from_labels(
            vec![q(11, 3), q(56, 9), q(13, 3), q(11, 3), q(25, 9)],
            [
                ("AC", q(65, 9)),
                ("AD", q(52, 9)),
                ("BD", q(323, 45)),
                ("BE", q(52, 9)),
                ("CE", q(20, 3)),
            ],
            q(65, 18),
            z(28),
        )
        .unwrap()
    }

    #[test]
    fn second_pentagon_scales_by_45() {
        let f = scale_to_integers(&pentagon());
        assert_eq!(f.length_factor, z(45));
        assert_eq!(
            f.primitive.sides(),
            &[z(165), z(280), z(195), z(165), z(125)]
        );
        assert_eq!(f.primitive.area(), &z(28 * 45 * 45));
        assert_eq!(f.area_factor, BigInt::one());
        assert_eq!(scale_to_integers(&f.primitive).primitive, f.primitive);
    }

    #[test]
    fn common_factor_removed() {
        let p = pentagon().scaled(&z(45 * 5)).unwrap();
        let f = scale_to_integers(&p);
        assert_eq!(f.length_factor, q(1, 5));
    }

    #[test]
    fn clearing_factor() {
        let f = |d: i64| square_clearing_factor(&BigInt::from(d));
        assert_eq!(f(1), BigInt::from(1));
        assert_eq!(f(4), BigInt::from(2));
        assert_eq!(f(12), BigInt::from(6));
        assert_eq!(f(8), BigInt::from(4));
        assert_eq!(f(7), BigInt::from(7));
    }
}
