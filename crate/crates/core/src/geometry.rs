//! Classical exact formulas for triangles and cyclic quadrilaterals.
//!
//! Every formula is evaluated in squared form over the rationals and a single
//! exact square root is taken at the end, so an `None` result means the
//! quantity itself is irrational.

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Side lengths of a triangle.
///
/// Construction accepts degenerate (collinear) triangles so callers can tell
/// them apart from invalid side triples; see [`TriangleSides::is_degenerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleSides {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl TriangleSides {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let ok = a.is_positive()
            && b.is_positive()
            && c.is_positive()
            && &a + &b >= c
            && &b + &c >= a
            && &c + &a >= b;
        if !ok {
            return Err(Error::InvalidShape {
                shape: "triangle",
                sides: vec![a, b, c],
            });
        }
        Ok(TriangleSides { a, b, c })
    }

    /// True when one side equals the sum of the other two.
    pub fn is_degenerate(&self) -> bool {
        &self.a + &self.b == self.c || &self.b + &self.c == self.a || &self.c + &self.a == self.b
    }

    pub fn semi_perimeter(&self) -> Rational {
        (&self.a + &self.b + &self.c) / 2
    }

    /// `(a+b+c)(a+b-c)(b+c-a)(c+a-b)`, which is `16 K^2`.
    fn heron_product(&self) -> Rational {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b)
    }

    pub fn as_array(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// Consecutive sides of a cyclic quadrilateral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSides {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
}

/// The three Brahmagupta products of a cyclic quadrilateral, shared by the
/// diagonal and circumradius formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrahmaguptaProducts {
    /// `a1 a2 + a3 a4`
    pub adjacent: Rational,
    /// `a1 a3 + a2 a4`
    pub opposite: Rational,
    /// `a1 a4 + a2 a3`
    pub crossed: Rational,
}

impl QuadSides {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational) -> Result<Self> {
        let sides = [&a1, &a2, &a3, &a4];
        let total: Rational = sides.iter().copied().sum();
        let ok = sides.iter().all(|s| s.is_positive() && *s * 2 < total);
        if !ok {
            return Err(Error::InvalidShape {
                shape: "cyclic quadrilateral",
                sides: vec![a1, a2, a3, a4],
            });
        }
        Ok(QuadSides { a1, a2, a3, a4 })
    }

    pub fn from_slice(s: &[Rational]) -> Result<Self> {
        match s {
            [a, b, c, d] => Self::new(a.clone(), b.clone(), c.clone(), d.clone()),
            _ => Err(Error::Domain(format!("expected 4 sides, got {}", s.len()))),
        }
    }

    pub fn semi_perimeter(&self) -> Rational {
        (&self.a1 + &self.a2 + &self.a3 + &self.a4) / 2
    }

    pub fn products(&self) -> BrahmaguptaProducts {
        let (a1, a2, a3, a4) = (&self.a1, &self.a2, &self.a3, &self.a4);
        BrahmaguptaProducts {
            adjacent: a1 * a2 + a3 * a4,
            opposite: a1 * a3 + a2 * a4,
            crossed: a1 * a4 + a2 * a3,
        }
    }

    /// `(s-a1)(s-a2)(s-a3)(s-a4)`, which is `K^2`.
    fn brahmagupta_product(&self) -> Rational {
        let s = self.semi_perimeter();
        (&s - &self.a1) * (&s - &self.a2) * (&s - &self.a3) * (&s - &self.a4)
    }

    pub fn as_array(&self) -> [&Rational; 4] {
        [&self.a1, &self.a2, &self.a3, &self.a4]
    }
}

/// Heron's formula. `Some(0)` for a degenerate triangle, `None` when the area
/// is irrational.
pub fn heron_area(t: &TriangleSides) -> Option<Rational> {
    let sq = t.heron_product() / 16;
    sq.sqrt().ok().flatten()
}

/// Brahmagupta's area formula for a cyclic quadrilateral.
pub fn brahmagupta_area(quad: &QuadSides) -> Option<Rational> {
    quad.brahmagupta_product().sqrt().ok().flatten()
}

/// Both diagonals `(d1, d2)` when rational.
///
/// `d1` joins the vertex between `a1, a2` to the vertex between `a3, a4`;
/// `d2` joins the other two vertices.
pub fn brahmagupta_diagonals(quad: &QuadSides) -> Option<(Rational, Rational)> {
    let p = quad.products();
    let d1 = (&p.adjacent * &p.opposite / &p.crossed)
        .sqrt()
        .ok()
        .flatten()?;
    let d2 = (&p.opposite * &p.crossed / &p.adjacent)
        .sqrt()
        .ok()
        .flatten()?;
    Some((d1, d2))
}

/// Circumradius `abc / sqrt((a+b+c)(a+b-c)(b+c-a)(c+a-b))`.
pub fn triangle_circumradius(t: &TriangleSides) -> Result<Option<Rational>> {
    if t.is_degenerate() {
        return Err(Error::DegenerateTriangle);
    }
    let num = (&t.a * &t.b * &t.c).square();
    (num / t.heron_product()).sqrt()
}

/// Paramesvara's circumradius of a cyclic quadrilateral.
pub fn quad_circumradius(quad: &QuadSides) -> Option<Rational> {
    let p = quad.products();
    let (a1, a2, a3, a4) = (&quad.a1, &quad.a2, &quad.a3, &quad.a4);
    let denom =
        (a2 + a3 + a4 - a1) * (a1 - a2 + a3 + a4) * (a1 + a2 - a3 + a4) * (a1 + a2 + a3 - a4);
    (p.adjacent * p.opposite * p.crossed / denom)
        .sqrt()
        .ok()
        .flatten()
}

/// Ptolemy's identity `d1 d2 = a1 a3 + a2 a4`, exactly.
pub fn ptolemy_holds(quad: &QuadSides, d1: &Rational, d2: &Rational) -> bool {
    d1 * d2 == quad.products().opposite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn tri(a: Rational, b: Rational, c: Rational) -> TriangleSides {
        TriangleSides::new(a, b, c).unwrap()
    }

    fn quad(a: Rational, b: Rational, c: Rational, d: Rational) -> QuadSides {
        QuadSides::new(a, b, c, d).unwrap()
    }

    #[test]
    fn heron_examples() {
        assert_eq!(heron_area(&tri(z(3), z(4), z(5))), Some(z(6)));
        // triangle CDE of the 28-area pentagon
        assert_eq!(
            heron_area(&tri(q(13, 3), q(11, 3), q(20, 3))),
            Some(q(22, 3))
        );
        assert_eq!(heron_area(&tri(z(1), z(1), z(1))), None);
    }

    #[test]
    fn degenerate_triangle_flagged() {
        let t = tri(z(1), z(2), z(3));
        assert!(t.is_degenerate());
        assert_eq!(heron_area(&t), Some(z(0)));
        assert_eq!(triangle_circumradius(&t), Err(Error::DegenerateTriangle));
        assert!(TriangleSides::new(z(1), z(2), z(4)).is_err());
        assert!(TriangleSides::new(z(0), z(2), z(2)).is_err());
    }

    #[test]
    fn brahmagupta_area_examples() {
        // quadrilateral ABCE of the 28-area pentagon: 62/3 + 22/3 = 28
        assert_eq!(
            brahmagupta_area(&quad(q(11, 3), q(56, 9), q(20, 3), q(25, 9))),
            Some(q(62, 3))
        );
        assert_eq!(brahmagupta_area(&quad(z(1), z(1), z(1), z(1))), Some(z(1)));
        assert!(QuadSides::new(z(3), z(4), z(5), z(1000)).is_err());
    }

    #[test]
    fn brahmagupta_diagonal_examples() {
        let abce = quad(z(8), q(25, 2), q(65, 2), z(26));
        assert_eq!(brahmagupta_diagonals(&abce), Some((z(30), q(39, 2))));
        assert!(ptolemy_holds(&abce, &z(30), &q(39, 2)));
        assert_eq!(brahmagupta_diagonals(&quad(z(1), z(1), z(1), z(1))), None);
    }

    #[test]
    fn circumradius_examples() {
        assert_eq!(
            triangle_circumradius(&tri(z(3), z(4), z(5))).unwrap(),
            Some(q(5, 2))
        );
        assert_eq!(
            triangle_circumradius(&tri(q(13, 3), q(11, 3), q(20, 3))).unwrap(),
            Some(q(65, 18))
        );
        assert_eq!(
            triangle_circumradius(&tri(z(15), z(20), z(25))).unwrap(),
            Some(q(25, 2))
        );
        assert_eq!(triangle_circumradius(&tri(z(1), z(1), z(1))).unwrap(), None);

        assert_eq!(
            quad_circumradius(&quad(q(11, 3), q(56, 9), q(20, 3), q(25, 9))),
            Some(q(65, 18))
        );
        assert_eq!(quad_circumradius(&quad(z(1), z(1), z(1), z(1))), None);
        assert_eq!(
            quad_circumradius(&quad(z(8), q(25, 2), q(65, 2), z(26))),
            Some(q(65, 4))
        );
    }

    #[test]
    fn ptolemy_examples() {
        assert!(!ptolemy_holds(&quad(z(1), z(1), z(1), z(1)), &z(1), &z(1)));
        // rectangle 3 x 4 with diagonals 5
        let rect = quad(z(3), z(4), z(3), z(4));
        assert!(ptolemy_holds(&rect, &z(5), &z(5)));
        assert_eq!(brahmagupta_diagonals(&rect), Some((z(5), z(5))));
    }

    #[test]
    fn scaling_law() {
        let lambda = q(7, 3);
        let t = tri(q(13, 3), q(11, 3), q(20, 3));
        let ts = tri(&t.a * &lambda, &t.b * &lambda, &t.c * &lambda);
        assert_eq!(
            heron_area(&ts).unwrap(),
            heron_area(&t).unwrap() * lambda.square()
        );
        assert_eq!(
            triangle_circumradius(&ts).unwrap().unwrap(),
            triangle_circumradius(&t).unwrap().unwrap() * &lambda
        );
        let k = quad(z(8), q(25, 2), q(65, 2), z(26));
        let ks = quad(
            &k.a1 * &lambda,
            &k.a2 * &lambda,
            &k.a3 * &lambda,
            &k.a4 * &lambda,
        );
        let (d1, d2) = brahmagupta_diagonals(&k).unwrap();
        assert_eq!(
            brahmagupta_diagonals(&ks),
            Some((d1 * &lambda, d2 * &lambda))
        );
        assert_eq!(
            brahmagupta_area(&ks).unwrap(),
            brahmagupta_area(&k).unwrap() * lambda.square()
        );
    }
}
