//! Euler's parametrization of rational triangles and Sastry's parametrization
//! of rational cyclic quadrilaterals.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::geometry::{heron_area, triangle_circumradius, QuadSides, TriangleSides};

/// Free parameters `(m, n, p, q, k)` of a rational triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerParams {
    pub m: Rational,
    pub n: Rational,
    pub p: Rational,
    pub q: Rational,
    pub k: Rational,
}

impl EulerParams {
    pub fn new(m: Rational, n: Rational, p: Rational, q: Rational, k: Rational) -> Result<Self> {
        for (name, v) in [("m", &m), ("n", &n), ("p", &p), ("q", &q), ("k", &k)] {
            if v.is_zero() {
                return Err(Error::ZeroParameter { name });
            }
        }
        if &p * &m == &q * &n {
            return Err(Error::NonPositiveLength {
                name: "c".into(),
                value: Rational::zero(),
            });
        }
        Ok(EulerParams { m, n, p, q, k })
    }

    /// The three signed sides `(a, b, c)`.
    pub fn sides(&self) -> [Rational; 3] {
        let EulerParams { m, n, p, q, k } = self;
        let mn = m * n;
        let pq = p * q;
        let a = k * (m.square() + n.square()) / &mn;
        let b = k * (p.square() + q.square()) / &pq;
        let c = k * (p * n + q * m) * (p * m - q * n) / (&pq * &mn);
        [a, b, c]
    }

    /// `k^2 (pn+qm)(pm-qn)/(pqmn)`, signed.
    pub fn area_formula(&self) -> Rational {
        let EulerParams { m, n, p, q, k } = self;
        k.square() * (p * n + q * m) * (p * m - q * n) / (p * q * m * n)
    }

    /// `k (m^2+n^2)(p^2+q^2) / (4mnpq)`, signed.
    pub fn circumradius_formula(&self) -> Rational {
        let EulerParams { m, n, p, q, k } = self;
        k * (m.square() + n.square()) * (p.square() + q.square()) / (m * n * p * q * 4)
    }
}

/// A rational triangle together with its exact area and circumradius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTriangle {
    pub sides: TriangleSides,
    pub area: Rational,
    pub circumradius: Rational,
    pub params: EulerParams,
}

/// Builds the Euler triangle, rejecting parameters that give a non-positive side.
pub fn euler_triangle(ep: &EulerParams) -> Result<RationalTriangle> {
    let [a, b, c] = ep.sides();
    for (name, v) in [("a", &a), ("b", &b), ("c", &c)] {
        if !v.is_positive() {
            return Err(Error::NonPositiveLength {
                name: name.into(),
                value: v.clone(),
            });
        }
    }
    let sides = TriangleSides::new(a, b, c)?;
    if sides.is_degenerate() {
        return Err(Error::DegenerateTriangle);
    }
    let area = ep.area_formula().abs();
    let circumradius = ep.circumradius_formula().abs();
    if heron_area(&sides).as_ref() != Some(&area)
        || triangle_circumradius(&sides)?.as_ref() != Some(&circumradius)
    {
        return Err(Error::Invariant(format!(
            "Euler triangle {:?} disagrees with Heron / circumradius formulas",
            sides.as_array()
        )));
    }
    Ok(RationalTriangle {
        sides,
        area,
        circumradius,
        params: ep.clone(),
    })
}

/// Free parameters `(t, u, v)` of a rational cyclic quadrilateral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SastryParams {
    pub t: Rational,
    pub u: Rational,
    pub v: Rational,
}

impl SastryParams {
    pub fn new(t: Rational, u: Rational, v: Rational) -> Result<Self> {
        for (name, x) in [("t", &t), ("u", &u), ("v", &v)] {
            if x.is_zero() {
                return Err(Error::ZeroParameter { name });
            }
        }
        // t in {u, v, -1/u, -1/v} makes a side vanish
        let vanishing = [
            ("a4", t == u),
            ("a2", t == v),
            ("a4", &t * &u == -1),
            ("a2", &t * &v == -1),
        ];
        if let Some((name, _)) = vanishing.iter().find(|(_, hit)| *hit) {
            return Err(Error::NonPositiveLength {
                name: (*name).into(),
                value: Rational::zero(),
            });
        }
        Ok(SastryParams { t, u, v })
    }

    /// The signed closed forms at unit scale.
    pub fn formulas(&self) -> SastryFormulas {
        let SastryParams { t, u, v } = self;
        let one = Rational::one();
        let uv = u * v;
        let u2 = &one + u.square();
        let v2 = &one + v.square();
        let t2 = &one + t.square();
        let a1 = (t * (u + v) + (&one - &uv)) * ((u + v) - t * (&one - &uv));
        let a2 = &u2 * (v - t) * (&one + t * v);
        let a3 = t * &u2 * &v2;
        let a4 = &v2 * (u - t) * (&one + t * u);
        let d1 = u * &t2 * &v2;
        let d2 = v * &t2 * &u2;
        let k = &uv
            * ((t * 2) * (&one - &uv) - (u + v) * (&one - t.square()))
            * ((u + v) * t * 2 + (&one - &uv) * (&one - t.square()));
        let r = &t2 * &u2 * &v2 / 4;
        SastryFormulas {
            sides: [a1, a2, a3, a4],
            diagonals: [d1, d2],
            area: k,
            circumradius: r,
        }
    }
}

/// Raw signed values of Sastry's closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SastryFormulas {
    pub sides: [Rational; 4],
    pub diagonals: [Rational; 2],
    pub area: Rational,
    pub circumradius: Rational,
}

/// A rational cyclic quadrilateral produced by Sastry's formulas, optionally
/// rescaled by a common factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SastryQuadrilateral {
    pub sides: QuadSides,
    /// `(|d1|, |d2|)` with `d1 = u(1+t^2)(1+v^2)`, `d2 = v(1+t^2)(1+u^2)`.
    pub diagonals: (Rational, Rational),
    /// `|K|`.
    pub area: Rational,
    /// The signed `K` expression, kept for diagnostics.
    pub signed_area: Rational,
    pub circumradius: Rational,
    pub params: SastryParams,
    pub scale: Rational,
}

/// Sastry's quadrilateral at unit scale.
pub fn sastry_quadrilateral(sp: &SastryParams) -> Result<SastryQuadrilateral> {
    SastryQuadrilateral::with_scale(sp, &Rational::one())
}

impl SastryQuadrilateral {
    /// All lengths multiplied by `scale` and the area by `scale^2`; the scaled
    /// sides must be strictly positive.
    pub fn with_scale(sp: &SastryParams, scale: &Rational) -> Result<Self> {
        let f = sp.formulas();
        let sides: Vec<Rational> = f.sides.iter().map(|s| s * scale).collect();
        for (i, s) in sides.iter().enumerate() {
            if !s.is_positive() {
                return Err(Error::NonPositiveLength {
                    name: format!("a{}", i + 1),
                    value: s.clone(),
                });
            }
        }
        let quad = QuadSides::from_slice(&sides)?;
        let area_scale = scale.square();
        Ok(SastryQuadrilateral {
            sides: quad,
            diagonals: (
                (&f.diagonals[0] * scale).abs(),
                (&f.diagonals[1] * scale).abs(),
            ),
            area: (&f.area * &area_scale).abs(),
            signed_area: &f.area * &area_scale,
            circumradius: (&f.circumradius * scale).abs(),
            params: sp.clone(),
            scale: scale.clone(),
        })
    }

    /// The same quadrilateral with every length multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Self::with_scale(&self.params, &(&self.scale * factor))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};
    use crate::geometry::{brahmagupta_area, brahmagupta_diagonals, quad_circumradius};

    fn euler(m: i64, n: i64, p: i64, qq: i64, k: i64) -> RationalTriangle {
        euler_triangle(&EulerParams::new(z(m), z(n), z(p), z(qq), z(k)).unwrap()).unwrap()
    }

    #[test]
    fn euler_examples() {
        let t = euler(2, 1, 3, 1, 6);
        assert_eq!(t.sides.as_array(), [&z(15), &z(20), &z(25)]);
        assert_eq!(t.area, z(150));
        assert_eq!(t.circumradius, q(25, 2));

        let t = euler(2, 1, 3, 1, 1);
        assert_eq!(t.sides.as_array(), [&q(5, 2), &q(10, 3), &q(25, 6)]);
        assert_eq!(t.area, q(25, 6));

        let t2 = euler(2, 1, 3, 1, 2);
        assert_eq!(t2.sides.a, &t.sides.a * 2);
        assert_eq!(t2.area, &t.area * 4);
    }

    #[test]
    fn euler_rejections() {
        assert_eq!(
            EulerParams::new(z(0), z(1), z(1), z(1), z(1)),
            Err(Error::ZeroParameter { name: "m" })
        );
        // pm = qn
        assert!(EulerParams::new(z(1), z(2), z(2), z(1), z(1)).is_err());
        // pm < qn makes c negative
        let ep = EulerParams::new(z(1), z(2), z(1), z(1), z(1)).unwrap();
        assert!(matches!(
            euler_triangle(&ep),
            Err(Error::NonPositiveLength { ref name, .. }) if name == "c"
        ));
    }

    #[test]
    fn sastry_examples() {
        let s = sastry_quadrilateral(&SastryParams::new(z(1), z(3), q(3, 2)).unwrap()).unwrap();
        assert_eq!(s.sides.as_array(), [&z(8), &q(25, 2), &q(65, 2), &z(26)]);
        assert_eq!(s.diagonals, (q(39, 2), z(30)));
        assert_eq!(s.circumradius, q(65, 4));

        let s = sastry_quadrilateral(&SastryParams::new(q(2, 3), z(1), z(2)).unwrap()).unwrap();
        assert_eq!(s.circumradius, q(65, 18));
    }

    #[test]
    fn sastry_uv_swap() {
        let a = sastry_quadrilateral(&SastryParams::new(q(3, 2), z(3), z(2)).unwrap()).unwrap();
        let b = sastry_quadrilateral(&SastryParams::new(q(3, 2), z(2), z(3)).unwrap()).unwrap();
        assert_eq!(a.sides.a1, b.sides.a1);
        assert_eq!(a.sides.a3, b.sides.a3);
        assert_eq!(a.sides.a2, b.sides.a4);
        assert_eq!(a.sides.a4, b.sides.a2);
        assert_eq!(a.diagonals.0, b.diagonals.1);
        assert_eq!(a.circumradius, b.circumradius);
    }

    #[test]
    fn sastry_rejections() {
        assert!(SastryParams::new(z(2), z(2), z(3)).is_err());
        assert!(SastryParams::new(z(2), z(3), q(-1, 2)).is_err());
        assert!(SastryParams::new(z(0), z(3), z(2)).is_err());
        // t = 3 > u, v gives negative a2 and a4
        let sp = SastryParams::new(z(3), z(1), z(2)).unwrap();
        assert!(matches!(
            sastry_quadrilateral(&sp),
            Err(Error::NonPositiveLength { .. })
        ));
    }

    #[test]
    fn sastry_agrees_with_classical_formulas() {
        let s = sastry_quadrilateral(&SastryParams::new(q(2, 3), z(1), z(2)).unwrap()).unwrap();
        assert_eq!(quad_circumradius(&s.sides), Some(s.circumradius.clone()));
        assert_eq!(brahmagupta_area(&s.sides), Some(s.area.clone()));
        let (e, f) = brahmagupta_diagonals(&s.sides).unwrap();
        let mut got = [e, f];
        got.sort();
        let mut want = [s.diagonals.0.clone(), s.diagonals.1.clone()];
        want.sort();
        assert_eq!(got, want);
    }
}
