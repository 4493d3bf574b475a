//! Gluing two inscribed pieces along a shared chord, and recovering the
//! chords that cross the seam as common rational roots of two
//! circumradius conditions.

use std::collections::{BTreeMap, BTreeSet};

use super::polygon::{CyclicPolygon, VertexPair};
use crate::arith::{poly_rational_roots, Rational, RationalPolynomial};
use crate::error::{Error, Result};
use crate::geometry::{
    brahmagupta_area, brahmagupta_diagonals, heron_area, quad_circumradius, triangle_circumradius,
    QuadSides, TriangleSides,
};

/// The known part of a figure inscribed in a circle of radius `R` that
/// fixes one unknown chord `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordConstraint {
    /// Triangle with sides `(a, b, d)`.
    Triangle(Rational, Rational),
    /// Cyclic quadrilateral with consecutive sides `(a, b, c, d)`.
    Quad(Rational, Rational, Rational),
}

impl ChordConstraint {
    /// The squared circumradius condition as a quartic in `d`.
    ///
    /// Triangle: `d^2 a^2 b^2 - R^2 (d+a+b)(d+a-b)(a+b-d)(b+d-a)`.
    /// Quadrilateral: `(da+bc)(db+ac)(dc+ab) - R^2 (-d+a+b+c)(d-a+b+c)(d+a-b+c)(d+a+b-c)`.
    pub fn quartic(&self, r: &Rational) -> RationalPolynomial {
        let lin = |c0: Rational, c1: i64| RationalPolynomial::linear(c0, Rational::from(c1));
        let r2 = RationalPolynomial::constant(r.square());
        match self {
            ChordConstraint::Triangle(a, b) => {
                let lhs = RationalPolynomial::new(vec![
                    Rational::zero(),
                    Rational::zero(),
                    (a * b).square(),
                ]);
                let rhs = lin(a + b, 1) * lin(a - b, 1) * lin(a + b, -1) * lin(b - a, 1);
                &lhs - &(&r2 * &rhs)
            }
            ChordConstraint::Quad(a, b, c) => {
                let term = |x: &Rational, y: &Rational, z: &Rational| {
                    RationalPolynomial::linear(y * z, x.clone())
                };
                let lhs = term(a, b, c) * term(b, a, c) * term(c, a, b);
                let rhs =
                    lin(a + b + c, -1) * lin(b + c - a, 1) * lin(a + c - b, 1) * lin(a + b - c, 1);
                &lhs - &(&r2 * &rhs)
            }
        }
    }

    /// Confirms `d` through the circumradius formula itself.
    pub fn admits(&self, d: &Rational, r: &Rational) -> bool {
        match self {
            ChordConstraint::Triangle(a, b) => TriangleSides::new(a.clone(), b.clone(), d.clone())
                .ok()
                .filter(|t| !t.is_degenerate())
                .and_then(|t| triangle_circumradius(&t).ok().flatten())
                .is_some_and(|rr| &rr == r),
            ChordConstraint::Quad(a, b, c) => {
                QuadSides::new(a.clone(), b.clone(), c.clone(), d.clone())
                    .ok()
                    .and_then(|q| quad_circumradius(&q))
                    .is_some_and(|rr| &rr == r)
            }
        }
    }

    /// Every positive rational `d` satisfying the condition.
    pub fn solve(&self, r: &Rational) -> Result<BTreeSet<Rational>> {
        let roots = poly_rational_roots(&self.quartic(r))?;
        Ok(roots
            .into_iter()
            .filter(|d| d.is_positive() && self.admits(d, r))
            .collect())
    }

    fn check_positive(&self, r: &Rational) -> Result<()> {
        let known: Vec<&Rational> = match self {
            ChordConstraint::Triangle(a, b) => vec![a, b, r],
            ChordConstraint::Quad(a, b, c) => vec![a, b, c, r],
        };
        match known.into_iter().find(|v| !v.is_positive()) {
            Some(v) => Err(Error::Domain(format!("lengths must be positive, got {v}"))),
            None => Ok(()),
        }
    }
}

/// All positive rational `d` making a triangle `(a, b, d)` with circumradius `r`.
pub fn solve_missing_length_triangle(
    a: &Rational,
    b: &Rational,
    r: &Rational,
) -> Result<BTreeSet<Rational>> {
    let c = ChordConstraint::Triangle(a.clone(), b.clone());
    c.check_positive(r)?;
    c.solve(r)
}

/// All positive rational `d` making a cyclic quadrilateral `(s1, s2, s3, d)`
/// with circumradius `r`.
pub fn solve_missing_length_quad(
    s1: &Rational,
    s2: &Rational,
    s3: &Rational,
    r: &Rational,
) -> Result<BTreeSet<Rational>> {
    let c = ChordConstraint::Quad(s1.clone(), s2.clone(), s3.clone());
    c.check_positive(r)?;
    c.solve(r)
}

/// The unique element shared by two root sets.
pub fn common_root(what: &str, a: &BTreeSet<Rational>, b: &BTreeSet<Rational>) -> Result<Rational> {
    let shared: Vec<Rational> = a.intersection(b).cloned().collect();
    match shared.len() {
        0 => Err(Error::NoCommonRoot { what: what.into() }),
        1 => Ok(shared.into_iter().next().unwrap()),
        _ => Err(Error::AmbiguousRoot {
            what: what.into(),
            candidates: shared,
        }),
    }
}

/// Ptolemy's relation `d * partner = a * b + c * e` for a cyclic quadruple
/// in which the unknown chord `d` is a diagonal and every other chord is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtolemyWitness {
    pub partner: Rational,
    pub products: [(Rational, Rational); 2],
}

impl PtolemyWitness {
    pub fn new(partner: &Rational, a: &Rational, b: &Rational, c: &Rational, e: &Rational) -> Self {
        PtolemyWitness {
            partner: partner.clone(),
            products: [(a.clone(), b.clone()), (c.clone(), e.clone())],
        }
    }

    pub fn holds(&self, d: &Rational) -> bool {
        let [(a, b), (c, e)] = &self.products;
        d * &self.partner == a * b + c * e
    }
}

/// The unique positive chord satisfying both constraints.
///
/// Same answer as intersecting the two root sets, but only the gcd of the
/// quartics is searched for roots. The quartics cannot tell a convex
/// arrangement from one where a piece is folded back across its chord, so
/// when a `witness` is given every candidate must also satisfy it.
pub fn common_chord(
    what: &str,
    first: &ChordConstraint,
    second: &ChordConstraint,
    r: &Rational,
    witness: Option<&PtolemyWitness>,
) -> Result<Rational> {
    first.check_positive(r)?;
    second.check_positive(r)?;
    let g = first.quartic(r).gcd(&second.quartic(r))?;
    let candidates: BTreeSet<Rational> = if g.degree().unwrap_or(0) == 0 {
        BTreeSet::new()
    } else {
        poly_rational_roots(&g)?
            .into_iter()
            .filter(|d| d.is_positive() && first.admits(d, r) && second.admits(d, r))
            .filter(|d| witness.is_none_or(|w| w.holds(d)))
            .collect()
    };
    common_root(what, &candidates, &candidates)
}

fn check_permutation<const N: usize>(order: &[usize; N]) -> Result<()> {
    let mut seen = [false; N];
    for &i in order {
        if i >= N || std::mem::replace(&mut seen[i], true) {
            return Err(Error::Domain(format!(
                "{order:?} is not a permutation of 0..{N}"
            )));
        }
    }
    Ok(())
}

/// Which side of each piece lands where in the assembled pentagon `ABCDE`.
///
/// `triangle[k]` indexes the triangle side used as `CD`, `DE`, `EC`;
/// `quad[k]` indexes the quadrilateral side used as `AB`, `BC`, `CE`, `EA`.
/// The shared chord is `CE`, so `triangle[2]` and `quad[2]` must have equal
/// lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonArrangement {
    pub triangle: [usize; 3],
    pub quad: [usize; 4],
}

impl PentagonArrangement {
    /// Euler triangle `(a, b, c)` as `(EC, CD, DE)`, Sastry quadrilateral in
    /// its own order as `ABCE`.
    pub const STANDARD: PentagonArrangement = PentagonArrangement {
        triangle: [1, 2, 0],
        quad: [0, 1, 2, 3],
    };
}

/// Which side of each quadrilateral lands where in the assembled hexagon.
///
/// `first[k]` indexes the side used as `AB`, `BC`, `CD`, `DA`; `second[k]`
/// the side used as `DE`, `EF`, `FA`, `AD`. The shared chord is `AD`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexagonArrangement {
    pub first: [usize; 4],
    pub second: [usize; 4],
}

impl HexagonArrangement {
    /// Both Sastry quadrilaterals with their third side `a3` on the seam.
    pub const STANDARD: HexagonArrangement = HexagonArrangement {
        first: [0, 1, 3, 2],
        second: [0, 1, 3, 2],
    };
}

fn irrational(what: &str) -> Error {
    Error::Irrational { what: what.into() }
}

fn triangle_radius(t: &TriangleSides) -> Result<Rational> {
    triangle_circumradius(t)?.ok_or_else(|| irrational("triangle circumradius"))
}

fn quad_radius(q: &QuadSides) -> Result<Rational> {
    quad_circumradius(q).ok_or_else(|| irrational("quadrilateral circumradius"))
}

fn same_radius(left: Rational, right: Rational) -> Result<Rational> {
    if left != right {
        return Err(Error::CircumradiusMismatch { left, right });
    }
    Ok(left)
}

fn same_length(left: &Rational, right: &Rational) -> Result<()> {
    if left != right {
        return Err(Error::SharedLengthMismatch {
            left: left.clone(),
            right: right.clone(),
        });
    }
    Ok(())
}

fn diagonals_of(quad: &QuadSides, what: &str) -> Result<(Rational, Rational)> {
    brahmagupta_diagonals(quad).ok_or_else(|| irrational(&format!("a diagonal of {what}")))
}

fn diagonal_map(entries: Vec<(usize, usize, Rational)>) -> BTreeMap<VertexPair, Rational> {
    entries
        .into_iter()
        .map(|(i, j, d)| (VertexPair::new(i, j), d))
        .collect()
}

/// Glues triangle `CDE` to cyclic quadrilateral `ABCE` along `CE`.
pub fn juxtapose_pentagon(
    tri: &TriangleSides,
    quad: &QuadSides,
    arrangement: &PentagonArrangement,
) -> Result<CyclicPolygon> {
    check_permutation(&arrangement.triangle)?;
    check_permutation(&arrangement.quad)?;
    if tri.is_degenerate() {
        return Err(Error::DegenerateTriangle);
    }
    let r = same_radius(triangle_radius(tri)?, quad_radius(quad)?)?;
    let t = tri.as_array();
    let q = quad.as_array();
    let [cd, de, ec] = arrangement.triangle.map(|k| t[k].clone());
    let [ab, bc, ce, ea] = arrangement.quad.map(|k| q[k].clone());
    same_length(&ec, &ce)?;

    let abce = QuadSides::new(ab.clone(), bc.clone(), ce.clone(), ea.clone())?;
    let (be, ac) = diagonals_of(&abce, "ABCE")?;
    // ACDE: AD * CE = AC * DE + CD * EA; BCDE: BD * CE = BC * DE + CD * BE
    let ad = common_chord(
        "AD",
        &ChordConstraint::Triangle(de.clone(), ea.clone()),
        &ChordConstraint::Quad(ab.clone(), bc.clone(), cd.clone()),
        &r,
        Some(&PtolemyWitness::new(&ce, &ac, &de, &cd, &ea)),
    )?;
    let bd = common_chord(
        "BD",
        &ChordConstraint::Triangle(bc.clone(), cd.clone()),
        &ChordConstraint::Quad(ab.clone(), ea.clone(), de.clone()),
        &r,
        Some(&PtolemyWitness::new(&ce, &bc, &de, &cd, &be)),
    )?;
    let area = heron_area(tri).ok_or_else(|| irrational("triangle area"))?
        + brahmagupta_area(&abce).ok_or_else(|| irrational("quadrilateral area"))?;
    CyclicPolygon::new(
        vec![ab, bc, cd, de, ea],
        diagonal_map(vec![
            (0, 2, ac),
            (0, 3, ad),
            (1, 3, bd),
            (1, 4, be),
            (2, 4, ce),
        ]),
        r,
        area,
    )
}

/// Glues cyclic quadrilaterals `ABCD` and `DEFA` along `AD`.
pub fn juxtapose_hexagon(
    first: &QuadSides,
    second: &QuadSides,
    arrangement: &HexagonArrangement,
) -> Result<CyclicPolygon> {
    check_permutation(&arrangement.first)?;
    check_permutation(&arrangement.second)?;
    let r = same_radius(quad_radius(first)?, quad_radius(second)?)?;
    let p = first.as_array();
    let q = second.as_array();
    let [ab, bc, cd, da] = arrangement.first.map(|k| p[k].clone());
    let [de, ef, fa, ad] = arrangement.second.map(|k| q[k].clone());
    same_length(&da, &ad)?;
    // the second piece retracing the first one's arc puts E on C and F on B
    if (&de, &ef, &fa) == (&cd, &bc, &ab) && ad != &r * 2 {
        return Err(Error::DegeneratePolygon(
            "second quadrilateral mirrors the first onto the same arc; vertices coincide".into(),
        ));
    }

    let abcd = QuadSides::new(ab.clone(), bc.clone(), cd.clone(), ad.clone())?;
    let (bd, ac) = diagonals_of(&abcd, "ABCD")?;
    let defa = QuadSides::new(de.clone(), ef.clone(), fa.clone(), ad.clone())?;
    let (ae, df) = diagonals_of(&defa, "ADEF")?;
    // ABDE: BE * AD = AB * DE + BD * EA; ACDF: CF * AD = AC * DF + CD * FA
    let be = common_chord(
        "BE",
        &ChordConstraint::Quad(bc.clone(), cd.clone(), de.clone()),
        &ChordConstraint::Quad(ef.clone(), fa.clone(), ab.clone()),
        &r,
        Some(&PtolemyWitness::new(&ad, &ab, &de, &bd, &ae)),
    )?;
    let cf = common_chord(
        "CF",
        &ChordConstraint::Quad(cd.clone(), de.clone(), ef.clone()),
        &ChordConstraint::Quad(fa.clone(), ab.clone(), bc.clone()),
        &r,
        Some(&PtolemyWitness::new(&ad, &ac, &df, &cd, &fa)),
    )?;
    let abcf = QuadSides::new(ab.clone(), bc.clone(), cf.clone(), fa.clone())?;
    let (bf, _) = diagonals_of(&abcf, "ABCF")?;
    let cdef = QuadSides::new(cd.clone(), de.clone(), ef.clone(), cf.clone())?;
    let (_, ce) = diagonals_of(&cdef, "CDEF")?;
    let area = brahmagupta_area(&abcd).ok_or_else(|| irrational("area of ABCD"))?
        + brahmagupta_area(&defa).ok_or_else(|| irrational("area of ADEF"))?;
    CyclicPolygon::new(
        vec![ab, bc, cd, de, ef, fa],
        diagonal_map(vec![
            (0, 2, ac),
            (0, 3, ad),
            (0, 4, ae),
            (1, 3, bd),
            (1, 4, be),
            (1, 5, bf),
            (2, 4, ce),
            (2, 5, cf),
            (3, 5, df),
        ]),
        r,
        area,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn set(xs: &[Rational]) -> BTreeSet<Rational> {
        xs.iter().cloned().collect()
    }

    #[test]
    fn missing_triangle_side() {
        let roots = solve_missing_length_triangle(&q(39, 2), &z(26), &q(65, 4)).unwrap();
        assert!(roots.contains(&q(65, 2)));
        assert!(solve_missing_length_triangle(&z(3), &z(4), &q(5, 2))
            .unwrap()
            .contains(&z(5)));
        assert!(solve_missing_length_triangle(&z(-3), &z(4), &q(5, 2)).is_err());
        let quartic = ChordConstraint::Triangle(q(39, 2), z(26)).quartic(&q(65, 4));
        assert_eq!(quartic.degree(), Some(4));
        assert_eq!(quartic.evaluate(&q(65, 2)), z(0));
    }

    #[test]
    fn missing_quad_side() {
        let roots = solve_missing_length_quad(&z(8), &q(25, 2), &z(26), &q(65, 4)).unwrap();
        assert!(roots.contains(&q(65, 2)));
        for d in &roots {
            let quad = QuadSides::new(z(8), q(25, 2), z(26), d.clone()).unwrap();
            assert_eq!(quad_circumradius(&quad), Some(q(65, 4)));
        }
    }

    #[test]
    fn common_root_cases() {
        let a = set(&[q(65, 2), z(3), z(7)]);
        let b = set(&[q(65, 2), z(9)]);
        assert_eq!(common_root("AD", &a, &b).unwrap(), q(65, 2));
        assert!(matches!(
            common_root("x", &set(&[z(1)]), &set(&[z(2)])),
            Err(Error::NoCommonRoot { .. })
        ));
        match common_root("x", &set(&[z(1), z(2)]), &set(&[z(1), z(2)])) {
            Err(Error::AmbiguousRoot { candidates, .. }) => {
                assert_eq!(candidates, vec![z(1), z(2)])
            }
            other => panic!("expected ambiguity, got {other:?}"),
        }
    }

    #[test]
    fn gcd_route_agrees_with_root_sets() {
        let r = q(65, 4);
        let t = ChordConstraint::Triangle(q(39, 2), z(26));
        let qd = ChordConstraint::Quad(z(8), q(25, 2), z(26));
        let shared: BTreeSet<Rational> = t
            .solve(&r)
            .unwrap()
            .intersection(&qd.solve(&r).unwrap())
            .cloned()
            .collect();
        // CE is a diameter here, so the folded arrangement also fits both radii
        assert_eq!(shared, set(&[q(91, 10), q(65, 2)]));
        assert!(matches!(
            common_chord("AD", &t, &qd, &r, None),
            Err(Error::AmbiguousRoot { .. })
        ));
        // ACDE with AC = 39/2, CE = 65/2
        let w = PtolemyWitness::new(&q(65, 2), &q(39, 2), &q(39, 2), &z(26), &z(26));
        assert_eq!(common_chord("AD", &t, &qd, &r, Some(&w)).unwrap(), q(65, 2));
    }

    #[test]
    fn pentagon_from_pieces() {
        let tri = TriangleSides::new(q(20, 3), q(13, 3), q(11, 3)).unwrap();
        let quad = QuadSides::new(q(11, 3), q(56, 9), q(20, 3), q(25, 9)).unwrap();
        let p = juxtapose_pentagon(&tri, &quad, &PentagonArrangement::STANDARD).unwrap();
        assert_eq!(p.area(), &z(28));
        assert_eq!(p.circumradius(), &q(65, 18));
        let mut d: Vec<Rational> = p.diagonals().values().cloned().collect();
        d.sort();
        let mut want = vec![q(20, 3), q(65, 9), q(52, 9), q(323, 45), q(52, 9)];
        want.sort();
        assert_eq!(d, want);
    }

    #[test]
    fn pentagon_rejections() {
        let quad = QuadSides::new(q(11, 3), q(56, 9), q(20, 3), q(25, 9)).unwrap();
        let other = TriangleSides::new(z(3), z(4), z(5)).unwrap();
        assert!(matches!(
            juxtapose_pentagon(&other, &quad, &PentagonArrangement::STANDARD),
            Err(Error::CircumradiusMismatch { .. })
        ));
        // same circumradius 65/18, but the chosen sides differ
        let tri = TriangleSides::new(q(20, 3), q(13, 3), q(11, 3)).unwrap();
        let arr = PentagonArrangement {
            triangle: [0, 2, 1],
            quad: [0, 1, 2, 3],
        };
        assert!(matches!(
            juxtapose_pentagon(&tri, &quad, &arr),
            Err(Error::SharedLengthMismatch { .. })
        ));
        let bad = PentagonArrangement {
            triangle: [0, 0, 1],
            quad: [0, 1, 2, 3],
        };
        assert!(juxtapose_pentagon(&tri, &quad, &bad).is_err());
    }

    #[test]
    fn mirrored_quadrilateral_is_degenerate() {
        let quad = QuadSides::new(q(11, 3), q(56, 9), q(20, 3), q(25, 9)).unwrap();
        // ABCD = (AB, BC, CD, DA); DEFA retraces it backwards
        let arr = HexagonArrangement {
            first: [0, 1, 3, 2],
            second: [3, 1, 0, 2],
        };
        assert!(matches!(
            juxtapose_hexagon(&quad, &quad, &arr),
            Err(Error::DegeneratePolygon(_))
        ));
    }
}
