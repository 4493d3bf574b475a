//! Cyclic hexagons `ABCDEF` built from two Sastry quadrilaterals `ABCD` and
//! `ADEF` with equal circumradius and the shared chord `AD`.
//!
//! Writing the second quadrilateral's parameters as a linear split of the
//! first turns the equal-circumradius condition into two linear equations
//! for `v1, v2`. All lengths below are at one common scale, the one at which
//! the sides are polynomials in `(m, t, u1, u2)`; every quantity with a `u1`
//! and `u2` counterpart is obtained by swapping them.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::assembly::{ChordConstraint, Constructibility, CyclicPolygon, VertexPair};
use crate::error::{Error, Result};
use crate::geometry::{brahmagupta_area, brahmagupta_diagonals, QuadSides};
use crate::param::{SastryParams, SastryQuadrilateral};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonParams {
    pub m: Rational,
    pub t: Rational,
    pub u1: Rational,
    pub u2: Rational,
}

impl HexagonParams {
    pub fn new(m: Rational, t: Rational, u1: Rational, u2: Rational) -> Result<Self> {
        for (name, x) in [("t", &t), ("u1", &u1), ("u2", &u2)] {
            if x.is_zero() {
                return Err(Error::ZeroParameter { name });
            }
        }
        Ok(HexagonParams { m, t, u1, u2 })
    }

    /// Parses four comma-separated rationals `m,t,u1,u2`.
    pub fn parse(s: &str) -> Result<Self> {
        let v = crate::arith::parse_list(s)?;
        match <[Rational; 4]>::try_from(v) {
            Ok([m, t, u1, u2]) => Self::new(m, t, u1, u2),
            Err(v) => Err(Error::Parse(format!(
                "expected 4 parameters m,t,u1,u2, got {}",
                v.len()
            ))),
        }
    }

    pub fn as_array(&self) -> [&Rational; 4] {
        [&self.m, &self.t, &self.u1, &self.u2]
    }

    /// The same parameters with `u1` and `u2` exchanged.
    pub fn swapped(&self) -> HexagonParams {
        HexagonParams {
            m: self.m.clone(),
            t: self.t.clone(),
            u1: self.u2.clone(),
            u2: self.u1.clone(),
        }
    }
}

/// `c2 m^2 + c1 m + c0`.
fn in_m(m: &Rational, c2: Rational, c1: Rational, c0: Rational) -> Rational {
    c2 * m.square() + c1 * m + c0
}

/// `((u1+u2) m + 2)^2 + (u1-u2)^2`, positive whenever defined.
fn q_factor(m: &Rational, u1: &Rational, u2: &Rational) -> Rational {
    let s = u1 + u2;
    in_m(
        m,
        s.square(),
        &s * 4,
        u1.square() - u1 * u2 * 2 + u2.square() + 4,
    )
}

/// `(v1, v2)` with `(u1^2+1)(v1^2+1) = (u2^2+1)(v2^2+1)`.
pub fn solve_hexagon_condition(
    m: &Rational,
    u1: &Rational,
    u2: &Rational,
) -> Result<(Rational, Rational)> {
    let s = u1 + u2;
    let den = in_m(m, s.clone(), Rational::from(2) - u1 * u2 * 2, -&s);
    if den.is_zero() {
        return Err(Error::DegenerateSplit {
            m: m.clone(),
            u1: u1.clone(),
            u2: u2.clone(),
        });
    }
    let v1 = in_m(m, &s * u2, &s * 2, u2.square() - u1 * u2 + 2) / &den;
    let v2 = in_m(m, &s * u1, &s * 2, u1.square() - u1 * u2 + 2) / &den;
    Ok((v1, v2))
}

/// `AB`, `BC`, `CD` before sign normalisation; `DE`, `EF`, `FA` are the
/// same with `u1, u2` swapped.
fn raw_sides(hp: &HexagonParams) -> [Rational; 3] {
    let HexagonParams { m, t, u1, u2 } = hp;
    let s = u1 + u2;
    let p = u1 * u2;
    let sq1 = u1.square();
    let sq2 = u2.square();
    let f1 = in_m(
        m,
        &s * (&s * t - &p + 1),
        (&sq1 * u2 * -2 + u1 * 4 + u2 * 2) * t - &sq1 * 2 - &p * 4 + 2,
        (-&sq1 - &p * 2 + &sq2 + 2) * t + &sq1 * u2 - u1 * &sq2 - u1 * 3 - u2,
    );
    let f2 = in_m(
        m,
        &s * ((&p - 1) * t + &s),
        (&sq1 * 2 + &p * 4 - 2) * t - &sq1 * u2 * 2 + u1 * 4 + u2 * 2,
        (-&sq1 * u2 + u1 * &sq2 + u1 * 3 + u2) * t - &sq1 - &p * 2 + &sq2 + 2,
    );
    let g1 = in_m(
        m,
        &s * (t - u2),
        (-&p * 2 + 2) * t - &s * 2,
        -&s * t + &p - &sq2 - 2,
    );
    let g2 = in_m(
        m,
        &s * (u2 * t + 1),
        &s * t * 2 - &p * 2 + 2,
        (-&p + &sq2 + 2) * t - &s,
    );
    let h1 = f1 * f2;
    let h2 = -(&sq1 + 1) * g1 * g2;
    let h3 = (&sq2 + 1) * (m.square() + 1) * (u1 - t) * (t * u1 + 1) * q_factor(m, u1, u2);
    [h1, h2, h3]
}

/// `AD = t(u1^2+1)(u2^2+1)(m^2+1)Q`; twice the circumradius when `t = 1`.
fn raw_ad(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    t * (u1.square() + 1) * (u2.square() + 1) * (m.square() + 1) * q_factor(m, u1, u2)
}

fn raw_circumradius(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    (u1.square() + 1)
        * (u2.square() + 1)
        * (t.square() + 1)
        * (m.square() + 1)
        * q_factor(m, u1, u2)
        / 4
}

/// The central diagonal `BE`.
fn raw_be(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    let s = u1 + u2;
    let p = u1 * u2;
    let a = (&p + &s - 1) * (&p - &s - 1);
    let b = &s * (&p - 1);
    let (t2, t3) = (t.square(), t.pow(3));
    let f1 = in_m(
        m,
        &a * &t3 + &b * &t2 * 6 - &a * t * 3 - &b * 2,
        &b * &t3 * 4 - &a * &t2 * 6 - &b * t * 12 + &a * 2,
        -&a * &t3 - &b * &t2 * 6 + &a * t * 3 + &b * 2,
    );
    let f2 = in_m(
        m,
        &b * &t3 * 2 - &a * &t2 * 3 - &b * t * 6 + &a,
        -&a * &t3 * 2 - &b * &t2 * 12 + &a * t * 6 + &b * 4,
        -&b * &t3 * 2 + &a * &t2 * 3 + &b * t * 6 - &a,
    );
    q_factor(m, u1, u2) * f1 * f2
        / ((&t2 + 1).square() * (m.square() + 1) * (u1.square() + 1) * (u2.square() + 1))
}

/// The central diagonal `CF = ((u1+u2)t - u1u2 + 1)((1-u1u2)t - u1 - u2) Q (m^2+1)`.
fn raw_cf(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    let s = u1 + u2;
    let p = u1 * u2;
    (&s * t - &p + 1) * ((-&p + 1) * t - &s) * q_factor(m, u1, u2) * (m.square() + 1)
}

/// Minor diagonal `AC`; its swap is `DF`.
fn raw_ac(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    u1 * (t.square() + 1) * (u2.square() + 1) * (m.square() + 1) * q_factor(m, u1, u2)
}

/// Minor diagonal `BD`; its swap is `AE`.
fn raw_bd(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    let s = u1 + u2;
    let p = u1 * u2;
    let (sq1, sq2, t2) = (u1.square(), u2.square(), t.square());
    let f1 = in_m(
        m,
        &s * ((&p - 1) * &t2 + &s * t * 2 - &p + 1),
        (&sq1 * 2 + &p * 4 - 2) * &t2 + (-&sq1 * u2 * 4 + u1 * 8 + u2 * 4) * t - &sq1 * 2 - &p * 4
            + 2,
        (-&sq1 * u2 + u1 * &sq2 + u1 * 3 + u2) * &t2
            + (-&sq1 * 2 - &p * 4 + &sq2 * 2 + 4) * t
            + &sq1 * u2
            - u1 * &sq2
            - u1 * 3
            - u2,
    );
    let f2 = in_m(
        m,
        &s * (&s * &t2 + (-&p * 2 + 2) * t - &s),
        (-&sq1 * u2 * 2 + u1 * 4 + u2 * 2) * &t2 + (-&sq1 * 4 - &p * 8 + 4) * t + &sq1 * u2 * 2
            - u1 * 4
            - u2 * 2,
        (-&sq1 - &p * 2 + &sq2 + 2) * &t2
            + (&sq1 * u2 * 2 - u1 * &sq2 * 2 - u1 * 6 - u2 * 2) * t
            + &sq1
            + &p * 2
            - &sq2
            - 2,
    );
    f1 * f2 / (&t2 + 1)
}

/// Minor diagonal `BF`; its swap is `CE`.
fn raw_bf(hp: &HexagonParams) -> Rational {
    let HexagonParams { m, t, u1, u2 } = hp;
    let s = u1 + u2;
    let p = u1 * u2;
    let a = (&p + &s - 1) * (&p - &s - 1);
    let b = &s * (&p - 1);
    let (sq1, sq2, t2) = (u1.square(), u2.square(), t.square());
    let w = &p * 2 - &sq2 - 3;
    let e = &sq1 * &sq2 - u1 * u2.pow(3) - &sq1 - &p * 5 + 2;
    let f1 = in_m(
        m,
        &s * ((u1 * &sq2 - u1 - u2 * 2) * &t2 + (&p * 4 + &sq2 * 2 - 2) * t - u1 * &sq2
            + u1
            + u2 * 2),
        &b * &t2 * 4 - &a * t * 4 - &b * 4,
        -&e * &t2 - &s * &w * t * 2 + &e,
    );
    let f2 = in_m(
        m,
        &s * ((&p * 2 + &sq2 - 1) * &t2 + (-u1 * &sq2 * 2 + u1 * 2 + u2 * 4) * t - &p * 2 - &sq2
            + 1),
        -&a * &t2 * 2 - &b * t * 8 + &a * 2,
        -&s * &w * &t2 + &e * t * 2 + &s * &w,
    );
    -(f1 * f2) / ((&sq2 + 1) * (&t2 + 1))
}

/// A hexagon together with the two quadrilaterals it was glued from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicHexagon {
    pub polygon: CyclicPolygon,
    pub constructibility: Constructibility,
    pub params: HexagonParams,
    pub v1: Rational,
    pub v2: Rational,
    /// The global sign applied to the raw closed forms, `1` or `-1`.
    pub sign: i32,
    /// Factor taking the unit-scale Sastry quadrilaterals to the hexagon's scale.
    pub scale: Rational,
    /// `ABCD` with Sastry sides `(AB, BC, DA, CD)`.
    pub first: SastryQuadrilateral,
    /// `ADEF` with Sastry sides `(DE, EF, AD, FA)`.
    pub second: SastryQuadrilateral,
}

fn positive(name: &str, v: Rational) -> Result<Rational> {
    if v.is_positive() {
        Ok(v)
    } else {
        Err(Error::NonPositiveLength {
            name: name.into(),
            value: v,
        })
    }
}

fn nonzero_abs(name: &str, v: Rational) -> Result<Rational> {
    positive(name, v.abs())
}

pub fn build_hexagon(hp: &HexagonParams) -> Result<CyclicHexagon> {
    let (v1, v2) = solve_hexagon_condition(&hp.m, &hp.u1, &hp.u2)?;
    let sw = hp.swapped();
    let [h1, h2, h3] = raw_sides(hp);
    let [h4, h5, h6] = raw_sides(&sw);
    let raw = [h1, h2, h3, h4, h5, h6];
    let names = ["AB", "BC", "CD", "DE", "EF", "FA"];
    if let Some(k) = raw.iter().position(Rational::is_zero) {
        return Err(Error::NonPositiveLength {
            name: names[k].into(),
            value: Rational::zero(),
        });
    }
    let sign = if raw.iter().all(Rational::is_positive) {
        1
    } else if raw.iter().all(Rational::is_negative) {
        -1
    } else {
        return Err(Error::MixedSigns {
            sides: raw.to_vec(),
        });
    };
    let sigma = Rational::from(sign);
    let sides: Vec<Rational> = raw.iter().map(|h| h * &sigma).collect();

    let r = raw_circumradius(hp);
    // the central diagonals keep their sign: a negative value means one
    // quadrilateral would have to lie on the same side of the seam as the other
    let ad = positive("AD", raw_ad(hp) * &sigma)?;
    let be = positive("BE", raw_be(hp) * &sigma)?;
    let cf = positive("CF", raw_cf(hp) * &sigma)?;
    let ac = nonzero_abs("AC", raw_ac(hp))?;
    let bd = nonzero_abs("BD", raw_bd(hp))?;
    let bf = nonzero_abs("BF", raw_bf(hp))?;
    let df = nonzero_abs("DF", raw_ac(&sw))?;
    let ae = nonzero_abs("AE", raw_bd(&sw))?;
    let ce = nonzero_abs("CE", raw_bf(&sw))?;

    let invariant = |what: &str| {
        Error::Invariant(format!(
            "hexagon {what}: closed form disagrees with the pieces"
        ))
    };
    let sp1 = SastryParams::new(hp.t.clone(), hp.u1.clone(), v1.clone())?;
    let sp2 = SastryParams::new(hp.t.clone(), hp.u2.clone(), v2.clone())?;
    let scale = &sides[2] / &sp1.formulas().sides[3];
    let first = SastryQuadrilateral::with_scale(&sp1, &scale)?;
    let second = SastryQuadrilateral::with_scale(&sp2, &scale)?;
    let [ab, bc, cd, de, ef, fa] = <[Rational; 6]>::try_from(sides.clone()).expect("six sides");
    if first.sides.as_array() != [&ab, &bc, &ad, &cd]
        || second.sides.as_array() != [&de, &ef, &ad, &fa]
    {
        return Err(invariant("sides"));
    }
    if first.circumradius != r || second.circumradius != r {
        return Err(invariant("circumradius"));
    }

    let abcd = QuadSides::new(ab.clone(), bc.clone(), cd.clone(), ad.clone())?;
    let defa = QuadSides::new(de.clone(), ef.clone(), fa.clone(), ad.clone())?;
    let abcf = QuadSides::new(ab.clone(), bc.clone(), cf.clone(), fa.clone())?;
    let cdef = QuadSides::new(cd.clone(), de.clone(), ef.clone(), cf.clone())?;
    let minor = |q: &QuadSides, what: &str| {
        brahmagupta_diagonals(q).ok_or_else(|| invariant(&format!("{what} diagonals")))
    };
    if minor(&abcd, "ABCD")? != (bd.clone(), ac.clone())
        || minor(&defa, "ADEF")? != (ae.clone(), df.clone())
        || minor(&abcf, "ABCF")?.0 != bf
        || minor(&cdef, "CDEF")?.1 != ce
    {
        return Err(invariant("minor diagonals"));
    }
    let central = [
        (
            "BE",
            &be,
            ChordConstraint::Quad(bc.clone(), cd.clone(), de.clone()),
        ),
        (
            "BE",
            &be,
            ChordConstraint::Quad(ef.clone(), fa.clone(), ab.clone()),
        ),
        (
            "CF",
            &cf,
            ChordConstraint::Quad(cd.clone(), de.clone(), ef.clone()),
        ),
        (
            "CF",
            &cf,
            ChordConstraint::Quad(fa.clone(), ab.clone(), bc.clone()),
        ),
    ];
    for (name, d, c) in &central {
        if !c.quartic(&r).evaluate(d).is_zero() {
            return Err(invariant(name));
        }
    }
    let area = match (brahmagupta_area(&abcd), brahmagupta_area(&defa)) {
        (Some(a), Some(b)) => a + b,
        _ => {
            return Err(Error::Invariant(
                "a hexagon piece has irrational area".into(),
            ))
        }
    };
    if area != &first.area + &second.area {
        return Err(invariant("area"));
    }

    let diagonals = [
        ((0, 2), ac),
        ((0, 3), ad),
        ((0, 4), ae),
        ((1, 3), bd),
        ((1, 4), be),
        ((1, 5), bf),
        ((2, 4), ce),
        ((2, 5), cf),
        ((3, 5), df),
    ]
    .into_iter()
    .map(|((i, j), d)| (VertexPair::new(i, j), d))
    .collect();
    let polygon = CyclicPolygon::new(sides, diagonals, r, area)?;
    let constructibility = classify_constructibility(&polygon);
    Ok(CyclicHexagon {
        polygon,
        constructibility,
        params: hp.clone(),
        v1,
        v2,
        sign,
        scale,
        first,
        second,
    })
}

/// `AD` is a diameter, or one quadrilateral has both diagonals shorter than
/// `AD` while the other has one longer.
pub fn classify_constructibility(p: &CyclicPolygon) -> Constructibility {
    let d = |s: &str| p.diagonal(s).expect("hexagon has all nine diagonals");
    let ad = d("AD");
    if *ad == p.circumradius() * 2 {
        return Constructibility::Diameter;
    }
    let short = |x: &str, y: &str| d(x) < ad && d(y) < ad;
    let long = |x: &str, y: &str| d(x) > ad || d(y) > ad;
    if (short("AC", "BD") && long("AE", "DF")) || (short("AE", "DF") && long("AC", "BD")) {
        Constructibility::MinorMajor
    } else {
        Constructibility::Unconfirmed
    }
}
