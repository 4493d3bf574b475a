//! Cyclic pentagons `ABCDE` built from an Euler triangle `CDE` and a Sastry
//! quadrilateral `ABCE` sharing the chord `CE`.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::assembly::{ChordConstraint, Constructibility, CyclicPolygon, VertexPair};
use crate::error::{Error, Result};
use crate::geometry::{brahmagupta_area, heron_area, QuadSides, TriangleSides};
use crate::param::{
    euler_triangle, EulerParams, RationalTriangle, SastryParams, SastryQuadrilateral,
};

/// The six free parameters of the pentagon family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonParams {
    pub m: Rational,
    pub n: Rational,
    pub p: Rational,
    pub q: Rational,
    pub u: Rational,
    pub v: Rational,
}

impl PentagonParams {
    pub fn new(
        m: Rational,
        n: Rational,
        p: Rational,
        q: Rational,
        u: Rational,
        v: Rational,
    ) -> Result<Self> {
        for (name, x) in [
            ("m", &m),
            ("n", &n),
            ("p", &p),
            ("q", &q),
            ("u", &u),
            ("v", &v),
        ] {
            if x.is_zero() {
                return Err(Error::ZeroParameter { name });
            }
        }
        Ok(PentagonParams { m, n, p, q, u, v })
    }

    /// Parses six comma-separated rationals `m,n,p,q,u,v`.
    pub fn parse(s: &str) -> Result<Self> {
        let v = crate::arith::parse_list(s)?;
        match <[Rational; 6]>::try_from(v) {
            Ok([m, n, p, q, u, vv]) => Self::new(m, n, p, q, u, vv),
            Err(v) => Err(Error::Parse(format!(
                "expected 6 parameters m,n,p,q,u,v, got {}",
                v.len()
            ))),
        }
    }

    pub fn as_array(&self) -> [&Rational; 6] {
        [&self.m, &self.n, &self.p, &self.q, &self.u, &self.v]
    }
}

/// `(t, k)` equating the two circumradii and the two lengths of `CE`:
/// `t = p/q`, `k = pmn(u^2+1)(v^2+1) / (q(m^2+n^2))`.
pub fn solve_pentagon_conditions(pp: &PentagonParams) -> Result<(Rational, Rational)> {
    let PentagonParams { m, n, p, q, u, v } = pp;
    let mn2 = m.square() + n.square();
    if q.is_zero() || mn2.is_zero() {
        return Err(Error::Domain("q and m^2 + n^2 must be nonzero".into()));
    }
    let t = p / q;
    let k = p * m * n * (u.square() + 1) * (v.square() + 1) / (q * mn2);
    Ok((t, k))
}

/// A pentagon together with the pieces it was glued from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPentagon {
    pub polygon: CyclicPolygon,
    pub constructibility: Constructibility,
    pub params: PentagonParams,
    pub t: Rational,
    pub k: Rational,
    /// Triangle `CDE` as an Euler triangle with sides `(CE, CD, DE)`.
    pub triangle: RationalTriangle,
    /// Quadrilateral `ABCE` with sides `(AB, BC, CE, EA)`.
    pub quad: SastryQuadrilateral,
}

struct Lengths {
    sides: [Rational; 5],
    r: Rational,
    ce: Rational,
    ac: Rational,
    be: Rational,
    ad: Rational,
    bd: Rational,
}

fn closed_forms(pp: &PentagonParams) -> Lengths {
    let PentagonParams { m, n, p, q, u, v } = pp;
    let q2 = q.square();
    let u2 = u.square() + 1;
    let v2 = v.square() + 1;
    let pq2 = p.square() + q.square();
    let mn2 = m.square() + n.square();
    let uv = u * v;
    let s1 = (p * u + p * v + q - q * &uv) * (p * &uv + q * u + q * v - p) / &q2;
    let s2 = &u2 * (q * v - p) * (p * v + q) / &q2;
    let s3 = m * n * &u2 * &v2 * &pq2 / (&q2 * &mn2);
    let s4 = &u2 * &v2 * (m * q + n * p) * (m * p - n * q) / (&q2 * &mn2);
    let s5 = &v2 * (q * u - p) * (p * u + q) / &q2;
    Lengths {
        r: &u2 * &v2 * &pq2 / (&q2 * 4),
        ce: p * &u2 * &v2 / q,
        ac: u * &pq2 * &v2 / &q2,
        be: v * &pq2 * &u2 / &q2,
        ad: &pq2 * &v2 * (m * u - n) * (n * u + m) / (&mn2 * &q2),
        bd: &u2 * (m * q * v + n * p * v - m * p + n * q) * (m * p * v - n * q * v + m * q + n * p)
            / (&mn2 * &q2),
        sides: [s1, s2, s3, s4, s5],
    }
}

fn positive(name: &str, v: &Rational) -> Result<()> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveLength {
            name: name.into(),
            value: v.clone(),
        })
    }
}

/// Builds the pentagon from its closed forms and cross-checks them against
/// the pieces and the circumradius quartics.
pub fn build_pentagon(pp: &PentagonParams) -> Result<CyclicPentagon> {
    let (t, k) = solve_pentagon_conditions(pp)?;
    let l = closed_forms(pp);
    for (name, s) in ["AB", "BC", "CD", "DE", "EA"].iter().zip(&l.sides) {
        positive(name, s)?;
    }
    for (name, d) in [
        ("CE", &l.ce),
        ("AC", &l.ac),
        ("BE", &l.be),
        ("AD", &l.ad),
        ("BD", &l.bd),
    ] {
        positive(name, d)?;
    }
    let [ab, bc, cd, de, ea] = l.sides.clone();

    let ep = EulerParams::new(
        pp.m.clone(),
        pp.n.clone(),
        pp.p.clone(),
        pp.q.clone(),
        k.clone(),
    )?;
    let triangle = euler_triangle(&ep)?;
    let quad = crate::param::sastry_quadrilateral(&SastryParams::new(
        t.clone(),
        pp.u.clone(),
        pp.v.clone(),
    )?)?;
    let invariant = |what: &str| {
        Error::Invariant(format!(
            "pentagon {what} disagrees between closed form and pieces"
        ))
    };
    if triangle.sides.as_array() != [&l.ce, &cd, &de]
        || quad.sides.as_array() != [&ab, &bc, &l.ce, &ea]
    {
        return Err(invariant("sides"));
    }
    if triangle.circumradius != l.r || quad.circumradius != l.r {
        return Err(invariant("circumradius"));
    }
    // quadrilateral ABCE: Brahmagupta's d1 joins B and E
    if quad.diagonals != (l.ac.clone(), l.be.clone()) {
        return Err(invariant("AC / BE"));
    }
    let checks = [
        (
            "AD",
            &l.ad,
            ChordConstraint::Triangle(de.clone(), ea.clone()),
        ),
        (
            "AD",
            &l.ad,
            ChordConstraint::Quad(ab.clone(), bc.clone(), cd.clone()),
        ),
        (
            "BD",
            &l.bd,
            ChordConstraint::Triangle(bc.clone(), cd.clone()),
        ),
        (
            "BD",
            &l.bd,
            ChordConstraint::Quad(ab.clone(), ea.clone(), de.clone()),
        ),
    ];
    for (name, d, c) in &checks {
        if !c.quartic(&l.r).evaluate(d).is_zero() {
            return Err(invariant(name));
        }
    }

    let cde = TriangleSides::new(cd.clone(), de.clone(), l.ce.clone())?;
    let abce = QuadSides::new(ab.clone(), bc.clone(), l.ce.clone(), ea.clone())?;
    let area = match (heron_area(&cde), brahmagupta_area(&abce)) {
        (Some(a), Some(b)) => a + b,
        _ => {
            return Err(Error::Invariant(
                "a pentagon piece has irrational area".into(),
            ))
        }
    };
    if area != &triangle.area + &quad.area {
        return Err(invariant("area"));
    }

    let diagonals = [
        ((0, 2), l.ac),
        ((0, 3), l.ad),
        ((1, 3), l.bd),
        ((1, 4), l.be),
        ((2, 4), l.ce),
    ]
    .into_iter()
    .map(|((i, j), d)| (VertexPair::new(i, j), d))
    .collect();
    let polygon = CyclicPolygon::new(l.sides.to_vec(), diagonals, l.r, area)?;
    let constructibility = classify_polygon(&polygon);
    Ok(CyclicPentagon {
        polygon,
        constructibility,
        params: pp.clone(),
        t,
        k,
        triangle,
        quad,
    })
}

/// The seam `CE` is a diameter, or `CDE` is confined to the minor segment of
/// `CE` while `ABCE` reaches past it.
pub fn classify_constructibility(pent: &CyclicPentagon) -> Constructibility {
    classify_polygon(&pent.polygon)
}

fn classify_polygon(p: &CyclicPolygon) -> Constructibility {
    let d = |s: &str| p.diagonal(s).expect("pentagon has all five diagonals");
    let ce = d("CE");
    if *ce == p.circumradius() * 2 {
        return Constructibility::Diameter;
    }
    let (cd, de) = (&p.sides()[2], &p.sides()[3]);
    if cd < ce && de < ce && d("AC").max(d("BE")) > ce {
        Constructibility::MinorMajor
    } else {
        Constructibility::Unconfirmed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn params(v: [Rational; 6]) -> PentagonParams {
        let [m, n, p, qq, u, vv] = v;
        PentagonParams::new(m, n, p, qq, u, vv).unwrap()
    }

    #[test]
    fn conditions() {
        let (t, k) =
            solve_pentagon_conditions(&params([z(2), z(1), z(1), z(1), z(3), q(3, 2)])).unwrap();
        assert_eq!((t, k), (z(1), z(13)));
        let pp = params([z(3), z(1), z(2), z(3), z(1), z(2)]);
        let (t, k) = solve_pentagon_conditions(&pp).unwrap();
        assert_eq!((t.clone(), k.clone()), (q(2, 3), z(2)));
        // the two circumradii agree identically
        let PentagonParams {
            m,
            n,
            p,
            q: qq,
            u,
            v,
        } = &pp;
        let lhs =
            &k * (m.square() + n.square()) * (p.square() + qq.square()) / (m * n * p * qq * 4);
        let rhs = (t.square() + 1) * (u.square() + 1) * (v.square() + 1) / 4;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_example() {
        let pent = build_pentagon(&params([z(2), z(1), z(1), z(1), z(3), q(3, 2)])).unwrap();
        let p = &pent.polygon;
        assert_eq!(p.sides(), &[z(8), q(25, 2), z(26), q(39, 2), z(26)]);
        assert_eq!(p.diagonal("CE"), Some(&q(65, 2)));
        assert_eq!(p.diagonal("AC"), Some(&q(39, 2)));
        assert_eq!(p.diagonal("BE"), Some(&z(30)));
        assert_eq!(p.diagonal("AD"), Some(&q(65, 2)));
        assert_eq!(p.diagonal("BD"), Some(&q(63, 2)));
        assert_eq!(p.circumradius(), &q(65, 4));
        assert_eq!(p.area(), &z(537));
        assert_eq!(pent.constructibility, Constructibility::Diameter);
    }

    #[test]
    fn second_example() {
        let pent = build_pentagon(&params([z(3), z(1), z(2), z(3), z(1), z(2)])).unwrap();
        let p = &pent.polygon;
        assert_eq!(
            p.sides(),
            &[q(11, 3), q(56, 9), q(13, 3), q(11, 3), q(25, 9)]
        );
        assert_eq!(p.diagonal("CE"), Some(&q(20, 3)));
        assert_eq!(p.circumradius(), &q(65, 18));
        assert_eq!(p.area(), &z(28));
        assert_eq!(pent.constructibility, Constructibility::MinorMajor);
    }

    #[test]
    fn unconfirmed_fall_through() {
        // diagonals all shorter than CE and CE not a diameter
        let p = CyclicPolygon::from_labels(
            vec![z(1); 5],
            [
                ("AC", z(1)),
                ("AD", z(1)),
                ("BD", z(1)),
                ("BE", z(1)),
                ("CE", z(1)),
            ],
            z(1),
            z(1),
        )
        .unwrap();
        assert_eq!(classify_polygon(&p), Constructibility::Unconfirmed);
    }

    #[test]
    fn zero_side_rejected() {
        let err = build_pentagon(&params([z(1), z(1), z(1), z(1), z(1), z(1)])).unwrap_err();
        assert!(
            matches!(err, Error::NonPositiveLength { ref name, .. } if name == "BC"),
            "{err}"
        );
    }

    #[test]
    fn homogeneity() {
        let a = build_pentagon(&params([z(3), z(1), z(2), z(3), z(1), z(2)])).unwrap();
        // only the ratio p/q matters
        let b = build_pentagon(&params([z(3), z(1), z(4), z(6), z(1), z(2)])).unwrap();
        assert_eq!(a.polygon, b.polygon);
        let c = a.polygon.scaled(&z(3)).unwrap();
        assert_eq!(c.area(), &(a.polygon.area() * 9));
    }
}
