//! Exact placement of a cyclic polygon's vertices on its circumcircle.
//!
//! A chord `s` of a circle of radius `R` subtends a central angle `2h` with
//! `sin h = s/2R`. When every `cos h` is rational, each central angle is a
//! rotation with rational cosine and sine, and the vertices are rational
//! points. Closure and winding are then decided exactly.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use super::polygon::CyclicPolygon;
use crate::arith::Rational;
use crate::error::{Error, Result};

/// A rotation `(cos, sin)` with `cos^2 + sin^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRotation {
    cos: Rational,
    sin: Rational,
}

impl UnitRotation {
    pub fn new(cos: Rational, sin: Rational) -> Result<Self> {
        if cos.square() + sin.square() != 1 {
            return Err(Error::Domain(format!(
                "({cos}, {sin}) is not on the unit circle"
            )));
        }
        Ok(UnitRotation { cos, sin })
    }

    pub fn identity() -> Self {
        UnitRotation {
            cos: Rational::one(),
            sin: Rational::zero(),
        }
    }

    /// The rotation by `2h` given `cos h` and `sin h`.
    pub fn doubled(cos_h: &Rational, sin_h: &Rational) -> Result<Self> {
        Self::new(cos_h.square() - sin_h.square(), cos_h * sin_h * 2)
    }

    pub fn cos(&self) -> &Rational {
        &self.cos
    }

    pub fn sin(&self) -> &Rational {
        &self.sin
    }

    pub fn compose(&self, other: &UnitRotation) -> UnitRotation {
        UnitRotation {
            cos: &self.cos * &other.cos - &self.sin * &other.sin,
            sin: &self.sin * &other.cos + &self.cos * &other.sin,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.cos == 1 && self.sin.is_zero()
    }

    /// 0 for angles in `[0, pi)`, 1 for `[pi, 2pi)`.
    fn half_plane(&self) -> u8 {
        if self.sin.is_positive() || (self.sin.is_zero() && self.cos.is_positive()) {
            0
        } else {
            1
        }
    }

    /// Orders rotations by their angle in `[0, 2pi)`.
    pub fn angle_cmp(&self, other: &UnitRotation) -> Ordering {
        self.half_plane().cmp(&other.half_plane()).then_with(|| {
            let cross = &self.cos * &other.sin - &self.sin * &other.cos;
            Rational::zero().cmp(&cross)
        })
    }
}

/// A point of the rational plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn dist2(&self, other: &Point) -> Rational {
        (&self.x - &other.x).square() + (&self.y - &other.y).square()
    }
}

/// Why no exact embedding was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingFailure {
    /// Some half-angle cosine is irrational; there is no rational placement.
    Inapplicable { side: usize },
    /// A side is longer than the diameter.
    ChordTooLong { side: usize },
    /// No choice of arcs closes the polygon after exactly one turn.
    NotClosed,
}

impl std::fmt::Display for EmbeddingFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbeddingFailure::Inapplicable { side } => {
                write!(f, "half-angle cosine of side {side} is irrational")
            }
            EmbeddingFailure::ChordTooLong { side } => {
                write!(f, "side {side} exceeds the diameter")
            }
            EmbeddingFailure::NotClosed => {
                write!(f, "the sides do not close up after exactly one turn")
            }
        }
    }
}

/// Places the vertices counter-clockwise on the circle `|z| = R`, vertex 0
/// at `(R, 0)`.
///
/// In a convex inscribed polygon at most one side subtends a major arc, so
/// the all-minor configuration and the `n` single-major ones are tried in
/// turn. Exactly one can close after one full turn.
pub fn embed_on_circle(poly: &CyclicPolygon) -> std::result::Result<Vec<Point>, EmbeddingFailure> {
    let r = poly.circumradius();
    let diameter = r * 2;
    let mut halves = Vec::with_capacity(poly.n());
    for (side, s) in poly.sides().iter().enumerate() {
        let sin_h = s / &diameter;
        let cos2 = Rational::one() - sin_h.square();
        if cos2.is_negative() {
            return Err(EmbeddingFailure::ChordTooLong { side });
        }
        let cos_h = cos2
            .sqrt()
            .ok()
            .flatten()
            .ok_or(EmbeddingFailure::Inapplicable { side })?;
        halves.push((cos_h, sin_h));
    }
    let minor: Vec<UnitRotation> = halves
        .iter()
        .map(|(c, s)| UnitRotation::doubled(c, s).expect("half angle lies on the unit circle"))
        .collect();

    let configs = std::iter::once(None).chain((0..poly.n()).map(Some));
    for major in configs {
        if let Some(k) = major {
            if halves[k].0.is_zero() {
                continue;
            }
        }
        let steps: Vec<UnitRotation> = minor
            .iter()
            .enumerate()
            .map(|(k, rot)| {
                if Some(k) == major {
                    // major arc: the central angle is 2pi - 2h
                    UnitRotation {
                        cos: rot.cos.clone(),
                        sin: -&rot.sin,
                    }
                } else {
                    rot.clone()
                }
            })
            .collect();
        if let Some(points) = wind_once(&steps, r) {
            return Ok(points);
        }
    }
    Err(EmbeddingFailure::NotClosed)
}

/// Accumulates the rotations; `Some` iff they total exactly one turn.
fn wind_once(steps: &[UnitRotation], r: &Rational) -> Option<Vec<Point>> {
    let mut acc = UnitRotation::identity();
    let mut positions = vec![acc.clone()];
    let mut wraps = 0;
    for step in steps {
        let next = acc.compose(step);
        if next.angle_cmp(&acc) != Ordering::Greater {
            wraps += 1;
        }
        positions.push(next.clone());
        acc = next;
    }
    if !acc.is_identity() || wraps != 1 {
        return None;
    }
    positions.pop();
    Some(
        positions
            .into_iter()
            .map(|p| Point {
                x: &p.cos * r,
                y: &p.sin * r,
            })
            .collect(),
    )
}

/// Signed shoelace area; positive for counter-clockwise order.
pub fn shoelace_area(points: &[Point]) -> Rational {
    let n = points.len();
    let twice: Rational = (0..n)
        .map(|i| {
            let (a, b) = (&points[i], &points[(i + 1) % n]);
            &a.x * &b.y - &b.x * &a.y
        })
        .sum();
    twice / 2
}

/// Every disagreement between the placed points and the stored lengths and area.
pub fn embedding_mismatches(poly: &CyclicPolygon, points: &[Point]) -> Vec<String> {
    let n = poly.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                out.push(format!("vertices {i} and {j} coincide"));
                continue;
            }
            let want = poly.chord(i, j).square();
            let got = points[i].dist2(&points[j]);
            if got != want {
                let pair = super::polygon::VertexPair::new(i, j);
                out.push(format!(
                    "|{pair}|^2 is {got} on the circle but {want} stored"
                ));
            }
        }
    }
    let area = shoelace_area(points);
    if &area != poly.area() {
        out.push(format!(
            "shoelace area {area} differs from stored area {}",
            poly.area()
        ));
    }
    out
}

/// Floating-point placement for diagnostics when the exact one is
/// unavailable. Closure is judged with relative tolerance `1e-12`.
pub fn embed_approx(poly: &CyclicPolygon) -> Option<Vec<(f64, f64)>> {
    let r = poly.circumradius().to_f64();
    let angles: Vec<f64> = poly
        .sides()
        .iter()
        .map(|s| 2.0 * (s.to_f64() / (2.0 * r)).clamp(-1.0, 1.0).asin())
        .collect();
    let configs = std::iter::once(None).chain((0..poly.n()).map(Some));
    for major in configs {
        let total: f64 = angles
            .iter()
            .enumerate()
            .map(|(k, a)| if Some(k) == major { TAU - a } else { *a })
            .sum();
        if ((total - TAU) / TAU).abs() <= 1e-12 {
            let mut phi = 0.0_f64;
            let mut pts = Vec::with_capacity(poly.n());
            for (k, a) in angles.iter().enumerate() {
                pts.push((r * phi.cos(), r * phi.sin()));
                phi += if Some(k) == major { TAU - a } else { *a };
            }
            return Some(pts);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn pentagon() -> CyclicPolygon {
        CyclicPolygon::from_labels(
            vec![z(8), q(25, 2), z(26), q(39, 2), z(26)],
            [
                ("AC", q(39, 2)),
                ("AD", q(65, 2)),
                ("BD", q(63, 2)),
                ("BE", z(30)),
                ("CE", q(65, 2)),
            ],
            q(65, 4),
            z(537),
        )
        .unwrap()
    }

    #[test]
    fn rotation_algebra() {
        let quarter = UnitRotation::new(z(0), z(1)).unwrap();
        let half = quarter.compose(&quarter);
        assert_eq!(half, UnitRotation::new(z(-1), z(0)).unwrap());
        assert!(half.compose(&half).is_identity());
        assert!(UnitRotation::new(z(1), z(1)).is_err());
        let r = UnitRotation::new(q(3, 5), q(4, 5)).unwrap();
        assert_eq!(r.angle_cmp(&quarter), Ordering::Less);
        assert_eq!(half.angle_cmp(&r), Ordering::Greater);
        assert_eq!(
            UnitRotation::doubled(&q(4, 5), &q(3, 5)).unwrap().cos(),
            &q(7, 25)
        );
    }

    #[test]
    fn pentagon_embeds_exactly() {
        let p = pentagon();
        let pts = embed_on_circle(&p).unwrap();
        assert_eq!(
            pts[0],
            Point {
                x: q(65, 4),
                y: z(0)
            }
        );
        assert!(embedding_mismatches(&p, &pts).is_empty());
        assert_eq!(shoelace_area(&pts), z(537));
        // CE is a diameter: C and E are antipodal
        assert_eq!(pts[2].x, -&pts[4].x);
        assert_eq!(pts[2].y, -&pts[4].y);
    }

    #[test]
    fn perturbed_diagonal_detected() {
        let p = pentagon();
        let bad = p
            .with_chord(super::super::VertexPair::new(1, 3), q(65, 2))
            .unwrap();
        let pts = embed_on_circle(&bad).unwrap();
        let issues = embedding_mismatches(&bad, &pts);
        assert_eq!(issues.len(), 1);
        assert!(issues[0].contains("BD"));
    }

    #[test]
    fn irrational_cosine_is_inapplicable() {
        // regular pentagon data is irrational; fake a side 1 on radius 1
        let p = pentagon().scaled(&z(1)).unwrap();
        let odd = CyclicPolygon::new(
            vec![z(1), z(1), z(1), z(1), z(1)],
            p.diagonals().clone(),
            z(1),
            z(1),
        )
        .unwrap();
        assert_eq!(
            embed_on_circle(&odd),
            Err(EmbeddingFailure::Inapplicable { side: 0 })
        );
        assert!(embed_approx(&odd).is_none());
        assert!(embed_approx(&p).is_some());
    }

    #[test]
    fn wrong_arc_does_not_close() {
        // six sides 3 on radius 5/2, each a turn of about 74 degrees
        let p = CyclicPolygon::new(vec![z(3); 6], diag(6), q(5, 2), z(1)).unwrap();
        assert_eq!(embed_on_circle(&p), Err(EmbeddingFailure::NotClosed));
    }

    fn diag(n: usize) -> std::collections::BTreeMap<super::super::VertexPair, Rational> {
        super::super::polygon::diagonal_pairs(n)
            .into_iter()
            .map(|p| (p, z(1)))
            .collect()
    }
}
