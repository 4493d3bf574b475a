use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

const LABELS: [char; 6] = ['A', 'B', 'C', 'D', 'E', 'F'];

/// Unordered pair of vertex indices, stored with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    i: usize,
    j: usize,
}

impl VertexPair {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a vertex pair needs two distinct vertices");
        VertexPair {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Two-letter name such as `"AC"`.
    pub fn label(&self) -> String {
        format!("{}{}", vertex_label(self.i), vertex_label(self.j))
    }

    /// Parses `"AC"`, `"ca"`, ... for vertices A..F.
    pub fn parse(s: &str) -> Result<Self> {
        let idx = |c: char| {
            LABELS
                .iter()
                .position(|&l| l == c.to_ascii_uppercase())
                .ok_or_else(|| Error::Parse(format!("unknown vertex {c:?} in {s:?}")))
        };
        let mut chars = s.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(a), Some(b), None) => {
                let (a, b) = (idx(a)?, idx(b)?);
                if a == b {
                    return Err(Error::Parse(format!("{s:?} repeats a vertex")));
                }
                Ok(VertexPair::new(a, b))
            }
            _ => Err(Error::Parse(format!(
                "expected two vertex letters, got {s:?}"
            ))),
        }
    }

    /// True when the two vertices are neighbours on an `n`-gon.
    pub fn is_side(&self, n: usize) -> bool {
        self.j - self.i == 1 || (self.i == 0 && self.j == n - 1)
    }
}

impl fmt::Debug for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Sufficient planarity conditions checked directly on the lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Constructibility {
    /// The seam chord is a diameter, so each piece sits in its own half.
    Diameter,
    /// One piece is forced into the minor segment of the seam, the other
    /// into the major one.
    MinorMajor,
    /// Neither condition applies; only the embedding oracle can decide.
    Unconfirmed,
}

impl fmt::Display for Constructibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constructibility::Diameter => "DIAMETER",
            Constructibility::MinorMajor => "MINOR_MAJOR",
            Constructibility::Unconfirmed => "UNCONFIRMED",
        })
    }
}

pub fn vertex_label(i: usize) -> char {
    LABELS[i]
}

/// All `n(n-3)/2` diagonals of an `n`-gon in label order.
pub fn diagonal_pairs(n: usize) -> Vec<VertexPair> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = VertexPair::new(i, j);
            if !p.is_side(n) {
                out.push(p);
            }
        }
    }
    out
}

/// A cyclic pentagon or hexagon with every side, every diagonal, the
/// circumradius and the area.
///
/// Side `k` joins vertex `k` to vertex `k+1 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPolygon {
    sides: Vec<Rational>,
    diagonals: BTreeMap<VertexPair, Rational>,
    circumradius: Rational,
    area: Rational,
}

impl CyclicPolygon {
    pub fn new(
        sides: Vec<Rational>,
        diagonals: BTreeMap<VertexPair, Rational>,
        circumradius: Rational,
        area: Rational,
    ) -> Result<Self> {
        let n = sides.len();
        if !(5..=6).contains(&n) {
            return Err(Error::Domain(format!(
                "only pentagons and hexagons are supported, got {n} sides"
            )));
        }
        let expected = diagonal_pairs(n);
        if diagonals.keys().copied().ne(expected.iter().copied()) {
            let got: Vec<String> = diagonals.keys().map(VertexPair::label).collect();
            return Err(Error::Domain(format!(
                "diagonal map for a {n}-gon must cover exactly {:?}, got {got:?}",
                expected.iter().map(VertexPair::label).collect::<Vec<_>>()
            )));
        }
        let named = sides
            .iter()
            .enumerate()
            .map(|(k, s)| (VertexPair::new(k, (k + 1) % n).label(), s))
            .chain(diagonals.iter().map(|(p, d)| (p.label(), d)))
            .chain([
                ("R".to_string(), &circumradius),
                ("area".to_string(), &area),
            ]);
        for (name, v) in named {
            if !v.is_positive() {
                return Err(Error::NonPositiveLength {
                    name,
                    value: v.clone(),
                });
            }
        }
        Ok(CyclicPolygon {
            sides,
            diagonals,
            circumradius,
            area,
        })
    }

    /// Builds from `(label, value)` diagonal entries such as `("AC", d)`.
    pub fn from_labels<'a>(
        sides: Vec<Rational>,
        diagonals: impl IntoIterator<Item = (&'a str, Rational)>,
        circumradius: Rational,
        area: Rational,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, d) in diagonals {
            if map.insert(VertexPair::parse(label)?, d).is_some() {
                return Err(Error::Domain(format!("diagonal {label} given twice")));
            }
        }
        Self::new(sides, map, circumradius, area)
    }

    pub fn n(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[Rational] {
        &self.sides
    }

    pub fn diagonals(&self) -> &BTreeMap<VertexPair, Rational> {
        &self.diagonals
    }

    pub fn diagonal(&self, label: &str) -> Option<&Rational> {
        VertexPair::parse(label)
            .ok()
            .and_then(|p| self.diagonals.get(&p))
    }

    pub fn circumradius(&self) -> &Rational {
        &self.circumradius
    }

    pub fn area(&self) -> &Rational {
        &self.area
    }

    /// Length of the chord between vertices `i` and `j`, side or diagonal.
    pub fn chord(&self, i: usize, j: usize) -> &Rational {
        let n = self.n();
        let p = VertexPair::new(i % n, j % n);
        if p.is_side(n) {
            let k = if p.j - p.i == 1 { p.i } else { p.j };
            &self.sides[k]
        } else {
            &self.diagonals[&p]
        }
    }

    pub fn perimeter(&self) -> Rational {
        self.sides.iter().sum()
    }

    /// Every length times `factor`, the area times `factor^2`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::Domain(format!(
                "scale factor {factor} must be positive"
            )));
        }
        Self::new(
            self.sides.iter().map(|s| s * factor).collect(),
            self.diagonals
                .iter()
                .map(|(p, d)| (*p, d * factor))
                .collect(),
            &self.circumradius * factor,
            &self.area * &factor.square(),
        )
    }

    /// A copy with one chord replaced; used to plant defects and by editors.
    pub fn with_chord(&self, pair: VertexPair, value: Rational) -> Result<Self> {
        let mut out = self.clone();
        let n = self.n();
        if pair.j >= n {
            return Err(Error::Domain(format!("{pair} is not a chord of a {n}-gon")));
        }
        if pair.is_side(n) {
            let k = if pair.j - pair.i == 1 { pair.i } else { pair.j };
            out.sides[k] = value;
        } else {
            out.diagonals.insert(pair, value);
        }
        Self::new(out.sides, out.diagonals, out.circumradius, out.area)
    }
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
    fn pair_labels() {
        assert_eq!(VertexPair::parse("ca").unwrap(), VertexPair::new(0, 2));
        assert_eq!(VertexPair::new(4, 0).label(), "AE");
        assert!(VertexPair::parse("AA").is_err());
        assert!(VertexPair::parse("AG").is_err());
        let labels: Vec<String> = diagonal_pairs(6).iter().map(VertexPair::label).collect();
        assert_eq!(
            labels,
            ["AC", "AD", "AE", "BD", "BE", "BF", "CE", "CF", "DF"]
        );
        assert_eq!(diagonal_pairs(5).len(), 5);
    }

    #[test]
    fn chords_cover_sides_and_diagonals() {
        let p = pentagon();
        assert_eq!(p.chord(0, 1), &z(8));
        assert_eq!(p.chord(4, 0), &z(26));
        assert_eq!(p.chord(0, 4), &z(26));
        assert_eq!(p.chord(2, 4), &q(65, 2));
        assert_eq!(p.perimeter(), z(92));
    }

    #[test]
    fn rejects_bad_shapes() {
        let p = pentagon();
        let mut d = p.diagonals().clone();
        d.remove(&VertexPair::new(0, 2));
        assert!(CyclicPolygon::new(p.sides().to_vec(), d, q(65, 4), z(537)).is_err());
        assert!(p.with_chord(VertexPair::new(1, 3), z(-1)).is_err());
        assert!(CyclicPolygon::new(vec![z(1); 4], BTreeMap::new(), z(1), z(1)).is_err());
    }

    #[test]
    fn scaling() {
        let p = pentagon().scaled(&z(2)).unwrap();
        assert_eq!(p.area(), &z(2148));
        assert_eq!(p.diagonal("BD"), Some(&z(63)));
    }
}
