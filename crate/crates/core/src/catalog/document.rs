use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::assembly::{CyclicPolygon, VertexPair};
use crate::error::{Error, Result};
use crate::hexagon::CyclicHexagon;
use crate::pentagon::CyclicPentagon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolygonKind {
    Pentagon,
    Hexagon,
}

impl PolygonKind {
    pub fn vertices(self) -> usize {
        match self {
            PolygonKind::Pentagon => 5,
            PolygonKind::Hexagon => 6,
        }
    }

    pub fn of(poly: &CyclicPolygon) -> PolygonKind {
        if poly.n() == 5 {
            PolygonKind::Pentagon
        } else {
            PolygonKind::Hexagon
        }
    }
}

impl fmt::Display for PolygonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolygonKind::Pentagon => "pentagon",
            PolygonKind::Hexagon => "hexagon",
        })
    }
}

impl std::str::FromStr for PolygonKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pentagon" => Ok(PolygonKind::Pentagon),
            "hexagon" => Ok(PolygonKind::Hexagon),
            _ => Err(Error::Parse(format!("unknown polygon kind {s:?}"))),
        }
    }
}

/// The on-disk form of one polygon. Every rational is a `"n/d"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDocument {
    pub kind: PolygonKind,
    pub sides: Vec<Rational>,
    pub diagonals: BTreeMap<String, Rational>,
    pub circumradius: Rational,
    pub area: Rational,
    #[serde(default)]
    pub params: BTreeMap<String, Rational>,
    #[serde(default)]
    pub scale_note: String,
}

impl PolygonDocument {
    pub fn new(
        poly: &CyclicPolygon,
        params: BTreeMap<String, Rational>,
        scale_note: impl Into<String>,
    ) -> Self {
        PolygonDocument {
            kind: PolygonKind::of(poly),
            sides: poly.sides().to_vec(),
            diagonals: poly
                .diagonals()
                .iter()
                .map(|(p, d)| (p.label(), d.clone()))
                .collect(),
            circumradius: poly.circumradius().clone(),
            area: poly.area().clone(),
            params,
            scale_note: scale_note.into(),
        }
    }

    pub fn from_pentagon(p: &CyclicPentagon) -> Self {
        let names = ["m", "n", "p", "q", "u", "v"];
        let params = names
            .iter()
            .zip(p.params.as_array())
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        Self::new(&p.polygon, params, "closed-form scale")
    }

    pub fn from_hexagon(h: &CyclicHexagon) -> Self {
        let names = ["m", "t", "u1", "u2"];
        let params = names
            .iter()
            .zip(h.params.as_array())
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        Self::new(&h.polygon, params, "closed-form scale")
    }

    /// Validates the document and rebuilds the polygon.
    pub fn to_polygon(&self) -> Result<CyclicPolygon> {
        let n = self.kind.vertices();
        if self.sides.len() != n {
            return Err(Error::Schema(format!(
                "field `sides`: a {} has {n} sides, got {}",
                self.kind,
                self.sides.len()
            )));
        }
        let mut diagonals = BTreeMap::new();
        for (label, d) in &self.diagonals {
            let pair = VertexPair::parse(label)
                .map_err(|e| Error::Schema(format!("field `diagonals`: {e}")))?;
            if pair.j() >= n || pair.is_side(n) {
                return Err(Error::Schema(format!(
                    "field `diagonals`: {label} is not a diagonal of a {}",
                    self.kind
                )));
            }
            if diagonals.insert(pair, d.clone()).is_some() {
                return Err(Error::Schema(format!(
                    "field `diagonals`: {label} given twice"
                )));
            }
        }
        CyclicPolygon::new(
            self.sides.clone(),
            diagonals,
            self.circumradius.clone(),
            self.area.clone(),
        )
        .map_err(|e| Error::Schema(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};
    use crate::pentagon::{build_pentagon, PentagonParams};

    fn doc() -> PolygonDocument {
        let pp = PentagonParams::parse("2,1,1,1,3,3/2").unwrap();
        PolygonDocument::from_pentagon(&build_pentagon(&pp).unwrap())
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let text = doc().to_json();
        assert!(text.contains("\"8/1\""));
        assert!(text.contains("\"CE\": \"65/2\""));
        let back = PolygonDocument::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_polygon().unwrap().area(), &z(537));
    }

    #[test]
    fn four_gon_rejected() {
        let text = r#"{"kind":"quadrilateral","sides":["1","1","1","1"],"diagonals":{},
            "circumradius":"1","area":"1","params":{},"scale_note":""}"#;
        assert!(matches!(
            PolygonDocument::from_json(text),
            Err(Error::Parse(_))
        ));
        let mut d = doc();
        d.sides.pop();
        assert!(matches!(d.to_polygon(), Err(Error::Schema(_))));
    }

    #[test]
    fn bad_fields_named() {
        let mut d = doc();
        d.diagonals.insert("AB".into(), q(1, 2));
        let err = d.to_polygon().unwrap_err().to_string();
        assert!(err.contains("diagonals"), "{err}");
        let err = PolygonDocument::from_json("{\n  \"kind\": \"pentagon\",\n  \"sides\": [1]\n}")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 3"), "{err}");
    }
}
