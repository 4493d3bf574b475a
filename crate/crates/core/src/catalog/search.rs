use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::document::PolygonKind;
use crate::arith::Rational;
use crate::assembly::{
    scale_to_integers, verify_polygon, CheckStatus, Constructibility, CyclicPolygon, VertexPair,
};
use crate::error::{Error, Result};
use crate::hexagon::{build_hexagon, HexagonParams};
use crate::pentagon::{build_pentagon, PentagonParams};

/// Bounds of a parameter sweep. Every parameter ranges over the same set of
/// rationals `n/d` with `1 <= n <= max_numerator`, `1 <= d <= max_denominator`,
/// in lowest terms, and their negatives when `negative` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub kind: PolygonKind,
    pub max_numerator: u32,
    pub max_denominator: u32,
    pub negative: bool,
    /// Upper bound on the perimeter of the primitive integer form.
    pub max_perimeter: BigInt,
    pub limit: Option<usize>,
}

impl SweepSpec {
    /// Parameter values, smallest denominator first, then smallest
    /// numerator, each positive value followed by its negative.
    pub fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for d in 1..=self.max_denominator {
            for n in 1..=self.max_numerator {
                if n.gcd(&d) != 1 {
                    continue;
                }
                out.push(Rational::new(n, d));
                if self.negative {
                    out.push(Rational::new(-i64::from(n), d));
                }
            }
        }
        out
    }

    fn arity(&self) -> u32 {
        match self.kind {
            PolygonKind::Pentagon => 6,
            PolygonKind::Hexagon => 4,
        }
    }

    /// Number of parameter tuples the sweep visits.
    pub fn tuple_count(&self) -> Result<u64> {
        (self.values().len() as u64)
            .checked_pow(self.arity())
            .ok_or_else(|| Error::Domain("sweep is too large to enumerate".into()))
    }
}

/// Congruence class of a polygon: rotations and reflections of the side
/// cycle are identified.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DedupKey {
    pub kind: PolygonKind,
    pub sides: Vec<Rational>,
    pub diagonals: Vec<Rational>,
}

impl DedupKey {
    pub fn of(poly: &CyclicPolygon) -> DedupKey {
        let n = poly.n();
        let mut best: Option<Vec<Rational>> = None;
        for start in 0..n {
            for dir in [1isize, -1] {
                let seq: Vec<Rational> = (0..n as isize)
                    .map(|k| {
                        poly.sides()[(start as isize + dir * k).rem_euclid(n as isize) as usize]
                            .clone()
                    })
                    .collect();
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        let mut diagonals: Vec<Rational> = poly.diagonals().values().cloned().collect();
        diagonals.sort();
        DedupKey {
            kind: PolygonKind::of(poly),
            sides: best.expect("polygon has sides"),
            diagonals,
        }
    }

    pub fn to_key_string(&self) -> String {
        let join = |v: &[Rational]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "{}:{}:{}",
            self.kind,
            join(&self.sides),
            join(&self.diagonals)
        )
    }
}

/// One catalog line: the primitive integer form of a verified polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub kind: PolygonKind,
    pub params: BTreeMap<String, Rational>,
    /// Primitive sides in the polygon's own cyclic order.
    pub sides: Vec<Rational>,
    pub sorted_sides: Vec<Rational>,
    pub diagonals: BTreeMap<String, Rational>,
    pub circumradius: Rational,
    pub area: Rational,
    pub perimeter: Rational,
    /// Factor from the constructed polygon to the primitive one.
    pub length_factor: Rational,
    pub area_factor: Rational,
    pub constructibility: Constructibility,
    pub dedup_key: String,
}

impl CatalogRecord {
    /// The recorded polygon, rebuilt from the record alone.
    pub fn to_polygon(&self) -> Result<CyclicPolygon> {
        let mut diagonals = BTreeMap::new();
        for (label, d) in &self.diagonals {
            diagonals.insert(VertexPair::parse(label)?, d.clone());
        }
        CyclicPolygon::new(
            self.sides.clone(),
            diagonals,
            self.circumradius.clone(),
            self.area.clone(),
        )
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(format!("column {}: {e}", e.column())))
    }
}

/// Counts reported in the catalog footer.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub tried: u64,
    pub built: u64,
    /// Construction failures by error kind.
    pub rejected: BTreeMap<String, u64>,
    pub failed_verification: u64,
    pub embedding_inapplicable: u64,
    pub over_perimeter: u64,
    pub duplicates: u64,
    pub emitted: u64,
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rejected: u64 = self.rejected.values().sum();
        write!(
            f,
            "tried {}, built {}, rejected {rejected}",
            self.tried, self.built
        )?;
        if !self.rejected.is_empty() {
            let parts: Vec<String> = self
                .rejected
                .iter()
                .map(|(k, v)| format!("{k} {v}"))
                .collect();
            write!(f, " ({})", parts.join(", "))?;
        }
        write!(
            f,
            ", failed verification {}, embedding inapplicable {}, over perimeter {}, duplicates {}, emitted {}",
            self.failed_verification,
            self.embedding_inapplicable,
            self.over_perimeter,
            self.duplicates,
            self.emitted
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Ordered by perimeter, then by congruence class.
    pub records: Vec<CatalogRecord>,
    pub summary: SweepSummary,
}

enum Visit {
    Rejected(&'static str),
    FailedVerification,
    OverPerimeter,
    Kept(Box<(DedupKey, CatalogRecord)>, bool),
}

fn build(
    kind: PolygonKind,
    tuple: &[Rational],
) -> Result<(CyclicPolygon, Constructibility, BTreeMap<String, Rational>)> {
    let named = |names: &[&str]| -> BTreeMap<String, Rational> {
        names
            .iter()
            .zip(tuple)
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect()
    };
    match kind {
        PolygonKind::Pentagon => {
            let [m, n, p, q, u, v] = <[Rational; 6]>::try_from(tuple.to_vec()).expect("six values");
            let pent = build_pentagon(&PentagonParams::new(m, n, p, q, u, v)?)?;
            Ok((
                pent.polygon,
                pent.constructibility,
                named(&["m", "n", "p", "q", "u", "v"]),
            ))
        }
        PolygonKind::Hexagon => {
            let [m, t, u1, u2] = <[Rational; 4]>::try_from(tuple.to_vec()).expect("four values");
            let hex = build_hexagon(&HexagonParams::new(m, t, u1, u2)?)?;
            Ok((
                hex.polygon,
                hex.constructibility,
                named(&["m", "t", "u1", "u2"]),
            ))
        }
    }
}

/// Turns a verified polygon into its catalog record.
pub fn catalog_record(
    poly: &CyclicPolygon,
    constructibility: Constructibility,
    params: BTreeMap<String, Rational>,
) -> (DedupKey, CatalogRecord) {
    let form = scale_to_integers(poly);
    let prim = &form.area_integral;
    let key = DedupKey::of(prim);
    let mut sorted_sides = prim.sides().to_vec();
    sorted_sides.sort();
    let record = CatalogRecord {
        kind: PolygonKind::of(prim),
        params,
        sides: prim.sides().to_vec(),
        sorted_sides,
        diagonals: prim
            .diagonals()
            .iter()
            .map(|(p, d)| (p.label(), d.clone()))
            .collect(),
        circumradius: prim.circumradius().clone(),
        area: prim.area().clone(),
        perimeter: prim.perimeter(),
        length_factor: &form.length_factor * &Rational::from_integer(form.area_factor.clone()),
        area_factor: Rational::from_integer(form.area_factor),
        constructibility,
        dedup_key: key.to_key_string(),
    };
    (key, record)
}

fn visit(spec: &SweepSpec, values: &[Rational], index: u64) -> Visit {
    let base = values.len() as u64;
    let mut rest = index;
    let mut tuple = vec![Rational::zero(); spec.arity() as usize];
    for slot in tuple.iter_mut().rev() {
        *slot = values[(rest % base) as usize].clone();
        rest /= base;
    }
    let (poly, tag, params) = match build(spec.kind, &tuple) {
        Ok(b) => b,
        Err(e) => return Visit::Rejected(e.kind()),
    };
    let report = verify_polygon(&poly);
    if !report.passed() {
        return Visit::FailedVerification;
    }
    let inapplicable = report.embedding.status == CheckStatus::Inapplicable;
    let (key, record) = catalog_record(&poly, tag, params);
    if record.perimeter > Rational::from_integer(spec.max_perimeter.clone()) {
        return Visit::OverPerimeter;
    }
    Visit::Kept(Box::new((key, record)), inapplicable)
}

/// Enumerates, builds, verifies, scales and deduplicates.
///
/// Work is spread over the rayon pool; results are merged in enumeration
/// order, so the outcome does not depend on the number of workers.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepOutcome> {
    let values = spec.values();
    let total = if values.is_empty() {
        0
    } else {
        spec.tuple_count()?
    };
    let visits: Vec<Visit> = (0..total)
        .into_par_iter()
        .map(|i| visit(spec, &values, i))
        .collect();

    let mut summary = SweepSummary {
        tried: total,
        ..SweepSummary::default()
    };
    let mut unique: BTreeMap<DedupKey, CatalogRecord> = BTreeMap::new();
    for v in visits {
        match v {
            Visit::Rejected(kind) => *summary.rejected.entry(kind.to_string()).or_default() += 1,
            Visit::FailedVerification => {
                summary.built += 1;
                summary.failed_verification += 1;
            }
            Visit::OverPerimeter => {
                summary.built += 1;
                summary.over_perimeter += 1;
            }
            Visit::Kept(kept, inapplicable) => {
                summary.built += 1;
                summary.embedding_inapplicable += u64::from(inapplicable);
                let (key, record) = *kept;
                match unique.entry(key) {
                    Entry::Occupied(_) => summary.duplicates += 1,
                    Entry::Vacant(slot) => {
                        slot.insert(record);
                    }
                }
            }
        }
    }
    let mut records: Vec<(DedupKey, CatalogRecord)> = unique.into_iter().collect();
    records.sort_by(|(ka, a), (kb, b)| a.perimeter.cmp(&b.perimeter).then_with(|| ka.cmp(kb)));
    let mut records: Vec<CatalogRecord> = records.into_iter().map(|(_, r)| r).collect();
    if let Some(limit) = spec.limit {
        records.truncate(limit);
    }
    summary.emitted = records.len() as u64;
    Ok(SweepOutcome { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn spec(kind: PolygonKind, num: u32, den: u32) -> SweepSpec {
        SweepSpec {
            kind,
            max_numerator: num,
            max_denominator: den,
            negative: false,
            max_perimeter: BigInt::from(1000),
            limit: None,
        }
    }

    #[test]
    fn value_order() {
        let mut s = spec(PolygonKind::Pentagon, 3, 2);
        assert_eq!(s.values(), vec![z(1), z(2), z(3), q(1, 2), q(3, 2)]);
        s.negative = true;
        assert_eq!(&s.values()[..2], &[z(1), z(-1)]);
    }

    #[test]
    fn empty_range() {
        let out = run_sweep(&spec(PolygonKind::Hexagon, 0, 3)).unwrap();
        assert!(out.records.is_empty());
        assert_eq!(out.summary.tried, 0);
    }

    #[test]
    fn dedup_key_ignores_rotation_and_reflection() {
        let p = crate::pentagon::build_pentagon(&PentagonParams::parse("3,1,2,3,1,2").unwrap())
            .unwrap()
            .polygon;
        let rotated = CyclicPolygon::from_labels(
            vec![q(56, 9), q(11, 3), q(25, 9), q(11, 3), q(13, 3)],
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
        assert_eq!(DedupKey::of(&p).sides, DedupKey::of(&rotated).sides);
    }
}
