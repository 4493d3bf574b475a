use std::fmt;

use serde::Serialize;

use super::embed::{embed_approx, embed_on_circle, embedding_mismatches, EmbeddingFailure};
use super::polygon::{vertex_label, CyclicPolygon};
use crate::arith::Rational;
use crate::geometry::{
    heron_area, quad_circumradius, triangle_circumradius, QuadSides, TriangleSides,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check cannot be carried out exactly; it neither passes nor fails.
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    fn pass(name: String) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Pass,
            detail: String::new(),
        }
    }

    fn fail(name: String, detail: String) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Fail,
            detail,
        }
    }

    fn from_test(name: String, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail())
        }
    }
}

/// Outcome of every independent check run by [`verify_polygon`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub embedding: CheckResult,
    pub ptolemy: Vec<CheckResult>,
    pub triangle_circumradius: Vec<CheckResult>,
    pub quad_circumradius: Vec<CheckResult>,
    pub area: CheckResult,
}

impl VerificationReport {
    pub fn checks(&self) -> impl Iterator<Item = &CheckResult> {
        std::iter::once(&self.embedding)
            .chain(&self.ptolemy)
            .chain(&self.triangle_circumradius)
            .chain(&self.quad_circumradius)
            .chain(std::iter::once(&self.area))
    }

    /// True iff no applicable check failed.
    pub fn passed(&self) -> bool {
        self.checks().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let total = self.checks().count();
        let failed = self.failures().len();
        let skipped = self
            .checks()
            .filter(|c| c.status == CheckStatus::Inapplicable)
            .count();
        writeln!(
            f,
            "verification: {} ({} checks, {failed} failed, {skipped} inapplicable)",
            if self.passed() { "PASS" } else { "FAIL" },
            total
        )?;
        for c in self.checks().filter(|c| c.status != CheckStatus::Pass) {
            writeln!(f, "  {:?} {}: {}", c.status, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn names(idx: &[usize]) -> String {
    idx.iter().map(|&i| vertex_label(i)).collect()
}

fn ptolemy_checks(poly: &CyclicPolygon) -> Vec<CheckResult> {
    let n = poly.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let c = |a, b| poly.chord(a, b);
                    let lhs = c(i, k) * c(j, l);
                    let rhs = c(i, j) * c(k, l) + c(j, k) * c(l, i);
                    out.push(CheckResult::from_test(
                        format!("Ptolemy {}", names(&[i, j, k, l])),
                        lhs == rhs,
                        || format!("diagonal product {lhs} but opposite-side sum {rhs}"),
                    ));
                }
            }
        }
    }
    out
}

fn triangle_checks(poly: &CyclicPolygon) -> Vec<CheckResult> {
    let n = poly.n();
    let r = poly.circumradius();
    (0..n)
        .map(|i| {
            let v = [i, (i + 1) % n, (i + 2) % n];
            let name = format!("circumradius {}", names(&v));
            let tri = TriangleSides::new(
                poly.chord(v[0], v[1]).clone(),
                poly.chord(v[1], v[2]).clone(),
                poly.chord(v[0], v[2]).clone(),
            );
            match tri.map(|t| triangle_circumradius(&t)) {
                Err(e) | Ok(Err(e)) => CheckResult::fail(name, e.to_string()),
                Ok(Ok(None)) => CheckResult::fail(name, "circumradius is irrational".into()),
                Ok(Ok(Some(got))) => {
                    CheckResult::from_test(name, &got == r, || format!("got {got}, expected {r}"))
                }
            }
        })
        .collect()
}

fn quad_checks(poly: &CyclicPolygon) -> Vec<CheckResult> {
    let n = poly.n();
    let r = poly.circumradius();
    (0..n)
        .map(|i| {
            let v = [i, (i + 1) % n, (i + 2) % n, (i + 3) % n];
            let name = format!("circumradius {}", names(&v));
            let quad = QuadSides::new(
                poly.chord(v[0], v[1]).clone(),
                poly.chord(v[1], v[2]).clone(),
                poly.chord(v[2], v[3]).clone(),
                poly.chord(v[3], v[0]).clone(),
            );
            match quad.map(|q| quad_circumradius(&q)) {
                Err(e) => CheckResult::fail(name, e.to_string()),
                Ok(None) => CheckResult::fail(name, "circumradius is irrational".into()),
                Ok(Some(got)) => {
                    CheckResult::from_test(name, &got == r, || format!("got {got}, expected {r}"))
                }
            }
        })
        .collect()
}

/// Fan triangulation from vertex `A`, each piece by Heron.
fn area_check(poly: &CyclicPolygon) -> CheckResult {
    let name = "area decomposition".to_string();
    let mut total = Rational::zero();
    for k in 1..poly.n() - 1 {
        let tri = TriangleSides::new(
            poly.chord(0, k).clone(),
            poly.chord(k, k + 1).clone(),
            poly.chord(0, k + 1).clone(),
        );
        match tri.ok().and_then(|t| heron_area(&t)) {
            Some(a) => total += a,
            None => {
                return CheckResult::fail(
                    name,
                    format!("triangle {} has no rational area", names(&[0, k, k + 1])),
                )
            }
        }
    }
    let stored = poly.area();
    CheckResult::from_test(name, &total == stored, || {
        format!("pieces sum to {total}, stored area is {stored}")
    })
}

fn embedding_check(poly: &CyclicPolygon) -> CheckResult {
    let name = "circle embedding".to_string();
    match embed_on_circle(poly) {
        Ok(points) => {
            let issues = embedding_mismatches(poly, &points);
            CheckResult::from_test(name, issues.is_empty(), || issues.join("; "))
        }
        Err(EmbeddingFailure::Inapplicable { side }) => {
            let approx = if embed_approx(poly).is_some() {
                "floating-point placement closes"
            } else {
                "floating-point placement does not close"
            };
            CheckResult {
                name,
                status: CheckStatus::Inapplicable,
                detail: format!("half-angle cosine of side {side} is irrational; {approx}"),
            }
        }
        Err(e) => CheckResult::fail(name, e.to_string()),
    }
}

/// Runs every check. The exact embedding runs alongside the algebraic ones.
pub fn verify_polygon(poly: &CyclicPolygon) -> VerificationReport {
    let (embedding, (ptolemy, (triangle_circumradius, (quad_circumradius, area)))) = rayon::join(
        || embedding_check(poly),
        || {
            (
                ptolemy_checks(poly),
                (triangle_checks(poly), (quad_checks(poly), area_check(poly))),
            )
        },
    );
    VerificationReport {
        embedding,
        ptolemy,
        triangle_circumradius,
        quad_circumradius,
        area,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};
    use crate::assembly::VertexPair;

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
    fn example_passes() {
        let r = verify_polygon(&pentagon());
        assert!(r.passed(), "{r}");
        assert_eq!(r.ptolemy.len(), 5);
        assert_eq!(r.embedding.status, CheckStatus::Pass);
        assert!(verify_polygon(&pentagon().scaled(&z(7)).unwrap()).passed());
    }

    #[test]
    fn swapped_entries_pinpointed() {
        let p = pentagon();
        let bd = p.diagonal("BD").unwrap().clone();
        let ce = p.diagonal("CE").unwrap().clone();
        let bad = p
            .with_chord(VertexPair::new(1, 3), ce)
            .unwrap()
            .with_chord(VertexPair::new(2, 4), bd)
            .unwrap();
        let r = verify_polygon(&bad);
        assert!(!r.passed());
        let failed: Vec<&str> = r
            .ptolemy
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.as_str())
            .collect();
        // BCDE has both swapped chords as its diagonals, so its product is unchanged
        assert!(failed.contains(&"Ptolemy ABCD"));
        assert!(failed.contains(&"Ptolemy ACDE"));
        assert!(!failed.contains(&"Ptolemy BCDE"));
        assert_eq!(r.embedding.status, CheckStatus::Fail);
    }

    #[test]
    fn wrong_area_fails() {
        let p = pentagon();
        let bad = CyclicPolygon::new(
            p.sides().to_vec(),
            p.diagonals().clone(),
            p.circumradius().clone(),
            z(29),
        )
        .unwrap();
        let r = verify_polygon(&bad);
        assert_eq!(r.area.status, CheckStatus::Fail);
        assert!(!r.passed());
    }
}
