use std::fmt::Write;

use super::document::PolygonDocument;
use crate::assembly::{vertex_label, VerificationReport};

/// Output formats shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(crate::Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

fn side_label(k: usize, n: usize) -> String {
    format!("{}{}", vertex_label(k), vertex_label((k + 1) % n))
}

/// `quantity,value` rows.
pub fn document_csv(doc: &PolygonDocument) -> String {
    let n = doc.sides.len();
    let mut out = String::from("quantity,name,value\n");
    for (k, v) in doc.params.iter() {
        let _ = writeln!(out, "param,{k},{v}");
    }
    for (k, s) in doc.sides.iter().enumerate() {
        let _ = writeln!(out, "side,{},{s}", side_label(k, n));
    }
    for (k, d) in &doc.diagonals {
        let _ = writeln!(out, "diagonal,{k},{d}");
    }
    let _ = writeln!(out, "circumradius,R,{}", doc.circumradius);
    let _ = writeln!(out, "area,K,{}", doc.area);
    out
}

pub fn document_text(doc: &PolygonDocument) -> String {
    let n = doc.sides.len();
    let mut out = String::new();
    let _ = writeln!(out, "{}", doc.kind);
    if !doc.params.is_empty() {
        let ps: Vec<String> = doc.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "  params:       {}", ps.join(" "));
    }
    let sides: Vec<String> = doc
        .sides
        .iter()
        .enumerate()
        .map(|(k, s)| format!("{}={s}", side_label(k, n)))
        .collect();
    let _ = writeln!(out, "  sides:        {}", sides.join(" "));
    let diags: Vec<String> = doc
        .diagonals
        .iter()
        .map(|(k, d)| format!("{k}={d}"))
        .collect();
    let _ = writeln!(out, "  diagonals:    {}", diags.join(" "));
    let _ = writeln!(out, "  circumradius: {}", doc.circumradius);
    let _ = writeln!(out, "  area:         {}", doc.area);
    if !doc.scale_note.is_empty() {
        let _ = writeln!(out, "  scale:        {}", doc.scale_note);
    }
    out
}

pub fn report_csv(report: &VerificationReport) -> String {
    let mut out = String::from("check,status,detail\n");
    for c in report.checks() {
        let status = serde_json::to_value(c.status).expect("status serializes");
        let _ = writeln!(
            out,
            "{},{},\"{}\"",
            c.name,
            status.as_str().unwrap_or_default(),
            c.detail.replace('"', "'")
        );
    }
    out
}

pub fn report_json(report: &VerificationReport) -> String {
    let mut v = serde_json::to_value(report).expect("report serializes");
    v["passed"] = serde_json::Value::Bool(report.passed());
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}
