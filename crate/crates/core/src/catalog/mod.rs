//! Serialization, rendering and parameter sweeps.

mod document;
mod render;
mod search;
mod svg;

pub use document::{PolygonDocument, PolygonKind};
pub use render::{document_csv, document_text, report_csv, report_json, Format};
pub use search::{
    catalog_record, run_sweep, CatalogRecord, DedupKey, SweepOutcome, SweepSpec, SweepSummary,
};
pub use svg::render_svg;
