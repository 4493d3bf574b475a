//! Generic assembly of cyclic polygons from inscribed pieces, and the
//! independent checks that certify the result.

mod embed;
mod juxtapose;
mod polygon;
mod scale;
mod verify;

pub use embed::{
    embed_approx, embed_on_circle, embedding_mismatches, shoelace_area, EmbeddingFailure, Point,
    UnitRotation,
};
pub use juxtapose::{
    common_chord, common_root, juxtapose_hexagon, juxtapose_pentagon, solve_missing_length_quad,
    solve_missing_length_triangle, ChordConstraint, HexagonArrangement, PentagonArrangement,
    PtolemyWitness,
};
pub use polygon::{diagonal_pairs, vertex_label, Constructibility, CyclicPolygon, VertexPair};
pub use scale::{scale_to_integers, IntegerForm};
pub use verify::{verify_polygon, CheckResult, CheckStatus, VerificationReport};
