// Independent verification, including exact placement on the circle.

use brahmagupta::arith::z;
use brahmagupta::assembly::{embed_on_circle, shoelace_area, verify_polygon, VertexPair};
use brahmagupta::pentagon::{build_pentagon, PentagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let poly = build_pentagon(&PentagonParams::parse("2,1,1,1,3,3/2")?)?.polygon;
    let points = embed_on_circle(&poly).map_err(|e| e.to_string())?;
    for (i, p) in points.iter().enumerate() {
        println!("{}: ({}, {})", (b'A' + i as u8) as char, p.x, p.y);
    }
    assert_eq!(shoelace_area(&points), z(537));
    println!("{}", verify_polygon(&poly));

    // corrupt one diagonal; Ptolemy and the placement both notice
    let bad = poly.with_chord(VertexPair::parse("BD")?, z(31))?;
    let report = verify_polygon(&bad);
    for check in report.failures() {
        println!("failed: {} ({})", check.name, check.detail);
    }
    assert!(!report.passed());
    Ok(())
}

fn main() {
    run_example().expect("verify example");
}
