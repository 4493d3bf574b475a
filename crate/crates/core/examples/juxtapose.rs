// Gluing inscribed pieces along a shared chord, with the missing diagonals
// recovered as common rational roots.

use brahmagupta::arith::{q, z};
use brahmagupta::assembly::{
    juxtapose_hexagon, juxtapose_pentagon, HexagonArrangement, PentagonArrangement,
};
use brahmagupta::geometry::{QuadSides, TriangleSides};
use brahmagupta::hexagon::{build_hexagon, HexagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // triangle (CE, CD, DE) on quadrilateral (AB, BC, CE, EA)
    let tri = TriangleSides::new(q(20, 3), q(13, 3), q(11, 3))?;
    let quad = QuadSides::new(q(11, 3), q(56, 9), q(20, 3), q(25, 9))?;
    let pent = juxtapose_pentagon(&tri, &quad, &PentagonArrangement::STANDARD)?;
    println!(
        "pentagon AD = {:?}, BD = {:?}",
        pent.diagonal("AD"),
        pent.diagonal("BD")
    );
    assert_eq!(pent.area(), &z(28));

    // a hexagon reassembled from the two quadrilaterals it was built from
    let hex = build_hexagon(&HexagonParams::parse("2,2,-8,3")?)?;
    let glued = juxtapose_hexagon(
        &hex.first.sides,
        &hex.second.sides,
        &HexagonArrangement::STANDARD,
    )?;
    assert_eq!(glued, hex.polygon);
    println!("hexagon BE = {:?}", glued.diagonal("BE"));

    // different circumradii cannot be glued
    let small = TriangleSides::new(z(3), z(4), z(5))?;
    let err = juxtapose_pentagon(&small, &quad, &PentagonArrangement::STANDARD).unwrap_err();
    println!("rejected: {err}");
    Ok(())
}

fn main() {
    run_example().expect("juxtapose example");
}
