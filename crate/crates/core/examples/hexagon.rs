// A rational cyclic hexagon from (m, t, u1, u2).

use brahmagupta::hexagon::{build_hexagon, HexagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let hex = build_hexagon(&HexagonParams::parse("5,1,2,-3")?)?;
    println!("v = ({}, {}), sign {}", hex.v1, hex.v2, hex.sign);
    for (pair, d) in hex.polygon.diagonals() {
        println!("  {} = {d}", pair.label());
    }
    println!(
        "R = {}, area = {}",
        hex.polygon.circumradius(),
        hex.polygon.area()
    );

    // the central diagonal AD is the seam shared by both quadrilaterals
    let ad = hex.polygon.diagonal("AD").ok_or("missing AD")?;
    assert_eq!(&hex.first.sides.a3, ad);
    assert_eq!(&hex.second.sides.a3, ad);

    // swapping u1 and u2 turns the hexagon by three vertices
    let turned = build_hexagon(&hex.params.swapped())?;
    let mut sides = hex.polygon.sides().to_vec();
    sides.rotate_left(3);
    assert_eq!(turned.polygon.sides(), &sides[..]);
    Ok(())
}

fn main() {
    run_example().expect("hexagon example");
}
