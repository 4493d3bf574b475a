// Heron, Brahmagupta, Paramesvara and Ptolemy on exact inputs.

use brahmagupta::arith::{q, z};
use brahmagupta::geometry::{
    brahmagupta_area, brahmagupta_diagonals, heron_area, ptolemy_holds, quad_circumradius,
    triangle_circumradius, QuadSides, TriangleSides,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tri = TriangleSides::new(q(20, 3), q(13, 3), q(11, 3))?;
    let area = heron_area(&tri).ok_or("irrational triangle area")?;
    let r = triangle_circumradius(&tri)?.ok_or("irrational circumradius")?;
    println!("triangle {:?}: area {area}, R {r}", tri.as_array());

    let quad = QuadSides::new(q(11, 3), q(56, 9), q(20, 3), q(25, 9))?;
    let (d1, d2) = brahmagupta_diagonals(&quad).ok_or("irrational diagonal")?;
    let qa = brahmagupta_area(&quad).ok_or("irrational quadrilateral area")?;
    println!("quadrilateral: diagonals {d1}, {d2}; area {qa}");
    assert!(ptolemy_holds(&quad, &d1, &d2));

    // the two pieces share the chord 20/3 and the circumradius, so they glue
    assert_eq!(quad_circumradius(&quad), Some(r));
    assert_eq!(area + qa, z(28));

    // an equilateral triangle has an irrational area
    assert_eq!(heron_area(&TriangleSides::new(z(2), z(2), z(2))?), None);
    Ok(())
}

fn main() {
    run_example().expect("classical formulas example");
}
