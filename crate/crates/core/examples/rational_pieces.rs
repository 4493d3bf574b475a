// The two rational building blocks: Euler triangles and Sastry quadrilaterals.

use brahmagupta::arith::{q, z};
use brahmagupta::param::{euler_triangle, sastry_quadrilateral, EulerParams, SastryParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tri = euler_triangle(&EulerParams::new(z(3), z(1), z(2), z(3), z(2))?)?;
    println!(
        "Euler triangle {:?}: area {}, R {}",
        tri.sides.as_array(),
        tri.area,
        tri.circumradius
    );

    let quad = sastry_quadrilateral(&SastryParams::new(q(2, 3), z(1), z(2))?)?;
    println!(
        "Sastry quadrilateral {:?}: diagonals {:?}, area {}, R {}",
        quad.sides.as_array(),
        quad.diagonals,
        quad.area,
        quad.circumradius
    );

    // at a common scale both pieces share the circumradius
    let scaled = quad.scaled(&(&tri.circumradius / &quad.circumradius))?;
    assert_eq!(scaled.circumradius, tri.circumradius);
    assert_eq!(scaled.sides.a3, tri.sides.a);
    Ok(())
}

fn main() {
    run_example().expect("rational pieces example");
}
