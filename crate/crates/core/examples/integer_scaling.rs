// Rescaling a rational polygon to its primitive integer form.

use brahmagupta::arith::z;
use brahmagupta::assembly::{scale_to_integers, verify_polygon};
use brahmagupta::pentagon::{build_pentagon, PentagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let poly = build_pentagon(&PentagonParams::parse("3,1,2,3,1,2")?)?.polygon;
    let form = scale_to_integers(&poly);
    let p = &form.primitive;
    println!("lengths x{}: sides {:?}", form.length_factor, p.sides());
    println!("R {}, area {}", p.circumradius(), p.area());
    assert!(p
        .sides()
        .iter()
        .chain(p.diagonals().values())
        .all(|l| l.is_integer()));
    assert_eq!(form.length_factor, z(45));
    assert!(verify_polygon(p).passed());

    // already primitive: scaling again changes nothing
    assert_eq!(scale_to_integers(p).primitive, *p);
    Ok(())
}

fn main() {
    run_example().expect("integer scaling example");
}
