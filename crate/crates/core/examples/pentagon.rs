// A rational cyclic pentagon from six parameters.

use brahmagupta::assembly::verify_polygon;
use brahmagupta::pentagon::{build_pentagon, PentagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for params in ["2,1,1,1,3,3/2", "3,1,2,3,1,2"] {
        let pent = build_pentagon(&PentagonParams::parse(params)?)?;
        let poly = &pent.polygon;
        let sides: Vec<String> = poly.sides().iter().map(|s| s.to_string()).collect();
        println!(
            "({params}) -> sides [{}], R {}, area {}, {}",
            sides.join(", "),
            poly.circumradius(),
            poly.area(),
            pent.constructibility
        );
        let report = verify_polygon(poly);
        assert!(report.passed(), "{report}");
    }

    // all sides must come out positive
    let err = build_pentagon(&PentagonParams::parse("1,1,1,1,1,1")?).unwrap_err();
    println!("(1,1,1,1,1,1) rejected: {err}");
    Ok(())
}

fn main() {
    run_example().expect("pentagon example");
}
