// Drawing a hexagon from its exact vertex coordinates.

use brahmagupta::assembly::embed_on_circle;
use brahmagupta::catalog::render_svg;
use brahmagupta::hexagon::{build_hexagon, HexagonParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let poly = build_hexagon(&HexagonParams::parse("5,1,2,-3")?)?.polygon;
    let points: Vec<(f64, f64)> = embed_on_circle(&poly)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let svg = render_svg(&poly, &points, "cyclic hexagon (5, 1, 2, -3)");
    let path = std::env::temp_dir().join("brahmagupta_hexagon.svg");
    std::fs::write(&path, &svg)?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    assert_eq!(svg.matches("<line").count(), 15);
    Ok(())
}

fn main() {
    run_example().expect("svg example");
}
