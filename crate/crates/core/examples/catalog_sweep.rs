// A small deterministic parameter sweep, emitted as JSON Lines.

use num_bigint::BigInt;

use brahmagupta::catalog::{run_sweep, CatalogRecord, PolygonKind, SweepSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SweepSpec {
        kind: PolygonKind::Pentagon,
        max_numerator: 3,
        max_denominator: 2,
        negative: false,
        max_perimeter: BigInt::from(1000),
        limit: Some(5),
    };
    let outcome = run_sweep(&spec)?;
    for record in &outcome.records {
        let line = record.to_json_line();
        println!("{line}");
        assert_eq!(&CatalogRecord::from_json_line(&line)?, record);
    }
    println!("# {}", outcome.summary);

    // same spec, same bytes
    assert_eq!(run_sweep(&spec)?.records, outcome.records);
    Ok(())
}

fn main() {
    run_example().expect("catalog sweep example");
}
