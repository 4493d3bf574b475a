use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use brahmagupta::arith::parse_list;
use brahmagupta::assembly::{
    embed_approx, embed_on_circle, embedding_mismatches, juxtapose_hexagon, juxtapose_pentagon,
    scale_to_integers, verify_polygon, EmbeddingFailure, HexagonArrangement, PentagonArrangement,
};
use brahmagupta::catalog::{
    document_csv, document_text, render_svg, report_csv, report_json, run_sweep, PolygonDocument,
    PolygonKind, SweepSpec,
};
use brahmagupta::geometry::{QuadSides, TriangleSides};
use brahmagupta::hexagon::{build_hexagon, HexagonParams};
use brahmagupta::pentagon::{build_pentagon, PentagonParams};
use brahmagupta::{CyclicPolygon, Error, Rational};

#[derive(Parser)]
#[command(
    name = "brahmagupta",
    version,
    about = "Exact rational cyclic pentagons and hexagons"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    /// Rescale to the primitive integer form before printing.
    #[arg(long, global = true)]
    scale_integer: bool,
    /// Write the main output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fmt {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a pentagon from m,n,p,q,u,v.
    Pentagon {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Build a hexagon from m,t,u1,u2.
    Hexagon {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
    },
    /// Glue a triangle or a quadrilateral to a quadrilateral along a chord.
    Juxtapose(JuxtaposeArgs),
    /// Check a polygon document.
    Verify { file: PathBuf },
    /// Sweep parameters into a JSON Lines catalog.
    Search(SearchArgs),
    /// Draw a polygon document as SVG.
    Plot {
        file: PathBuf,
        /// Use a floating-point placement when no exact one exists.
        #[arg(long)]
        approximate: bool,
    },
    /// Rescale a polygon document to integers.
    Scale { file: PathBuf },
}

#[derive(Args)]
struct JuxtaposeArgs {
    /// Triangle sides, read as CE,CD,DE unless reordered (pentagon).
    #[arg(
        long,
        conflicts_with = "second_quad",
        required_unless_present = "second_quad"
    )]
    triangle: Option<String>,
    /// Quadrilateral sides a1,a2,a3,a4.
    #[arg(long)]
    quad: String,
    /// Second quadrilateral's sides (hexagon).
    #[arg(long)]
    second_quad: Option<String>,
    /// Which triangle sides become CD,DE,EC.
    #[arg(long, default_value = "1,2,0")]
    triangle_order: String,
    /// Which quadrilateral sides become AB,BC,CE,EA (pentagon) or AB,BC,CD,DA (hexagon).
    #[arg(long)]
    quad_order: Option<String>,
    /// Which second-quadrilateral sides become DE,EF,FA,AD.
    #[arg(long, default_value = "0,1,3,2")]
    second_order: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_parser = ["pentagon", "hexagon"])]
    kind: String,
    #[arg(long, default_value_t = 3)]
    max_numerator: u32,
    #[arg(long, default_value_t = 3)]
    max_denominator: u32,
    /// Include negative parameter values.
    #[arg(long)]
    negative: bool,
    #[arg(long, default_value = "1000")]
    max_perimeter: BigInt,
    #[arg(long)]
    limit: Option<usize>,
}

enum Failure {
    Rejected(Box<Error>),
    Unverified(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Rejected(Box::new(e))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unverified(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected(e)) => {
            if cli.format == Fmt::Json {
                let v = serde_json::json!({"error": {"kind": e.kind(), "message": e.to_string()}});
                eprintln!("{v}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_document(path: &PathBuf) -> Result<PolygonDocument, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(PolygonDocument::from_json(&text)?)
}

fn order<const N: usize>(s: &str) -> Result<[usize; N], Failure> {
    let v: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
    v.ok()
        .and_then(|v| <[usize; N]>::try_from(v).ok())
        .ok_or_else(|| {
            Error::Parse(format!("expected {N} comma-separated indices, got {s:?}")).into()
        })
}

fn render_document(cli: &Cli, doc: &PolygonDocument) -> String {
    match cli.format {
        Fmt::Json => doc.to_json(),
        Fmt::Csv => document_csv(doc),
        Fmt::Text => document_text(doc),
    }
}

/// Prints the polygon and its verification summary; fails unless verified.
fn show_polygon(
    cli: &Cli,
    poly: &CyclicPolygon,
    params: BTreeMap<String, Rational>,
    tag: Option<String>,
) -> Result<(), Failure> {
    let report = verify_polygon(poly);
    let doc = if cli.scale_integer {
        let form = scale_to_integers(poly);
        let note = format!(
            "primitive integer form: lengths multiplied by {}",
            &form.length_factor * &Rational::from_integer(form.area_factor.clone())
        );
        PolygonDocument::new(&form.area_integral, params, note)
    } else {
        PolygonDocument::new(poly, params, "closed-form scale")
    };
    let mut out = render_document(cli, &doc);
    let summary = format!(
        "{}{}",
        tag.map(|t| format!("constructibility: {t}\n"))
            .unwrap_or_default(),
        report
    );
    if cli.format == Fmt::Text {
        out.push_str(&summary);
    } else {
        eprint!("{summary}");
    }
    emit(cli, &out)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Unverified("verification failed".into()))
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Pentagon { params } => {
            let pent = build_pentagon(&PentagonParams::parse(params)?)?;
            let doc = PolygonDocument::from_pentagon(&pent);
            show_polygon(
                cli,
                &pent.polygon,
                doc.params,
                Some(pent.constructibility.to_string()),
            )
        }
        Command::Hexagon { params } => {
            let hex = build_hexagon(&HexagonParams::parse(params)?)?;
            let doc = PolygonDocument::from_hexagon(&hex);
            show_polygon(
                cli,
                &hex.polygon,
                doc.params,
                Some(hex.constructibility.to_string()),
            )
        }
        Command::Juxtapose(j) => {
            let quad = QuadSides::from_slice(&parse_list(&j.quad)?)?;
            let poly = match (&j.triangle, &j.second_quad) {
                (Some(t), _) => {
                    let t = parse_list(t)?;
                    let [a, b, c] = <[Rational; 3]>::try_from(t)
                        .map_err(|_| Error::Parse("a triangle needs 3 sides".into()))?;
                    let arr = PentagonArrangement {
                        triangle: order(&j.triangle_order)?,
                        quad: order(j.quad_order.as_deref().unwrap_or("0,1,2,3"))?,
                    };
                    juxtapose_pentagon(&TriangleSides::new(a, b, c)?, &quad, &arr)?
                }
                (None, Some(q2)) => {
                    let second = QuadSides::from_slice(&parse_list(q2)?)?;
                    let arr = HexagonArrangement {
                        first: order(j.quad_order.as_deref().unwrap_or("0,1,3,2"))?,
                        second: order(&j.second_order)?,
                    };
                    juxtapose_hexagon(&quad, &second, &arr)?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            show_polygon(cli, &poly, BTreeMap::new(), None)
        }
        Command::Verify { file } => {
            let poly = read_document(file)?.to_polygon()?;
            let report = verify_polygon(&poly);
            let out = match cli.format {
                Fmt::Json => report_json(&report),
                Fmt::Csv => report_csv(&report),
                Fmt::Text => report.to_string(),
            };
            emit(cli, &out)?;
            if report.passed() {
                Ok(())
            } else {
                let names: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
                Err(Failure::Unverified(format!(
                    "failed checks: {}",
                    names.join(", ")
                )))
            }
        }
        Command::Scale { file } => {
            let doc = read_document(file)?;
            let form = scale_to_integers(&doc.to_polygon()?);
            let factor = &form.length_factor * &Rational::from_integer(form.area_factor.clone());
            let note = format!("primitive integer form: lengths multiplied by {factor}");
            let out = PolygonDocument::new(&form.area_integral, doc.params, note);
            emit(cli, &render_document(cli, &out))
        }
        Command::Plot { file, approximate } => {
            let doc = read_document(file)?;
            let poly = doc.to_polygon()?;
            let points = match embed_on_circle(&poly) {
                Ok(points) => {
                    let issues = embedding_mismatches(&poly, &points);
                    if !issues.is_empty() {
                        return Err(Error::DegeneratePolygon(issues.join("; ")).into());
                    }
                    points.iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect()
                }
                Err(EmbeddingFailure::Inapplicable { side }) if *approximate => embed_approx(&poly)
                    .ok_or_else(|| {
                        Error::DegeneratePolygon(format!(
                            "side {side} has an irrational half-angle cosine and the floating-point placement does not close"
                        ))
                    })?,
                Err(EmbeddingFailure::Inapplicable { side }) => {
                    return Err(Error::EmbeddingInapplicable(format!(
                        "side {side} has an irrational half-angle cosine; rerun with --approximate for a floating-point diagnostic plot"
                    ))
                    .into())
                }
                Err(e) => return Err(Error::DegeneratePolygon(e.to_string()).into()),
            };
            let title = format!("cyclic {} with area {}", doc.kind, poly.area());
            emit(cli, &render_svg(&poly, &points, &title))
        }
        Command::Search(s) => {
            let spec = SweepSpec {
                kind: s.kind.parse::<PolygonKind>()?,
                max_numerator: s.max_numerator,
                max_denominator: s.max_denominator,
                negative: s.negative,
                max_perimeter: s.max_perimeter.clone(),
                limit: s.limit,
            };
            let outcome = run_sweep(&spec)?;
            let mut out = String::new();
            for r in &outcome.records {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
            emit(cli, &out)?;
            eprintln!("# {}", outcome.summary);
            Ok(())
        }
    }
}
