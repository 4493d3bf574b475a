use std::fmt::Write;

use crate::assembly::{vertex_label, CyclicPolygon};

const HALF: f64 = 420.0;
const RADIUS: f64 = 340.0;

/// Decimal with 12 significant digits.
fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let decimals = (11 - v.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Standalone SVG: circumcircle, labelled vertices, solid sides and dashed
/// diagonals annotated with their exact lengths.
///
/// `points` are vertex coordinates on a circle of radius `poly.circumradius()`
/// centred at the origin.
pub fn render_svg(poly: &CyclicPolygon, points: &[(f64, f64)], title: &str) -> String {
    let r = poly.circumradius().to_f64();
    let k = RADIUS / r;
    // flip y so counter-clockwise reads counter-clockwise on screen
    let pts: Vec<(f64, f64)> = points
        .iter()
        .map(|(x, y)| (HALF + x * k, HALF - y * k))
        .collect();
    let size = 2.0 * HALF;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        num(size)
    );
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        s,
        r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        s,
        r##"  <circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#9aa5b1" stroke-width="1.5"/>"##,
        c = num(HALF),
        r = num(RADIUS)
    );
    let n = poly.n();
    for i in 0..n {
        for j in i + 1..n {
            let side = j == i + 1 || (i == 0 && j == n - 1);
            let (a, b) = (pts[i], pts[j]);
            let style = if side {
                r##"stroke="#1f2933" stroke-width="2.5""##
            } else {
                r##"stroke="#3e7cb1" stroke-width="1.2" stroke-dasharray="8 5""##
            };
            let _ = writeln!(
                s,
                r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" {style}/>"#,
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1)
            );
            let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
            let colour = if side { "#1f2933" } else { "#3e7cb1" };
            let _ = writeln!(
                s,
                r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="13" fill="{colour}" text-anchor="middle">{}</text>"#,
                num(mx),
                num(my - 4.0),
                poly.chord(i, j)
            );
        }
    }
    for (i, &(x, y)) in pts.iter().enumerate() {
        let (dx, dy) = (x - HALF, y - HALF);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (lx, ly) = (x + 22.0 * dx / len, y + 22.0 * dy / len);
        let _ = writeln!(
            s,
            r##"  <circle cx="{}" cy="{}" r="4" fill="#d64545"/>"##,
            num(x),
            num(y)
        );
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="20" font-weight="bold" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            num(lx),
            num(ly),
            vertex_label(i)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(420.0), "420");
        assert_eq!(num(1.0 / 3.0), "0.333333333333");
        assert_eq!(num(-123.456789012345), "-123.456789012");
        assert_eq!(num(0.0), "0");
    }
}
