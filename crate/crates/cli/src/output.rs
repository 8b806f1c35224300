//! Text renderings of the artifacts. Every renderer is a pure function of its
//! inputs so identical jobs give byte-identical files.

use std::fmt::Write as _;

use numrange::{BoundaryShapeF64, MatrixF64, ShapeKind, SupportProfileF64, TriPolyF64};
use serde::Serialize;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// 17 significant digits, LF line endings.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(num).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn profile_csv(profile: &SupportProfileF64) -> String {
    csv(&["theta", "h"], profile.samples().iter().map(|&(t, h)| vec![t, h]))
}

/// One row per θ: `(theta, support_P, oracle_symbol, oracle_truncation)`.
pub fn oracles_csv(rows: &[[f64; 4]]) -> String {
    csv(
        &["theta", "support_P", "oracle_symbol", "oracle_truncation", "abs_gap"],
        rows.iter().map(|&[t, p, s, n]| vec![t, p, s, n, (p - s).abs()]),
    )
}

/// One row per θ: `(theta, support_P, support_S)`.
pub fn witness_profile_csv(rows: &[[f64; 3]]) -> String {
    csv(&["theta", "support_P", "support_S", "abs_gap"], rows.iter().map(|&[t, p, s]| vec![t, p, s, (p - s).abs()]))
}

fn pretty_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn polynomial_json(poly: &TriPolyF64) -> String {
    pretty_json(&poly.to_json())
}

#[derive(Serialize)]
struct WitnessJson {
    size: usize,
    /// Row-major `[re, im]` entries.
    rows: Vec<Vec<[f64; 2]>>,
}

pub fn witness_json(s: &MatrixF64) -> String {
    let rows = (0..s.rows()).map(|i| (0..s.cols()).map(|j| [s[(i, j)].re, s[(i, j)].im]).collect()).collect();
    pretty_json(&WitnessJson { size: s.rows(), rows })
}

/// Boundary in data coordinates: the viewBox is the bounding box plus a 5%
/// margin and the group flips the y axis, so polygon points are `x,y` of the
/// complex plane.
pub fn boundary_svg(shape: &BoundaryShapeF64) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for v in &shape.vertices {
        (x0, x1, y0, y1) = (x0.min(v.re), x1.max(v.re), y0.min(v.im), y1.max(v.im));
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let margin = 0.05 * span;
    let (x0, x1, y0, y1) = (x0 - margin, x1 + margin, y0 - margin, y1 + margin);
    let (w, h) = (x1 - x0, y1 - y0);
    let px = 480.0;
    let (pw, ph) = if w >= h { (px, px * h / w) } else { (px * w / h, px) };

    let points: Vec<String> = shape.vertices.iter().map(|v| format!("{},{}", v.re, v.im)).collect();
    let stroke = r#"fill="none" stroke="black" stroke-width="1.5" vector-effect="non-scaling-stroke""#;
    let body = match shape.kind {
        ShapeKind::Polygon => format!(r#"<polygon class="boundary" points="{}" {stroke}/>"#, points.join(" ")),
        ShapeKind::Segment => format!(r#"<polyline class="boundary" points="{}" {stroke}/>"#, points.join(" ")),
        ShapeKind::Point => {
            let v = shape.vertices[0];
            format!(r#"<circle class="boundary" cx="{}" cy="{}" r="{}" fill="black"/>"#, v.re, v.im, 0.01 * span)
        }
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(svg, "<!-- numrange {VERSION} -->");
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{pw:.1}" height="{ph:.1}" viewBox="{x0} {} {w} {h}">"#,
        -y1
    );
    let _ = writeln!(svg, r#"<g transform="scale(1,-1)">"#);
    let axis = r#"stroke="gray" stroke-width="0.5" vector-effect="non-scaling-stroke""#;
    let _ = writeln!(svg, r#"<line class="axis" x1="{x0}" y1="0" x2="{x1}" y2="0" {axis}/>"#);
    let _ = writeln!(svg, r#"<line class="axis" x1="0" y1="{y0}" x2="0" y2="{y1}" {axis}/>"#);
    let _ = writeln!(svg, "{body}");
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    svg
}
