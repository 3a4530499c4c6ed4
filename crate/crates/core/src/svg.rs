//! SVG rendering of figures.
//!
//! Rendering coordinates are decimal approximations at the caller's
//! scale; exactness survives in metadata. Every segment and circle
//! carries a `data-exact` attribute with the exact value's text form
//! (the surd rendering of its length or radius), and every point carries
//! its exact coordinates, so a consumer can recover the figure's claims
//! without trusting any float.

use std::fmt::Write;

use crate::construction::Figure;

const MARGIN: f64 = 24.0;
const POINT_RADIUS: f64 = 2.5;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders a verified figure as an SVG 1.1 document.
///
/// `scale` is the number of rendered units per unit length; it affects
/// rendering only and never touches the stored exact values.
pub fn figure_to_svg(figure: &Figure, scale: f64) -> String {
    debug_assert!(scale > 0.0, "scale must be positive");

    let approx: Vec<(&str, f64, f64)> = figure
        .points()
        .map(|(label, p)| (label, p.x.approx(), p.y.approx()))
        .collect();

    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut cover = |x: f64, y: f64| {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    };
    for &(_, x, y) in &approx {
        cover(x, y);
    }
    for circle in figure.circles() {
        if let Some(center) = figure.point(&circle.center) {
            let (cx, cy) = (center.x.approx(), center.y.approx());
            let r = circle.radius.square();
            let r = ratio_to_f64(&r).sqrt();
            cover(cx - r, cy - r);
            cover(cx + r, cy + r);
        }
    }
    if approx.is_empty() {
        cover(0.0, 0.0);
    }

    // Flip the vertical axis: the figures live in the upper half plane,
    // SVG grows downward.
    let to_svg = |x: f64, y: f64| {
        (
            (x - min_x) * scale + MARGIN,
            (max_y - y) * scale + MARGIN,
        )
    };
    let width = (max_x - min_x) * scale + 2.0 * MARGIN;
    let height = (max_y - min_y) * scale + 2.0 * MARGIN;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();

    for circle in figure.circles() {
        let Some(center) = figure.point(&circle.center) else {
            continue;
        };
        let (cx, cy) = to_svg(center.x.approx(), center.y.approx());
        let r = ratio_to_f64(&circle.radius.square()).sqrt() * scale;
        writeln!(
            out,
            r##"  <circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="none" stroke="#999999" stroke-width="1" data-exact="{}"/>"##,
            escape(&circle.radius.to_string())
        )
        .unwrap();
    }

    for (a, b) in figure.segments() {
        let (Some(pa), Some(pb)) = (figure.point(a), figure.point(b)) else {
            continue;
        };
        let (x1, y1) = to_svg(pa.x.approx(), pa.y.approx());
        let (x2, y2) = to_svg(pb.x.approx(), pb.y.approx());
        let exact = figure
            .segment_length(a, b)
            .map(|length| format!(r#" data-exact="{}""#, escape(&length.to_string())))
            .unwrap_or_default();
        writeln!(
            out,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"{exact}/>"#
        )
        .unwrap();
    }

    for (label, point) in figure.points() {
        let (cx, cy) = to_svg(point.x.approx(), point.y.approx());
        writeln!(
            out,
            r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="{POINT_RADIUS}" fill="black" data-exact-x="{}" data-exact-y="{}"/>"#,
            escape(&point.x.exact_text()),
            escape(&point.y.exact_text())
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-family="serif" font-size="14">{}</text>"#,
            cx + 5.0,
            cy - 5.0,
            escape(label)
        )
        .unwrap();
    }

    out.push_str("</svg>\n");
    out
}

fn ratio_to_f64(r: &crate::ratio::Ratio) -> f64 {
    let num: f64 = r.num().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = r.den().to_string().parse().unwrap_or(f64::NAN);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::square_the_rectangle;
    use crate::integers::Natural;
    use crate::surd::Surd;

    #[test]
    fn mean_segment_carries_exact_metadata() {
        let n = Natural::try_from(3).unwrap();
        let figure = square_the_rectangle(&n);
        let svg = figure_to_svg(&figure, 100.0);
        let expected = format!("data-exact=\"{}\"", Surd::sqrt_of_integer(&n));
        assert!(svg.contains(&expected), "missing {expected} in:\n{svg}");
    }

    #[test]
    fn exact_metadata_parses_back() {
        let figure = square_the_rectangle(&Natural::try_from(3).unwrap());
        let svg = figure_to_svg(&figure, 100.0);
        let needle = "data-exact=\"";
        let mut found = 0;
        for (idx, _) in svg.match_indices(needle) {
            let rest = &svg[idx + needle.len()..];
            let value = &rest[..rest.find('"').unwrap()];
            let parsed: Surd = value.parse().unwrap();
            assert_eq!(parsed.to_string(), value);
            found += 1;
        }
        // circle + 7 segments
        assert_eq!(found, 8);
    }

    #[test]
    fn empty_figure_renders() {
        let svg = figure_to_svg(&Figure::new(), 50.0);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
