use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::model::{PlanarPointSet, Point};

/// A polyline drawn over the points, e.g. a cup, a cap or a convex polygon.
#[derive(Clone, Debug, Default)]
pub struct Overlay {
    pub points: Vec<Point>,
    pub closed: bool,
}

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

/// Deterministic SVG drawing of a point set with optional overlays.
pub fn render_svg(p: &PlanarPointSet, overlays: &[Overlay]) -> String {
    let all: Vec<(f64, f64)> = p
        .points()
        .iter()
        .chain(overlays.iter().flat_map(|o| o.points.iter()))
        .map(to_f64)
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y)) = all.first() {
        (x0, x1, y0, y1) = (x, x, y, y);
        for &(x, y) in &all {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let scale = (SIZE - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0).max(1e-9);
    let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, SIZE - MARGIN - (y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for o in overlays {
        let coords: Vec<String> = o
            .points
            .iter()
            .map(|q| {
                let (x, y) = map(to_f64(q));
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let tag = if o.closed { "polygon" } else { "polyline" };
        let _ = writeln!(
            out,
            r#"<{tag} points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
            coords.join(" ")
        );
    }
    for (i, q) in p.points().iter().enumerate() {
        let (x, y) = map(to_f64(q));
        let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="black"><title>{i}: {q}</title></circle>"#);
    }
    out.push_str("</svg>\n");
    out
}

fn to_f64(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}
