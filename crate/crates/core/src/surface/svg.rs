//! SVG drawing of a polygon surface: each polygon in its own cell, edges
//! labelled by pairing, slit sides highlighted.

use std::fmt::Write;

use num_complex::Complex64;

use super::polygon::{PairingKind, PolygonSurface};

const CELL: f64 = 240.0;
const PAD: f64 = 24.0;

fn colour(kind: PairingKind) -> &'static str {
    match kind {
        PairingKind::Original => "#1f4e79",
        PairingKind::CutNear | PairingKind::CutFar => "#9a9a9a",
        PairingKind::Slit => "#c0392b",
    }
}

pub fn surface_svg(s: &PolygonSurface) -> String {
    let pts: Vec<Vec<Complex64>> = s.polygons.iter().map(|p| p.iter().map(|z| z.to_c64(&s.symbols)).collect()).collect();
    // one scale for every cell so relative sizes stay visible
    let extent = pts
        .iter()
        .map(|p| {
            let (lo, hi) = bounds(p);
            (hi.re - lo.re).max(hi.im - lo.im)
        })
        .fold(f64::MIN_POSITIVE, f64::max);
    let scale = (CELL - 2.0 * PAD) / extent;
    let cols = (pts.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = pts.len().div_ceil(cols).max(1);
    let (w, h) = (cols as f64 * CELL, rows as f64 * CELL + 30.0);

    let mut edge_label = vec![Vec::new(); pts.len()];
    for (k, p) in s.pairings.iter().enumerate() {
        edge_label[p.from.polygon].push((p.from.edge, format!("{}+", k), p.kind));
        edge_label[p.to.polygon].push((p.to.edge, format!("{}-", k), p.kind));
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}" font-family="sans-serif">"#);
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <text x="8" y="20" font-size="13">{} polygons, {} pairings{}</text>"#,
        pts.len(),
        s.pairings.len(),
        if s.exp { ", exponential charts" } else { "" }
    );
    for (i, p) in pts.iter().enumerate() {
        let (lo, hi) = bounds(p);
        let ox = (i % cols) as f64 * CELL + PAD;
        let oy = (i / cols) as f64 * CELL + 30.0 + PAD;
        let span = CELL - 2.0 * PAD;
        // centre the polygon in its cell; y grows downward in SVG
        let cx = ox + (span - (hi.re - lo.re) * scale) / 2.0;
        let cy = oy + (span - (hi.im - lo.im) * scale) / 2.0;
        let map = |z: Complex64| (cx + (z.re - lo.re) * scale, cy + (hi.im - z.im) * scale);
        let poly: Vec<String> = p.iter().map(|&z| {
            let (x, y) = map(z);
            format!("{x:.2},{y:.2}")
        }).collect();
        let _ = writeln!(out, r##"  <g id="polygon-{i}">"##);
        let _ = writeln!(out, r##"    <polygon points="{}" fill="#eef3f8" stroke="none"/>"##, poly.join(" "));
        let n = p.len();
        let centroid = p.iter().sum::<Complex64>() / n as f64;
        for (edge, label, kind) in &edge_label[i] {
            let (a, b) = (p[*edge], p[(*edge + 1) % n]);
            let ((x1, y1), (x2, y2)) = (map(a), map(b));
            let width = if *kind == PairingKind::Slit { 3.0 } else { 1.5 };
            let dash = if matches!(kind, PairingKind::CutNear | PairingKind::CutFar) { r#" stroke-dasharray="4 3""# } else { "" };
            let _ = writeln!(
                out,
                r#"    <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{}" stroke-width="{width}"{dash}/>"#,
                colour(*kind)
            );
            // label nudged toward the interior
            let mid = (a + b) / 2.0;
            let (lx, ly) = map(mid + (centroid - mid) * 0.12);
            let _ = writeln!(out, r#"    <text x="{lx:.2}" y="{ly:.2}" font-size="10" text-anchor="middle" fill="{}">{}</text>"#, colour(*kind), label);
        }
        let (tx, ty) = map(centroid);
        let _ = writeln!(out, r##"    <text x="{tx:.2}" y="{ty:.2}" font-size="12" text-anchor="middle" fill="#333">P{i}</text>"##);
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(p: &[Complex64]) -> (Complex64, Complex64) {
    p.iter().fold(
        (Complex64::new(f64::INFINITY, f64::INFINITY), Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), z| (Complex64::new(lo.re.min(z.re), lo.im.min(z.im)), Complex64::new(hi.re.max(z.re), hi.im.max(z.im))),
    )
}
