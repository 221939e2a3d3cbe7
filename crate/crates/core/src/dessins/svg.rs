use std::f64::consts::TAU;
use std::fmt::Write;

use super::{Dessin, EdgeStyle, VertexKind};

const SIZE: f64 = 480.0;

/// Draws the quotient picture: the outer boundary component on a large
/// circle, further components on small circles inside, and inner vertices
/// relaxed to the barycentre of their neighbours.
pub fn to_svg(d: &Dessin) -> String {
    let c = SIZE / 2.0;
    let mut pos = vec![(c, c); d.vertices.len()];
    let mut fixed = vec![false; d.vertices.len()];
    let holes = d.boundary.len().saturating_sub(1);
    for (k, cycle) in d.boundary.iter().enumerate() {
        let (cx, cy, r) = if k == 0 {
            (c, c, 0.42 * SIZE)
        } else {
            let a = TAU * (k - 1) as f64 / holes as f64;
            let off = if holes == 1 { 0.0 } else { 0.2 * SIZE };
            (c + off * a.cos(), c + off * a.sin(), 0.08 * SIZE)
        };
        for (i, &v) in cycle.iter().enumerate() {
            let a = TAU * i as f64 / cycle.len() as f64;
            pos[v] = (cx + r * a.cos(), cy + r * a.sin());
            fixed[v] = true;
        }
    }
    for _ in 0..200 {
        for v in 0..d.vertices.len() {
            if fixed[v] || d.vertices[v].rotation.is_empty() {
                continue;
            }
            let nb = &d.vertices[v].rotation;
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |(sx, sy), &e| {
                let w = pos[d.other_end(e, v)];
                (sx + w.0, sy + w.1)
            });
            pos[v] = (sx / nb.len() as f64, sy / nb.len() as f64);
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for e in &d.edges {
        let (a, b) = (pos[e.ends[0]], pos[e.ends[1]]);
        let style = match e.style {
            EdgeStyle::Solid => r#"stroke-width="1.5""#,
            EdgeStyle::Dotted => r#"stroke-width="1.5" stroke-dasharray="2 3""#,
            EdgeStyle::Bold => r#"stroke-width="4""#,
        };
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" {style}/>"#,
            a.0, a.1, b.0, b.1
        );
    }
    for (v, vert) in d.vertices.iter().enumerate() {
        let (x, y) = pos[v];
        let shape = match vert.kind {
            VertexKind::Bullet => format!(r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="black"/>"#),
            VertexKind::Circle => {
                format!(r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="white" stroke="black" stroke-width="1.5"/>"#)
            }
            VertexKind::Cross => format!(
                r#"<path d="M{:.2} {:.2}L{:.2} {:.2}M{:.2} {:.2}L{:.2} {:.2}" stroke="black" stroke-width="2"/>"#,
                x - 5.0,
                y - 5.0,
                x + 5.0,
                y + 5.0,
                x - 5.0,
                y + 5.0,
                x + 5.0,
                y - 5.0
            ),
            VertexKind::Monochrome { .. } => format!(r#"<circle cx="{x:.2}" cy="{y:.2}" r="2" fill="gray"/>"#),
        };
        let _ = writeln!(out, "{shape}");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessins::family_bigonal;

    #[test]
    fn draws_every_vertex() {
        let d = family_bigonal(2, 1, false).unwrap();
        let s = to_svg(&d);
        assert!(s.starts_with("<svg"));
        assert_eq!(s.matches("<line").count(), d.edges.len());
        assert_eq!(to_svg(&d), s);
    }
}
