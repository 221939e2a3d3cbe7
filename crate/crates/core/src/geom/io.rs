use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::polygon::{LatticePoint, LatticePolygon};
use super::subdivision::{AxisSegment, Cell, CellTag, Subdivision};
use crate::error::{Error, Result};
use crate::rational;

#[derive(Serialize, Deserialize)]
struct CellJson {
    verts: Vec<LatticePoint>,
    tag: CellTag,
}

#[derive(Serialize, Deserialize)]
struct SegmentJson {
    from: LatticePoint,
    to: LatticePoint,
    tag: CellTag,
}

#[derive(Serialize, Deserialize)]
struct SubdivisionJson {
    parent: Vec<LatticePoint>,
    cells: Vec<CellJson>,
    lift: Vec<(i64, i64, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    segments: Vec<SegmentJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambient: Option<Vec<LatticePoint>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cut_corners: Vec<LatticePoint>,
}

pub fn to_json(s: &Subdivision) -> serde_json::Value {
    let j = SubdivisionJson {
        parent: s.parent.vertices().to_vec(),
        cells: s
            .cells
            .iter()
            .map(|c| CellJson {
                verts: c.polygon.vertices().to_vec(),
                tag: c.tag,
            })
            .collect(),
        lift: s.lift.iter().map(|(p, q)| (p.i, p.j, rational::to_string(q))).collect(),
        segments: s
            .segments
            .iter()
            .map(|g| SegmentJson {
                from: g.from,
                to: g.to,
                tag: g.tag,
            })
            .collect(),
        ambient: s.ambient.as_ref().map(|a| a.vertices().to_vec()),
        cut_corners: s.cut_corners.clone(),
    };
    serde_json::to_value(j).expect("subdivision serializes")
}

pub fn from_json(v: &serde_json::Value) -> Result<Subdivision> {
    let j: SubdivisionJson = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
    let cells = j
        .cells
        .into_iter()
        .map(|c| {
            Ok(Cell {
                polygon: LatticePolygon::new(c.verts)?,
                tag: c.tag,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let lift = j
        .lift
        .into_iter()
        .map(|(i, jj, q)| Ok((LatticePoint::new(i, jj), rational::parse(&q)?)))
        .collect::<Result<_>>()?;
    Ok(Subdivision {
        parent: LatticePolygon::new(j.parent)?,
        cells,
        lift,
        segments: j
            .segments
            .into_iter()
            .map(|g| AxisSegment {
                from: g.from,
                to: g.to,
                tag: g.tag,
            })
            .collect(),
        ambient: j.ambient.map(LatticePolygon::new).transpose()?,
        cut_corners: j.cut_corners,
    })
}

fn color(tag: CellTag) -> &'static str {
    match tag {
        CellTag::CubicBlock => "#4c78a8",
        CellTag::ReflectedCubicBlock => "#72b7b2",
        CellTag::AxisSegment1 => "#e45756",
        CellTag::AxisSegment2 => "#f58518",
        CellTag::AxisSegment3 => "#b279a2",
        CellTag::Filler => "#eeeeee",
    }
}

/// SVG drawing: cells outlined and filled by tag, axis segments as thick strokes.
pub fn to_svg(s: &Subdivision) -> String {
    let outline = s.ambient.as_ref().unwrap_or(&s.parent);
    let (lo, hi) = outline.bounding_box();
    let scale = 40.0;
    let pad = 20.0;
    let w = (hi.i - lo.i) as f64 * scale + 2.0 * pad;
    let h = (hi.j - lo.j) as f64 * scale + 2.0 * pad;
    let xy = |q: LatticePoint| {
        (
            pad + (q.i - lo.i) as f64 * scale,
            h - pad - (q.j - lo.j) as f64 * scale,
        )
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    for c in &s.cells {
        let pts: Vec<String> = c
            .polygon
            .vertices()
            .iter()
            .map(|&q| {
                let (x, y) = xy(q);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"  <polygon points="{}" fill="{}" stroke="black" stroke-width="1"><title>{}</title></polygon>"#,
            pts.join(" "),
            color(c.tag),
            c.tag.as_str()
        );
    }
    for g in &s.segments {
        let ((x1, y1), (x2, y2)) = (xy(g.from), xy(g.to));
        let _ = writeln!(
            out,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}" stroke-width="4"><title>{}</title></line>"#,
            color(g.tag),
            g.tag.as_str()
        );
    }
    for &q in &s.cut_corners {
        let (x, y) = xy(q);
        let _ = writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="4" fill="none" stroke="red"/>"#);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::construct::exact_subdivision;

    #[test]
    fn json_round_trip() {
        let s = exact_subdivision(4).unwrap();
        let v = to_json(&s);
        assert!(v["lift"][0][2].is_string());
        assert_eq!(from_json(&v).unwrap(), s);
    }

    #[test]
    fn svg_mentions_tags() {
        let svg = to_svg(&exact_subdivision(3).unwrap());
        assert!(svg.contains("cubic-block"));
        assert!(svg.starts_with("<svg"));
    }
}
