//! Regular subdivision induced by integer heights: projection of the lower
//! convex hull of lifted points, found by gift wrapping across cell edges.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::polygon::{cross, on_segment, primitive_direction, LatticePoint, LatticePolygon};
use crate::error::{Error, Result};

fn orient3(a: (LatticePoint, i64), b: (LatticePoint, i64), c: (LatticePoint, i64), d: (LatticePoint, i64)) -> i128 {
    let v = |p: (LatticePoint, i64)| {
        [
            (p.0.i - a.0.i) as i128,
            (p.0.j - a.0.j) as i128,
            (p.1 - a.1) as i128,
        ]
    };
    let (u, w, z) = (v(b), v(c), v(d));
    u[0] * (w[1] * z[2] - w[2] * z[1]) - u[1] * (w[0] * z[2] - w[2] * z[0]) + u[2] * (w[0] * z[1] - w[1] * z[0])
}

/// First vertex after `a` of the lower chain of the lifted points on segment `ab`.
fn first_lower_step(pts: &[(LatticePoint, i64)], a: LatticePoint, b: LatticePoint) -> LatticePoint {
    let dir = primitive_direction(a, b);
    let ha = pts.iter().find(|p| p.0 == a).map_or(0, |p| p.1) as i128;
    let mut best: Option<(i128, i128, LatticePoint)> = None;
    for &(q, h) in pts {
        if q == a || !on_segment(a, b, q) {
            continue;
        }
        let t = if dir.i != 0 { (q.i - a.i) / dir.i } else { (q.j - a.j) / dir.j } as i128;
        let rise = h as i128 - ha;
        best = match best {
            Some((bt, br, bq)) if br * t <= rise * bt => Some((bt, br, bq)),
            _ => Some((t, rise, q)),
        };
    }
    best.map_or(b, |x| x.2)
}

/// Cells of the regular subdivision of `hull(points)` induced by `height`.
/// Every returned polygon is counter-clockwise; output is sorted.
pub fn lower_hull_cells(points: &[LatticePoint], height: impl Fn(LatticePoint) -> i64) -> Result<Vec<LatticePolygon>> {
    let pts: Vec<(LatticePoint, i64)> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|p| (p, height(p)))
        .collect();
    let hull = LatticePolygon::hull(pts.iter().map(|p| p.0))?;
    if hull.is_degenerate() {
        return Err(Error::Degenerate(format!("{hull:?}")));
    }
    let lookup: HashMap<LatticePoint, i64> = pts.iter().copied().collect();
    let (a, b) = hull.edges()[0];
    let b = first_lower_step(&pts, a, b);
    let mut queue = VecDeque::from([(a, b)]);
    let mut done: BTreeSet<(LatticePoint, LatticePoint)> = BTreeSet::new();
    let mut cells: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    let mut out = Vec::new();
    while let Some((a, b)) = queue.pop_front() {
        if !done.insert((a, b)) {
            continue;
        }
        let (la, lb) = ((a, lookup[&a]), (b, lookup[&b]));
        let mut best: Option<(LatticePoint, i64)> = None;
        for &d in &pts {
            if cross(a, b, d.0) <= 0 {
                continue;
            }
            best = match best {
                Some(c) if orient3(la, lb, c, d) >= 0 => Some(c),
                _ => Some(d),
            };
        }
        let Some(c) = best else { continue };
        let coplanar: Vec<LatticePoint> = pts
            .iter()
            .filter(|&&d| orient3(la, lb, c, d) == 0)
            .map(|d| d.0)
            .collect();
        let cell = LatticePolygon::hull(coplanar)?;
        for (u, v) in cell.edges() {
            done.insert((u, v));
            queue.push_back((v, u));
        }
        if cells.insert(cell.vertices().to_vec()) {
            out.push(cell);
        }
    }
    out.sort_by(|p, q| p.vertices().cmp(q.vertices()));
    Ok(out)
}
