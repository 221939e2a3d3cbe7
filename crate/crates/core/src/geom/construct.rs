//! Tagged subdivisions built from the period tiling by copies of the cubic
//! triangle `(0,0),(2,1),(1,2)` and its point reflection.

use std::collections::{BTreeMap, BTreeSet};

use super::lower_hull::lower_hull_cells;
use super::polygon::{simplex, LatticePoint, LatticePolygon};
use super::subdivision::{AffineFn, AxisSegment, Cell, CellTag, Subdivision};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Constant `C` with `|3·A(k)/k² − Area(Δ)| ≤ C/k` and `|4·A(k)/k² − 4/3·Area(Δ)| ≤ C/k`
/// for the cubic cell counts `A(k)` of [`tile_with_cubic_triangle`], `k ≤ 60`,
/// on small polygons (the unit triangle needs 3.4, the unit square 5.4).
pub const TILING_BOUNDARY_CONSTANT: f64 = 12.0;

/// Hexagonal norm whose Delaunay cells are the cubic triangles.
fn hex_norm(p: LatticePoint) -> i64 {
    p.i * p.i - p.i * p.j + p.j * p.j
}

fn p(i: i64, j: i64) -> LatticePoint {
    LatticePoint::new(i, j)
}

/// Tag of a cell: cubic when it is a translate of the cubic triangle or of its reflection.
pub fn classify_cell(c: &LatticePolygon) -> CellTag {
    let v = c.vertices();
    if v.len() != 3 {
        return CellTag::Filler;
    }
    let m = p(v.iter().map(|q| q.i).min().unwrap(), v.iter().map(|q| q.j).min().unwrap());
    let set: BTreeSet<LatticePoint> = v.iter().map(|q| q.sub(m)).collect();
    if set == BTreeSet::from([p(0, 0), p(2, 1), p(1, 2)]) {
        CellTag::CubicBlock
    } else if set == BTreeSet::from([p(1, 0), p(0, 1), p(2, 2)]) {
        CellTag::ReflectedCubicBlock
    } else {
        CellTag::Filler
    }
}

/// Translation vector `v` such that a cubic cell is `v + T` (or `v + reflected T`).
pub fn cubic_offset(c: &LatticePolygon) -> LatticePoint {
    let v = c.vertices();
    p(v.iter().map(|q| q.i).min().unwrap(), v.iter().map(|q| q.j).min().unwrap())
}

/// Builds the tagged subdivision from a vertex set and integer heights.
fn build(
    parent_points: &[LatticePoint],
    height: impl Fn(LatticePoint) -> i64,
    segments: Vec<AxisSegment>,
    ambient: Option<LatticePolygon>,
    cut_corners: Vec<LatticePoint>,
) -> Result<Subdivision> {
    let polys = lower_hull_cells(parent_points, &height)?;
    let parent = LatticePolygon::hull(parent_points.iter().copied())?;
    let mut lift = BTreeMap::new();
    let mut cells = Vec::with_capacity(polys.len());
    for poly in polys {
        let v = poly.vertices();
        let f = AffineFn::through([(v[0], int(height(v[0]))), (v[1], int(height(v[1]))), (v[2], int(height(v[2])))])
            .ok_or_else(|| Error::Degenerate(format!("{poly:?}")))?;
        for q in poly.lattice_points() {
            lift.entry(q).or_insert_with(|| f.eval(q));
        }
        cells.push(Cell {
            tag: classify_cell(&poly),
            polygon: poly,
        });
    }
    Ok(Subdivision {
        parent,
        cells,
        lift,
        segments,
        ambient,
        cut_corners,
    })
}

/// Regular subdivision of `kΔ` containing `k²·Area(Δ)/3 + O(k)` cubic cells:
/// the period tiling restricted to `kΔ` plus its corners, for the coset of
/// the period lattice giving the most cubic cells.
pub fn tile_with_cubic_triangle(delta: &LatticePolygon, k: i64) -> Result<Subdivision> {
    if k < 1 {
        return Err(Error::Parameter(format!("dilation factor k = {k} must be at least 1")));
    }
    if delta.is_degenerate() {
        return Err(Error::Degenerate(format!("{delta:?}")));
    }
    let big = delta.dilate(k)?;
    let points = big.lattice_points();
    let mut best: Option<Subdivision> = None;
    for coset in 0..3 {
        let pts: Vec<LatticePoint> = points
            .iter()
            .copied()
            .filter(|q| big.vertices().contains(q) || (q.i + q.j - coset).rem_euclid(3) == 0)
            .collect();
        let s = build(&pts, hex_norm, Vec::new(), None, Vec::new())?;
        if best.as_ref().map_or(true, |b| s.cubic_count() > b.cubic_count()) {
            best = Some(s);
        }
    }
    Ok(best.expect("three cosets tried"))
}

/// Compositions of `k` into parts 1, 2, 3 with parts equal to 1 only at the ends.
fn axis_compositions(k: i64) -> Vec<Vec<i64>> {
    fn rec(rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in [3, 2, 1] {
            if part > rest {
                continue;
            }
            let first = cur.is_empty();
            let last = part == rest;
            if part == 1 && !first && !last {
                continue;
            }
            cur.push(part);
            rec(rest - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut out);
    out.retain(|c| c.len() > 1 || c[0] != 1);
    out.sort_by_key(|c| c.iter().filter(|&&x| x == 1).count());
    out
}

/// Candidate subdivision of the triangle `kΔ` for one choice of interior
/// coset and axis decompositions.
fn exact_candidate(k: i64, coset: i64, xs: &[i64], ys: &[i64]) -> Result<Subdivision> {
    let cut_origin = xs[0] == 1;
    let cut_x = *xs.last().unwrap() == 1 && xs.len() > 1;
    let cut_y = *ys.last().unwrap() == 1 && ys.len() > 1;
    let mut cut = Vec::new();
    if cut_origin {
        cut.push(p(0, 0));
    }
    if cut_x {
        cut.push(p(k, 0));
    }
    if cut_y {
        cut.push(p(0, k));
    }
    let mut segments = Vec::new();
    let mut pts: BTreeSet<LatticePoint> = BTreeSet::new();
    for (parts, axis) in [(xs, p(1, 0)), (ys, p(0, 1))] {
        let mut at = 0;
        for &len in parts {
            let (from, to) = (axis.scale(at), axis.scale(at + len));
            segments.push(AxisSegment {
                from,
                to,
                tag: CellTag::axis_segment(len).expect("parts are 1, 2 or 3"),
            });
            pts.insert(from);
            pts.insert(to);
            at += len;
        }
    }
    for i in 0..=k {
        pts.insert(p(i, k - i));
    }
    for i in 1..k {
        for j in 1..k - i {
            if (i + j - coset).rem_euclid(3) == 0 {
                pts.insert(p(i, j));
            }
        }
    }
    for c in &cut {
        pts.remove(c);
    }
    let pts: Vec<LatticePoint> = pts.into_iter().collect();
    let shift = (k + 1) / 3;
    build(
        &pts,
        |q| hex_norm(q) - shift * (q.i + q.j),
        segments,
        Some(simplex(k)),
        cut,
    )
}

/// Tagged regular subdivision of `kΔ` whose tag statistics satisfy
/// `4A + 2B + V = target`. Deterministic: the first hit in a fixed search order.
pub fn exact_subdivision_with_target(k: i64, target: i64) -> Result<Subdivision> {
    if k < 3 {
        return Err(Error::Unsupported(format!("exact subdivision needs k >= 3, got {k}")));
    }
    let comps = axis_compositions(k);
    for coset in 0..3 {
        for xs in &comps {
            for ys in &comps {
                if (xs[0] == 1) != (ys[0] == 1) {
                    continue;
                }
                let s = exact_candidate(k, coset, xs, ys)?;
                let (a, b, v) = s.tag_statistics();
                if 4 * a as i64 + 2 * b as i64 + v as i64 == target {
                    return Ok(s);
                }
            }
        }
    }
    Err(Error::Unsupported(format!("no tiling of {k}Δ reaches {target}")))
}

/// The subdivision of `kΔ` behind the exact lower bound for degree `2k`.
pub fn exact_subdivision(k: i64) -> Result<Subdivision> {
    if k < 3 {
        return Err(Error::Unsupported(format!("exact subdivision needs k >= 3, got {k}")));
    }
    exact_subdivision_with_target(k, crate::bounds::exact_formula(k))
}

/// Value of the lifting at `q` as an exact rational (zero outside the parent).
pub fn lift_at(s: &Subdivision, q: LatticePoint) -> Rational {
    s.lift.get(&q).cloned().unwrap_or_else(|| int(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::subdivision::check_regular;

    #[test]
    fn compositions_have_inner_parts_two_or_three() {
        for c in axis_compositions(7) {
            assert_eq!(c.iter().sum::<i64>(), 7);
            for &x in &c[1..c.len() - 1] {
                assert!(x >= 2);
            }
        }
    }

    #[test]
    fn classify_shapes() {
        let t = LatticePolygon::hull([p(3, 3), p(5, 4), p(4, 5)]).unwrap();
        assert_eq!(classify_cell(&t), CellTag::CubicBlock);
        let r = LatticePolygon::hull([p(1, 0), p(0, 1), p(2, 2)]).unwrap();
        assert_eq!(classify_cell(&r), CellTag::ReflectedCubicBlock);
        assert_eq!(classify_cell(&simplex(1)), CellTag::Filler);
    }

    #[test]
    fn exact_k3_layout() {
        let s = exact_subdivision(3).unwrap();
        let (a, b, v) = s.tag_statistics();
        assert_eq!(4 * a + 2 * b + v, 10);
        assert!(check_regular(&s).unwrap().regular);
    }

    #[test]
    fn small_k_is_unsupported() {
        assert!(matches!(exact_subdivision(2), Err(Error::Unsupported(_))));
    }
}
