use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lp::{feasible_point, Constraint};
use super::polygon::{cross, lattice_length, on_segment, LatticePoint, LatticePolygon};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Role of a cell (or axis piece) in a patchworking construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellTag {
    CubicBlock,
    ReflectedCubicBlock,
    #[serde(rename = "axis-segment-1")]
    AxisSegment1,
    #[serde(rename = "axis-segment-2")]
    AxisSegment2,
    #[serde(rename = "axis-segment-3")]
    AxisSegment3,
    Filler,
}

impl CellTag {
    pub fn is_cubic(self) -> bool {
        matches!(self, CellTag::CubicBlock | CellTag::ReflectedCubicBlock)
    }

    pub fn axis_segment(len: i64) -> Option<Self> {
        match len {
            1 => Some(CellTag::AxisSegment1),
            2 => Some(CellTag::AxisSegment2),
            3 => Some(CellTag::AxisSegment3),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CellTag::CubicBlock => "cubic-block",
            CellTag::ReflectedCubicBlock => "reflected-cubic-block",
            CellTag::AxisSegment1 => "axis-segment-1",
            CellTag::AxisSegment2 => "axis-segment-2",
            CellTag::AxisSegment3 => "axis-segment-3",
            CellTag::Filler => "filler",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub polygon: LatticePolygon,
    pub tag: CellTag,
}

/// A piece of a coordinate-axis edge carrying a segment pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisSegment {
    pub from: LatticePoint,
    pub to: LatticePoint,
    pub tag: CellTag,
}

impl AxisSegment {
    pub fn length(&self) -> i64 {
        lattice_length(self.from, self.to)
    }
}

/// A subdivision of a convex lattice polygon together with a lifting `ν`
/// given on every lattice point of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub parent: LatticePolygon,
    pub cells: Vec<Cell>,
    pub lift: BTreeMap<LatticePoint, Rational>,
    /// Decomposition of the coordinate-axis edges of the ambient polygon.
    pub segments: Vec<AxisSegment>,
    /// Polygon the construction lives in, when the parent is a truncation of it.
    pub ambient: Option<LatticePolygon>,
    /// Corners of the ambient polygon that were cut away (zero coefficient).
    pub cut_corners: Vec<LatticePoint>,
}

/// `a·i + b·j + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFn {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl AffineFn {
    pub fn eval(&self, p: LatticePoint) -> Rational {
        &self.a * int(p.i) + &self.b * int(p.j) + &self.c
    }

    /// Affine function through three non-collinear lifted points.
    pub fn through(pts: [(LatticePoint, Rational); 3]) -> Option<Self> {
        let [(p0, h0), (p1, h1), (p2, h2)] = pts;
        let det = cross(p0, p1, p2);
        if det == 0 {
            return None;
        }
        let det = int(det);
        let (u, v) = (p1.sub(p0), p2.sub(p0));
        let (dh1, dh2) = (&h1 - &h0, &h2 - &h0);
        let a = (&dh1 * int(v.j) - &dh2 * int(u.j)) / &det;
        let b = (&dh2 * int(u.i) - &dh1 * int(v.i)) / &det;
        let c = &h0 - &a * int(p0.i) - &b * int(p0.j);
        Some(Self { a, b, c })
    }
}

/// Outcome of [`check_regular`].
#[derive(Clone, Debug)]
pub struct RegularityReport {
    /// The stored lifting is convex with linearity domains exactly the cells.
    pub regular: bool,
    /// Per-cell affine pieces of the lifting that was validated (stored or found).
    pub witness: Vec<AffineFn>,
    /// A valid lifting found by linear feasibility when the stored one fails.
    pub found_lifting: Option<BTreeMap<LatticePoint, Rational>>,
}

impl RegularityReport {
    /// Whether some convex lifting realizes the cells.
    pub fn realizable(&self) -> bool {
        self.regular || self.found_lifting.is_some()
    }
}

impl Subdivision {
    pub fn single_cell(parent: LatticePolygon, lift: impl Fn(LatticePoint) -> Rational) -> Self {
        let lift = parent.lattice_points().into_iter().map(|p| (p, lift(p))).collect();
        Self {
            cells: vec![Cell {
                polygon: parent.clone(),
                tag: CellTag::Filler,
            }],
            parent,
            lift,
            segments: Vec::new(),
            ambient: None,
            cut_corners: Vec::new(),
        }
    }

    pub fn count_tag(&self, tag: CellTag) -> usize {
        self.cells.iter().filter(|c| c.tag == tag).count()
    }

    pub fn cubic_count(&self) -> usize {
        self.cells.iter().filter(|c| c.tag.is_cubic()).count()
    }

    /// Tag statistics `(A, B, V)`: cubic cells, axis segments of length 2 or 3,
    /// and ambient corners lying in axis segments of length 1.
    pub fn tag_statistics(&self) -> (usize, usize, usize) {
        let a = self.cubic_count();
        let b = self
            .segments
            .iter()
            .filter(|s| matches!(s.tag, CellTag::AxisSegment2 | CellTag::AxisSegment3))
            .count();
        let corners: BTreeSet<LatticePoint> = self
            .segments
            .iter()
            .filter(|s| s.tag == CellTag::AxisSegment1)
            .flat_map(|s| [s.from, s.to])
            .filter(|p| {
                self.ambient
                    .as_ref()
                    .map_or(false, |amb| amb.vertices().contains(p))
            })
            .collect();
        (a, b, corners.len())
    }

    /// Index of the cell containing `p` (first one in storage order).
    pub fn cell_of(&self, p: LatticePoint) -> Option<usize> {
        self.cells.iter().position(|c| c.polygon.contains(p))
    }

    /// Checks that the cells tile the parent face to face.
    pub fn validate_tiling(&self) -> Result<()> {
        if self.parent.is_degenerate() {
            return Err(Error::Degenerate(format!("parent {:?}", self.parent)));
        }
        let mut area = 0;
        for c in &self.cells {
            if c.polygon.is_degenerate() {
                return Err(Error::NotATiling(format!("degenerate cell {:?}", c.polygon)));
            }
            if let Some(v) = c.polygon.vertices().iter().find(|v| !self.parent.contains(**v)) {
                return Err(Error::NotATiling(format!("cell vertex {v:?} outside parent")));
            }
            area += c.polygon.lattice_area();
        }
        if area != self.parent.lattice_area() {
            return Err(Error::NotATiling(format!(
                "cell areas sum to {area}, parent has {}",
                self.parent.lattice_area()
            )));
        }
        let edges = self.edge_index();
        for (&(a, b), _) in edges.iter() {
            if !edges.contains_key(&(b, a)) {
                let on_parent_edge = self
                    .parent
                    .edges()
                    .iter()
                    .any(|&(u, v)| on_segment(u, v, a) && on_segment(u, v, b) && cross(u, v, a) == 0);
                if !on_parent_edge {
                    return Err(Error::NotATiling(format!(
                        "edge {a:?}-{b:?} is not a full edge of a neighbouring cell"
                    )));
                }
            }
        }
        // bucketed overlap test
        let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (k, c) in self.cells.iter().enumerate() {
            let (lo, hi) = c.polygon.bounding_box();
            for bi in lo.i.div_euclid(4)..=hi.i.div_euclid(4) {
                for bj in lo.j.div_euclid(4)..=hi.j.div_euclid(4) {
                    buckets.entry((bi, bj)).or_default().push(k);
                }
            }
        }
        let mut seen = BTreeSet::new();
        for ids in buckets.values() {
            for (x, &p) in ids.iter().enumerate() {
                for &q in &ids[x + 1..] {
                    if seen.insert((p.min(q), p.max(q)))
                        && self.cells[p].polygon.interiors_overlap(&self.cells[q].polygon)
                    {
                        return Err(Error::NotATiling(format!("cells {p} and {q} overlap")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Directed cell edges mapped to the owning cell.
    fn edge_index(&self) -> HashMap<(LatticePoint, LatticePoint), usize> {
        let mut m = HashMap::new();
        for (k, c) in self.cells.iter().enumerate() {
            for e in c.polygon.edges() {
                m.insert(e, k);
            }
        }
        m
    }

    /// Affine piece of `lift` on each cell, or the first cell where the
    /// lifting is not affine.
    fn affine_pieces(&self, lift: &BTreeMap<LatticePoint, Rational>) -> std::result::Result<Vec<AffineFn>, String> {
        let mut out = Vec::with_capacity(self.cells.len());
        for (k, c) in self.cells.iter().enumerate() {
            let v = c.polygon.vertices();
            let get = |p: LatticePoint| lift.get(&p).cloned().ok_or_else(|| format!("no lift at {p:?}"));
            let f = AffineFn::through([(v[0], get(v[0])?), (v[1], get(v[1])?), (v[2], get(v[2])?)])
                .ok_or_else(|| format!("cell {k} has collinear leading vertices"))?;
            for p in c.polygon.lattice_points() {
                if let Some(h) = lift.get(&p) {
                    if *h != f.eval(p) {
                        return Err(format!("lift is not affine on cell {k} at {p:?}"));
                    }
                }
            }
            out.push(f);
        }
        Ok(out)
    }

    /// Strict folding across every interior edge.
    fn folds_strictly(&self, pieces: &[AffineFn], lift: &BTreeMap<LatticePoint, Rational>) -> std::result::Result<(), String> {
        let edges = self.edge_index();
        for (&(a, b), &c1) in edges.iter() {
            let Some(&c2) = edges.get(&(b, a)) else { continue };
            for &v in self.cells[c2].polygon.vertices() {
                if cross(a, b, v) == 0 {
                    continue;
                }
                let hv = lift.get(&v).cloned().unwrap_or_else(|| pieces[c2].eval(v));
                if hv <= pieces[c1].eval(v) {
                    return Err(format!("no strict fold across edge {a:?}-{b:?} at {v:?}"));
                }
            }
        }
        Ok(())
    }

    fn validate_lift(&self, lift: &BTreeMap<LatticePoint, Rational>) -> std::result::Result<Vec<AffineFn>, String> {
        let pieces = self.affine_pieces(lift)?;
        self.folds_strictly(&pieces, lift)?;
        Ok(pieces)
    }

    /// Searches for a convex lifting by linear feasibility. Heights live on
    /// cell vertices; one cell is pinned to height zero, so all heights are
    /// nonnegative; strict folds use a uniform slack of 1.
    pub fn find_lifting(&self) -> Option<BTreeMap<LatticePoint, Rational>> {
        let verts: Vec<LatticePoint> = self
            .cells
            .iter()
            .flat_map(|c| c.polygon.vertices().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<LatticePoint, usize> = verts.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let n = verts.len();
        // barycentric coordinates of `p` w.r.t. the first three vertices of `cell`
        let bary = |cell: &LatticePolygon, p: LatticePoint| -> Vec<(usize, Rational)> {
            let v = cell.vertices();
            let det = int(cross(v[0], v[1], v[2]));
            let l1 = int(cross(p, v[1], v[2])) / &det;
            let l2 = int(cross(v[0], p, v[2])) / &det;
            let l3 = int(cross(v[0], v[1], p)) / &det;
            vec![(index[&v[0]], l1), (index[&v[1]], l2), (index[&v[2]], l3)]
        };
        let mut cons = Vec::new();
        let row = |terms: &[(usize, Rational)], rhs: Rational, equality: bool| {
            let mut coeffs = vec![Rational::zero(); n];
            for (k, c) in terms {
                coeffs[*k] += c;
            }
            Constraint { coeffs, rhs, equality }
        };
        let first = self.cells.first()?.polygon.vertices();
        for p in &first[..3] {
            cons.push(row(&[(index[p], Rational::one())], Rational::zero(), true));
        }
        for c in &self.cells {
            for &p in &c.polygon.vertices()[3..] {
                let mut terms = vec![(index[&p], Rational::one())];
                terms.extend(bary(&c.polygon, p).into_iter().map(|(k, l)| (k, -l)));
                cons.push(row(&terms, Rational::zero(), true));
            }
        }
        let edges = self.edge_index();
        for (&(a, b), &c1) in edges.iter() {
            let Some(&c2) = edges.get(&(b, a)) else { continue };
            if let Some(&v) = self.cells[c2].polygon.vertices().iter().find(|&&v| cross(a, b, v) != 0) {
                let mut terms = vec![(index[&v], Rational::one())];
                terms.extend(bary(&self.cells[c1].polygon, v).into_iter().map(|(k, l)| (k, -l)));
                cons.push(row(&terms, Rational::one(), false));
            }
        }
        let x = feasible_point(n, &cons)?;
        let heights: BTreeMap<LatticePoint, Rational> = verts.into_iter().zip(x).collect();
        let pieces = self.affine_pieces(&heights).ok()?;
        let mut lift = BTreeMap::new();
        for p in self.parent.lattice_points() {
            let k = self.cell_of(p)?;
            lift.insert(p, pieces[k].eval(p));
        }
        Some(lift)
    }
}

/// Decides whether the stored lifting realizes the subdivision; if not,
/// tries to find one.
pub fn check_regular(s: &Subdivision) -> Result<RegularityReport> {
    s.validate_tiling()?;
    match s.validate_lift(&s.lift) {
        Ok(witness) => Ok(RegularityReport {
            regular: true,
            witness,
            found_lifting: None,
        }),
        Err(_) => {
            let found = s.find_lifting();
            let witness = found
                .as_ref()
                .and_then(|l| s.validate_lift(l).ok())
                .unwrap_or_default();
            Ok(RegularityReport {
                regular: false,
                witness,
                found_lifting: found,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon::simplex;

    fn p(i: i64, j: i64) -> LatticePoint {
        LatticePoint::new(i, j)
    }

    fn square_split(lift: [i64; 4]) -> Subdivision {
        let parent = LatticePolygon::hull([p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let corners = [p(0, 0), p(1, 0), p(0, 1), p(1, 1)];
        Subdivision {
            parent,
            cells: vec![
                Cell { polygon: LatticePolygon::hull([p(0, 0), p(1, 0), p(0, 1)]).unwrap(), tag: CellTag::Filler },
                Cell { polygon: LatticePolygon::hull([p(1, 0), p(1, 1), p(0, 1)]).unwrap(), tag: CellTag::Filler },
            ],
            lift: corners.into_iter().zip(lift.map(int)).collect(),
            segments: vec![],
            ambient: None,
            cut_corners: vec![],
        }
    }

    #[test]
    fn single_cell_is_regular() {
        let s = Subdivision::single_cell(simplex(3), |_| Rational::zero());
        assert!(check_regular(&s).unwrap().regular);
    }

    #[test]
    fn diagonal_fold() {
        let r = check_regular(&square_split([0, 0, 0, 1])).unwrap();
        assert!(r.regular);
        assert_eq!(r.witness.len(), 2);
    }

    #[test]
    fn flat_lift_is_not_regular_but_repairable() {
        let s = square_split([0, 0, 0, 0]);
        let r = check_regular(&s).unwrap();
        assert!(!r.regular);
        let found = r.found_lifting.expect("a lifting exists");
        let mut fixed = s.clone();
        fixed.lift = found;
        assert!(check_regular(&fixed).unwrap().regular);
    }

    #[test]
    fn non_tiling_is_a_structural_error() {
        let mut s = square_split([0, 0, 0, 1]);
        s.cells.pop();
        assert!(matches!(check_regular(&s), Err(Error::NotATiling(_))));
    }

    #[test]
    fn non_regular_triangulation_is_detected() {
        // the classic "mother of all examples" is not regular; here we use a
        // simple case: a triangle with a non-face-to-face split is rejected
        let parent = simplex(2);
        let s = Subdivision {
            parent: parent.clone(),
            cells: vec![
                Cell { polygon: LatticePolygon::hull([p(0, 0), p(2, 0), p(0, 1)]).unwrap(), tag: CellTag::Filler },
                Cell { polygon: LatticePolygon::hull([p(2, 0), p(0, 2), p(0, 1)]).unwrap(), tag: CellTag::Filler },
            ],
            lift: parent.lattice_points().into_iter().map(|q| (q, Rational::zero())).collect(),
            segments: vec![],
            ambient: None,
            cut_corners: vec![],
        };
        // (1,1)... cells are face to face along (2,0)-(0,1)
        let r = check_regular(&s).unwrap();
        assert!(!r.regular);
        assert!(r.realizable());
    }
}
