use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector `(i, j)`, standing for the monomial `x^i y^j`.
///
/// Ordered graded-lexicographically: total degree first, then `i`, then `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    pub const fn new(i: i64, j: i64) -> Self {
        Self { i, j }
    }

    pub fn degree(self) -> i64 {
        self.i + self.j
    }

    pub fn sub(self, o: Self) -> Self {
        Self::new(self.i - o.i, self.j - o.j)
    }

    pub fn add(self, o: Self) -> Self {
        Self::new(self.i + o.i, self.j + o.j)
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.i * k, self.j * k)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Ord for LatticePoint {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.degree(), self.i, self.j).cmp(&(o.degree(), o.i, o.j))
    }
}

impl PartialOrd for LatticePoint {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[i64; 2]>::deserialize(d)?;
        Ok(Self::new(i, j))
    }
}

/// Twice the signed area of the triangle `a b c`; positive when counter-clockwise.
pub fn cross(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    let (u, v) = (b.sub(a), c.sub(a));
    u.i * v.j - u.j * v.i
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of lattice segments on the segment `a b` (its lattice length).
pub fn lattice_length(a: LatticePoint, b: LatticePoint) -> i64 {
    let d = b.sub(a);
    gcd(d.i, d.j)
}

/// Primitive direction of the segment from `a` to `b`.
pub fn primitive_direction(a: LatticePoint, b: LatticePoint) -> LatticePoint {
    let d = b.sub(a);
    let g = gcd(d.i, d.j).max(1);
    LatticePoint::new(d.i / g, d.j / g)
}

/// A convex lattice polygon, vertices counter-clockwise with no three
/// consecutive collinear. One or two vertices encode a point or a segment.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl fmt::Debug for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polygon{:?}", self.vertices)
    }
}

impl LatticePolygon {
    /// Builds a polygon from vertices that must already be in strictly convex
    /// counter-clockwise position.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(Error::Degenerate("empty vertex list".into()));
        }
        if n >= 3 {
            for k in 0..n {
                let c = cross(vertices[k], vertices[(k + 1) % n], vertices[(k + 2) % n]);
                if c <= 0 {
                    return Err(Error::Degenerate(format!(
                        "vertices {vertices:?} are not strictly convex counter-clockwise"
                    )));
                }
            }
        } else if n == 2 && vertices[0] == vertices[1] {
            return Err(Error::Degenerate("repeated vertex".into()));
        }
        let mut p = Self { vertices };
        p.rotate_canonical();
        Ok(p)
    }

    /// Convex hull of a point set (monotone chain). Collinear boundary
    /// points are dropped.
    pub fn hull(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut pts: Vec<_> = points.into_iter().collect();
        pts.sort_by_key(|p| (p.i, p.j));
        pts.dedup();
        if pts.is_empty() {
            return Err(Error::Degenerate("empty point set".into()));
        }
        if pts.len() <= 2 {
            return Ok(Self { vertices: pts });
        }
        let mut lower: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticePoint> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        let mut p = Self { vertices: lower };
        p.rotate_canonical();
        Ok(p)
    }

    /// Starts the vertex cycle at its smallest vertex so equal polygons compare equal.
    fn rotate_canonical(&mut self) {
        if let Some((k, _)) = self.vertices.iter().enumerate().min_by_key(|(_, v)| **v) {
            self.vertices.rotate_left(k);
        }
    }

    pub fn triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Self> {
        Self::hull([a, b, c])
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Twice the Euclidean area: the unit triangle has lattice area 1.
    pub fn lattice_area(&self) -> i64 {
        if self.is_degenerate() {
            return 0;
        }
        let o = self.vertices[0];
        self.vertices
            .windows(2)
            .map(|w| cross(o, w[0], w[1]))
            .sum()
    }

    /// Directed edges in counter-clockwise order.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        if n == 2 {
            return vec![(self.vertices[0], self.vertices[1])];
        }
        (0..n)
            .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
            .collect()
    }

    /// Closed containment test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.len() {
            1 => self.vertices[0] == p,
            2 => on_segment(self.vertices[0], self.vertices[1], p),
            _ => self.edges().iter().all(|&(a, b)| cross(a, b, p) >= 0),
        }
    }

    pub fn contains_in_interior(&self, p: LatticePoint) -> bool {
        !self.is_degenerate() && self.edges().iter().all(|&(a, b)| cross(a, b, p) > 0)
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p) && !self.contains_in_interior(p)
    }

    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let min_i = self.vertices.iter().map(|v| v.i).min().unwrap_or(0);
        let max_i = self.vertices.iter().map(|v| v.i).max().unwrap_or(0);
        let min_j = self.vertices.iter().map(|v| v.j).min().unwrap_or(0);
        let max_j = self.vertices.iter().map(|v| v.j).max().unwrap_or(0);
        (LatticePoint::new(min_i, min_j), LatticePoint::new(max_i, max_j))
    }

    /// All lattice points of the closed polygon, in graded-lex order.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for i in lo.i..=hi.i {
            for j in lo.j..=hi.j {
                let p = LatticePoint::new(i, j);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out.sort();
        out
    }

    /// Whether the edge `a b` (either orientation) is an edge of this polygon.
    pub fn has_edge(&self, a: LatticePoint, b: LatticePoint) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
    }

    /// Minkowski sum of two polygons.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        let pts = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.add(*b)));
        Self::hull(pts)
    }

    pub fn translate(&self, by: LatticePoint) -> Self {
        let mut p = Self {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
        };
        p.rotate_canonical();
        p
    }

    pub fn dilate(&self, k: i64) -> Result<Self> {
        Self::hull(self.vertices.iter().map(|v| v.scale(k)))
    }

    /// Whether the interiors of two non-degenerate convex polygons meet
    /// (separating axis test over the edge normals of both).
    pub fn interiors_overlap(&self, other: &Self) -> bool {
        if self.is_degenerate() || other.is_degenerate() {
            return false;
        }
        for poly in [self, other] {
            for (a, b) in poly.edges() {
                let other_side = if std::ptr::eq(poly, self) { other } else { self };
                if other_side.vertices.iter().all(|&p| cross(a, b, p) <= 0) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    cross(a, b, p) == 0
        && p.i >= a.i.min(b.i)
        && p.i <= a.i.max(b.i)
        && p.j >= a.j.min(b.j)
        && p.j <= a.j.max(b.j)
}

/// Lattice points of the closed segment from `a` to `b`, starting at `a`.
pub fn segment_points(a: LatticePoint, b: LatticePoint) -> Vec<LatticePoint> {
    let n = lattice_length(a, b);
    let d = primitive_direction(a, b);
    (0..=n).map(|s| a.add(d.scale(s))).collect()
}

/// The standard simplex `(0,0), (k,0), (0,k)`.
pub fn simplex(k: i64) -> LatticePolygon {
    LatticePolygon::hull([
        LatticePoint::new(0, 0),
        LatticePoint::new(k, 0),
        LatticePoint::new(0, k),
    ])
    .expect("simplex")
}
