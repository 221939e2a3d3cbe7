use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{lattice_length, primitive_direction, LatticePoint, LatticePolygon};
use crate::poly::univariate::{root_structure, RealRoot, UPoly};
use crate::poly::SparseBivariate;
use crate::rational::{int, Rational};

/// A quadrant of `(ℝ*)²`, named by the signs of its coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quadrant {
    pub neg_x: bool,
    pub neg_y: bool,
}

impl Quadrant {
    pub const POSITIVE: Quadrant = Quadrant { neg_x: false, neg_y: false };

    pub const ALL: [Quadrant; 4] = [
        Quadrant { neg_x: false, neg_y: false },
        Quadrant { neg_x: true, neg_y: false },
        Quadrant { neg_x: false, neg_y: true },
        Quadrant { neg_x: true, neg_y: true },
    ];

    pub fn index(self) -> usize {
        self.neg_x as usize + 2 * self.neg_y as usize
    }

    pub fn label(self) -> &'static str {
        match (self.neg_x, self.neg_y) {
            (false, false) => "++",
            (true, false) => "-+",
            (false, true) => "+-",
            (true, true) => "--",
        }
    }

    /// Image under the reflection `Q(a, b)`: `x ↦ (-1)^a x`, `y ↦ (-1)^b y`.
    pub fn reflect(self, a: i64, b: i64) -> Self {
        Quadrant {
            neg_x: self.neg_x ^ (a.rem_euclid(2) == 1),
            neg_y: self.neg_y ^ (b.rem_euclid(2) == 1),
        }
    }

    /// Image under `Q(e^⊥)` with `e^⊥ = (b, -a)` for the direction `e = (a, b)`.
    pub fn reflect_perp(self, e: LatticePoint) -> Self {
        self.reflect(e.j, -e.i)
    }
}

/// Where a singular point of a block sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointClass {
    Real(Quadrant),
    Imaginary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Solitary,
    NonSolitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Singular {
    pub class: PointClass,
    pub kind: NodeKind,
}

/// Position of a point of a toric divisor relative to its real part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Position {
    /// The half adjacent to the positive quadrant.
    Positive,
    Negative,
    Imaginary,
}

/// A point where the block curve meets the divisor of an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPoint {
    /// Isolating interval of the root `s` of the edge polynomial (real points only).
    pub root: Option<RealRoot>,
    pub position: Position,
    pub multiplicity: u32,
    /// Quadrant containing both local branches, declared for real fat points.
    pub quadrant: Option<Quadrant>,
}

impl BoundaryPoint {
    pub fn is_fat(&self) -> bool {
        self.multiplicity > 1
    }
}

/// Intersection data of a block curve with one edge divisor. The edge is
/// stored with `from < to`, and the edge polynomial is
/// `Σ_k a_{from + k·d} s^k` for the primitive direction `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub from: LatticePoint,
    pub to: LatticePoint,
    pub points: Vec<BoundaryPoint>,
}

impl EdgeData {
    pub fn direction(&self) -> LatticePoint {
        primitive_direction(self.from, self.to)
    }
}

/// Ordered form of an edge.
pub fn canonical_edge(a: LatticePoint, b: LatticePoint) -> (LatticePoint, LatticePoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Coefficients of `p` along the segment `from → to`, lowest first.
pub fn edge_polynomial(p: &SparseBivariate, from: LatticePoint, to: LatticePoint) -> Vec<Rational> {
    let d = primitive_direction(from, to);
    (0..=lattice_length(from, to)).map(|k| p.coeff(from.add(d.scale(k)))).collect()
}

fn edge_data(p: &SparseBivariate, from: LatticePoint, to: LatticePoint) -> EdgeData {
    let (from, to) = canonical_edge(from, to);
    let u = UPoly::from_rationals(&edge_polynomial(p, from, to));
    let rs = root_structure(&u);
    let mut points: Vec<BoundaryPoint> = rs
        .real
        .into_iter()
        .map(|(r, m)| BoundaryPoint {
            position: if r.hi > int(0) { Position::Positive } else { Position::Negative },
            root: Some(r),
            multiplicity: m,
            quadrant: None,
        })
        .collect();
    for (m, n) in rs.imaginary {
        for _ in 0..n {
            points.push(BoundaryPoint {
                root: None,
                position: Position::Imaginary,
                multiplicity: m,
                quadrant: None,
            });
        }
    }
    EdgeData { from, to, points }
}

/// A polynomial on one cell of a subdivision with its singular points and
/// its intersections with the edge divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub cell: LatticePolygon,
    pub poly: SparseBivariate,
    pub singulars: Vec<Singular>,
    pub boundary: Vec<EdgeData>,
}

impl Block {
    /// Builds a block; the support of `poly` must lie in `cell` and every
    /// vertex of `cell` must carry a nonzero coefficient.
    pub fn new(cell: LatticePolygon, poly: SparseBivariate, singulars: Vec<Singular>) -> Result<Self> {
        if let Some(v) = cell.vertices().iter().find(|v| poly.coeff(**v) == int(0)) {
            return Err(Error::ZeroVertexCoefficient(*v));
        }
        if let Some(e) = poly.terms().keys().find(|e| !cell.contains(**e)) {
            return Err(Error::BlockMismatch(format!("monomial {e:?} outside cell {:?}", cell.vertices())));
        }
        let boundary = cell.edges().into_iter().map(|(a, b)| edge_data(&poly, a, b)).collect();
        Ok(Self {
            cell,
            poly,
            singulars,
            boundary,
        })
    }

    /// The block multiplied by the monomial `x^v.i y^v.j`.
    pub fn shifted(&self, v: LatticePoint) -> Self {
        let mut b = Self::new(self.cell.translate(v), self.poly.shift(v), self.singulars.clone())
            .expect("translation preserves block validity");
        for (new, old) in b.boundary.iter_mut().zip(&self.boundary) {
            for (p, q) in new.points.iter_mut().zip(&old.points) {
                p.quadrant = q.quadrant;
            }
        }
        b
    }

    pub fn edge(&self, a: LatticePoint, b: LatticePoint) -> Option<&EdgeData> {
        let (a, b) = canonical_edge(a, b);
        self.boundary.iter().find(|e| e.from == a && e.to == b)
    }

    /// Declares the quadrant of the local branches at the `index`-th point of an edge.
    pub fn declare_quadrant(&mut self, a: LatticePoint, b: LatticePoint, index: usize, q: Quadrant) -> Result<()> {
        let (a, b) = canonical_edge(a, b);
        let e = self
            .boundary
            .iter_mut()
            .find(|e| e.from == a && e.to == b)
            .ok_or_else(|| Error::Parameter(format!("{a:?}-{b:?} is not an edge of the block")))?;
        let p = e
            .points
            .get_mut(index)
            .ok_or_else(|| Error::Parameter(format!("edge {a:?}-{b:?} has no point {index}")))?;
        p.quadrant = Some(q);
        Ok(())
    }

    pub fn solitary_in(&self, q: Quadrant) -> usize {
        self.singulars
            .iter()
            .filter(|s| s.kind == NodeKind::Solitary && s.class == PointClass::Real(q))
            .count()
    }
}

fn lp(i: i64, j: i64) -> LatticePoint {
    LatticePoint::new(i, j)
}

fn solitary_positive() -> Vec<Singular> {
    vec![Singular {
        class: PointClass::Real(Quadrant::POSITIVE),
        kind: NodeKind::Solitary,
    }]
}

/// `1 − 3xy + x²y + xy²` on the triangle `(0,0), (2,1), (1,2)`: a single
/// solitary node at `(1, 1)`.
pub fn cubic_block() -> Block {
    let cell = LatticePolygon::triangle(lp(0, 0), lp(2, 1), lp(1, 2)).expect("nondegenerate");
    let poly = SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 1), -3), ((2, 1), 1), ((1, 2), 1)]);
    Block::new(cell, poly, solitary_positive()).expect("valid block")
}

/// `x²y² − 3xy + x + y`, the cubic block under `(x, y) ↦ (1/x, 1/y)`.
pub fn reflected_block() -> Block {
    let cell = LatticePolygon::triangle(lp(1, 0), lp(0, 1), lp(2, 2)).expect("nondegenerate");
    let poly = SparseBivariate::from_int_terms(&[((2, 2), 1), ((1, 1), -3), ((1, 0), 1), ((0, 1), 1)]);
    Block::new(cell, poly, solitary_positive()).expect("valid block")
}

/// Coefficients (lowest first) of `1`, `(t − 1)²` and `(t − 1)²(t + 1)`.
pub fn segment_pattern(len: i64) -> Result<Vec<i64>> {
    match len {
        1 => Ok(vec![1]),
        2 => Ok(vec![1, -2, 1]),
        3 => Ok(vec![1, -1, -1, 1]),
        _ => Err(Error::Parameter(format!("axis segment length {len} not in 1..=3"))),
    }
}
