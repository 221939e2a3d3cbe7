//! Certified counting of the real points of curves with finitely many of them.
//!
//! The real zeros of `f` in a region are enclosed in boxes, each carrying a
//! local certificate that its point is the only zero in it, and the rest of
//! every chart is covered by boxes on which the Bernstein coefficients of
//! `f` share one strict sign. Points come from resultants, so a count is
//! reported only when every zero has been accounted for.

mod algebraic;
mod bernstein;
mod chart;
mod construction;
mod elimination;
mod local;
mod subst;

use serde::Serialize;

pub use algebraic::Algebraic;
pub use construction::certify_construction;
pub use bernstein::{certified_sign, BernsteinPatch};
pub use elimination::{common_zeros, critical_solutions, resultant_y, AlgebraicPoint};
pub use local::{certify_point, hessian_positive, LocalCertificate, LocalMethod};
pub use subst::compose;

use chart::{certify_chart, ChartInput};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::LatticePoint;
use crate::poly::{Interval, IntervalBox, SparseBivariate};
use crate::rational::{self, Rational};

/// Where real points are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Region {
    Plane,
    ProjectivePlane,
    OpenPositiveQuadrant,
    ClosedPositiveQuadrant,
}

impl std::str::FromStr for Region {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plane" => Ok(Self::Plane),
            "projective" | "projective-plane" => Ok(Self::ProjectivePlane),
            "open-quadrant" => Ok(Self::OpenPositiveQuadrant),
            "closed-quadrant" => Ok(Self::ClosedPositiveQuadrant),
            _ => Err(Error::Parameter(format!("unknown region {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Maximal quadtree depth of the positivity cover.
    pub positivity_depth: u32,
    /// Maximal subdivision depth inside a local certificate.
    pub local_depth: u32,
    /// Radii tried per point, each a quarter of the previous one.
    pub local_attempts: u32,
    pub max_boxes: usize,
    /// Total degree accepted without `allow_high_degree`.
    pub max_degree: i64,
    pub allow_high_degree: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            positivity_depth: 24,
            local_depth: 12,
            local_attempts: 4,
            max_boxes: 1 << 20,
            max_degree: 16,
            allow_high_degree: false,
        }
    }
}

/// Affine chart of the projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    /// `z = 1`, coordinates `(x, y)`.
    Z,
    /// `x = 1`, coordinates `(y/x, z/x)`.
    X,
    /// `y = 1`, coordinates `(x/y, z/y)`.
    Y,
}

impl Chart {
    const ALL: [Chart; 3] = [Chart::Z, Chart::X, Chart::Y];

    /// `f` dehomogenized in this chart, `f` read as a form of degree `n`.
    fn restrict(self, f: &SparseBivariate, n: i64) -> SparseBivariate {
        let mut out = SparseBivariate::zero();
        for (e, c) in f.terms() {
            let z = n - e.i - e.j;
            let m = match self {
                Chart::Z => *e,
                Chart::X => LatticePoint::new(e.j, z),
                Chart::Y => LatticePoint::new(e.i, z),
            };
            out.add_term(m, c.clone());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum PointKind {
    /// Isolated point with positive Hessian determinant.
    Node,
    /// Isolated point with degenerate Hessian.
    Degenerate,
    /// Zero on the boundary of a quadrant region, isolated from the inside.
    Boundary,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertifiedPoint {
    pub chart: Chart,
    /// Enclosure of the chart coordinates.
    pub x: Interval,
    pub y: Interval,
    /// Exact chart coordinates when rational.
    pub exact: Option<[String; 2]>,
    pub kind: PointKind,
    /// Number of points of the counted curve this point stands for.
    pub weight: u32,
    pub method: LocalMethod,
    /// Box in which it is the only zero.
    pub exclusion: IntervalBox,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChartCover {
    pub chart: Chart,
    pub domain: IntervalBox,
    pub sign: i32,
    pub leaves: Vec<IntervalBox>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RealPointCertificate {
    pub region: Region,
    pub count: usize,
    /// `f` was even in both variables and was certified through `f(√x, √y)`
    /// on the closed triangle `x, y, z ≥ 0`.
    pub quotient: bool,
    pub points: Vec<CertifiedPoint>,
    pub covers: Vec<ChartCover>,
    #[serde(with = "opt_rational")]
    pub t_used: Option<Rational>,
}

mod opt_rational {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Option<super::Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&crate::rational::to_string(q)),
            None => s.serialize_none(),
        }
    }
}

impl RealPointCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

/// How the charts are laid out for a region.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Layout {
    /// Three charts on `[-1, 1]²`.
    Full { affine_only: bool },
    /// Three charts on `[0, 1]²`, lower sides one-sided.
    Positive { open: bool, closed_affine: bool },
    /// The triangle `x, y, z ≥ 0` with fibre weights of the squaring map.
    Quotient { affine_only: bool },
}

fn unit(lo: i64) -> IntervalBox {
    let i = Interval::new(rational::int(lo), Rational::one());
    IntervalBox::new(i.clone(), i)
}

/// Weight of a chart point in the region, `None` when it is not owned.
fn ownership(layout: Layout, chart: Chart, p: &AlgebraicPoint) -> Option<u32> {
    let lt1 = |a: &Algebraic| a.cmp_rational(&Rational::one()) == std::cmp::Ordering::Less;
    let (u, v) = (&p.x, &p.y);
    // the chart owning a point of the projective plane is the one whose
    // coordinate is largest, ties going to Z, then X
    let owned_full = match chart {
        Chart::Z => true,
        Chart::X => v.abs_lt_one(),
        Chart::Y => u.abs_lt_one() && v.abs_lt_one(),
    };
    let owned_positive = match chart {
        Chart::Z => true,
        Chart::X => lt1(v),
        Chart::Y => lt1(u) && lt1(v),
    };
    let at_infinity = chart != Chart::Z && v.is_zero();
    match layout {
        Layout::Full { affine_only } => (owned_full && !(affine_only && at_infinity)).then_some(1),
        Layout::Positive { open, closed_affine } => {
            let ok = owned_positive
                && !at_infinity
                && (!open || (u.is_positive() && v.is_positive()))
                && (!closed_affine || chart == Chart::Z || v.is_positive());
            ok.then_some(1)
        }
        Layout::Quotient { affine_only } => {
            if !owned_positive || (affine_only && at_infinity) {
                return None;
            }
            let nonzero = 1 + u8::from(!u.is_zero()) + u8::from(!v.is_zero());
            Some(1 << (nonzero - 1))
        }
    }
}

fn even_quotient(f: &SparseBivariate) -> Option<SparseBivariate> {
    if f.terms().keys().all(|e| e.i % 2 == 0 && e.j % 2 == 0) && f.total_degree() > 0 {
        Some(SparseBivariate::from_terms(
            f.terms().iter().map(|(e, c)| (LatticePoint::new(e.i / 2, e.j / 2), c.clone())),
        ))
    } else {
        None
    }
}

fn kind(g: &SparseBivariate, p: &chart::ChartPoint, quotient: bool) -> PointKind {
    if !quotient && (p.square[0] || p.square[1]) {
        return PointKind::Boundary;
    }
    let sub = |sq: bool| {
        if sq {
            vec![Rational::zero(), Rational::zero(), Rational::one()]
        } else {
            vec![Rational::zero(), Rational::one()]
        }
    };
    let h = compose(g, &sub(p.square[0]), &sub(p.square[1]));
    let at = AlgebraicPoint {
        x: if p.square[0] { Algebraic::rational(Rational::zero()) } else { p.point.x.clone() },
        y: if p.square[1] { Algebraic::rational(Rational::zero()) } else { p.point.y.clone() },
    };
    match hessian_positive(&h, &at) {
        Some(true) => PointKind::Node,
        _ => PointKind::Degenerate,
    }
}

/// Certifies the number of real zeros of `f` in `region`, or explains why
/// no count could be certified. Never returns a count that is not proved.
pub fn certify_finite_count(f: &SparseBivariate, region: Region, opts: &CertifyOptions) -> Result<RealPointCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.total_degree();
    if d > opts.max_degree && !opts.allow_high_degree {
        return Err(Error::Parameter(format!(
            "degree {d} exceeds {}; pass the override to certify anyway",
            opts.max_degree
        )));
    }
    let quotient = match region {
        Region::Plane | Region::ProjectivePlane => even_quotient(f),
        _ => None,
    };
    let (g, layout) = match (&quotient, region) {
        (Some(q), r) => (q.clone(), Layout::Quotient { affine_only: r == Region::Plane }),
        (None, Region::Plane) => (f.clone(), Layout::Full { affine_only: true }),
        (None, Region::ProjectivePlane) => (f.clone(), Layout::Full { affine_only: false }),
        (None, Region::OpenPositiveQuadrant) => (f.clone(), Layout::Positive { open: true, closed_affine: false }),
        (None, Region::ClosedPositiveQuadrant) => (f.clone(), Layout::Positive { open: false, closed_affine: true }),
    };
    certify_layout(&g, layout, region, quotient.is_some(), opts)
}

/// Certifies `f(x², y²)` through `f` on the closed triangle `x, y, z ≥ 0`.
pub fn certify_squares(f: &SparseBivariate, affine_only: bool, opts: &CertifyOptions) -> Result<RealPointCertificate> {
    if 2 * f.total_degree() > opts.max_degree && !opts.allow_high_degree {
        return Err(Error::Parameter(format!(
            "degree {} exceeds {}; pass the override to certify anyway",
            2 * f.total_degree(),
            opts.max_degree
        )));
    }
    let region = if affine_only { Region::Plane } else { Region::ProjectivePlane };
    certify_layout(f, Layout::Quotient { affine_only }, region, true, opts)
}

fn certify_layout(
    g: &SparseBivariate,
    layout: Layout,
    region: Region,
    quotient: bool,
    opts: &CertifyOptions,
) -> Result<RealPointCertificate> {
    let n = g.total_degree();
    let (domain, half) = match layout {
        Layout::Full { .. } => (unit(-1), [false, false]),
        _ => (unit(0), [true, true]),
    };
    let mut points = Vec::new();
    let mut covers = Vec::new();
    let mut count = 0usize;
    for chart in Chart::ALL {
        let poly = chart.restrict(g, n);
        let input = ChartInput {
            poly: &poly,
            domain: domain.clone(),
            half,
        };
        let out = certify_chart(&input, opts)?;
        for p in &out.points {
            let Some(weight) = ownership(layout, chart, &p.point) else {
                continue;
            };
            count += weight as usize;
            let exact = p.point.rational().map(|(a, b)| [rational::to_string(&a), rational::to_string(&b)]);
            points.push(CertifiedPoint {
                chart,
                x: p.point.x.interval(),
                y: p.point.y.interval(),
                exact,
                kind: kind(&poly, p, quotient),
                weight,
                method: p.local.method,
                exclusion: p.local.exclusion.clone(),
            });
        }
        covers.push(ChartCover {
            chart,
            domain: domain.clone(),
            sign: out.sign,
            leaves: out.leaves,
        });
    }
    Ok(RealPointCertificate {
        region,
        count,
        quotient,
        points,
        covers,
        t_used: None,
    })
}

/// True when some part of the box may hold a singular point of `f` and the
/// Hessian determinant is positive on every such part.
///
/// Sub-boxes on which `f`, `f_x` or `f_y` has a certified sign hold no singular
/// point and are dropped; the determinant is certified on what remains.
pub fn is_solitary(f: &SparseBivariate, b: &IntervalBox) -> bool {
    let (fx, fy) = (f.partial_x(), f.partial_y());
    let (fxx, fyy, fxy) = (fx.partial_x(), fy.partial_y(), fx.partial_y());
    let det = &(&fxx * &fyy) - &(&fxy * &fxy);
    // cells that may hold a singular point, with whether the determinant is certified there
    let mut open = vec![(b.clone(), false)];
    for level in 0..=16 {
        let mut next = Vec::new();
        for (cell, mut convex) in open {
            if [f, &fx, &fy].iter().any(|p| certified_sign(p, &cell, 0).is_some_and(|s| s != 0)) {
                continue;
            }
            convex = convex || certified_sign(&det, &cell, 4) == Some(1);
            if level == 16 {
                if !convex {
                    return false;
                }
                next.push((cell, convex));
                continue;
            }
            let (l, r) = cell.bisect();
            let ((a, bb), (c, d)) = (l.bisect(), r.bisect());
            next.extend([a, bb, c, d].map(|q| (q, convex)));
        }
        if next.len() > 4096 {
            return false;
        }
        open = next;
    }
    !open.is_empty()
}
