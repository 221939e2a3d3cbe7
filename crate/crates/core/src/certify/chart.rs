//! One affine chart: candidate zeros, local certificates, and a Bernstein
//! quadtree proving that `g` has no other zeros in the chart box.

use num_traits::{One, Signed, Zero};

use super::algebraic::Algebraic;
use super::bernstein::{cover, CoverFailure};
use super::elimination::{critical_solutions, AlgebraicPoint};
use super::local::{certify_point, LocalCertificate};
use super::CertifyOptions;
use crate::error::{Error, Result};
use crate::poly::univariate::{isolate_roots, UPoly};
use crate::poly::{IntervalBox, SparseBivariate};
use crate::rational::{int, Rational};

pub struct ChartInput<'a> {
    pub poly: &'a SparseBivariate,
    pub domain: IntervalBox,
    /// The lower end of each coordinate is a one-sided boundary of the region.
    pub half: [bool; 2],
}

pub struct ChartPoint {
    pub point: AlgebraicPoint,
    pub square: [bool; 2],
    pub local: LocalCertificate,
}

pub struct ChartOutcome {
    pub points: Vec<ChartPoint>,
    pub leaves: Vec<IntervalBox>,
    pub sign: i32,
}

/// Multiple roots of `g` along the side `u = 0` (or `v = 0` when `swap`).
fn side_zeros(g: &SparseBivariate, dom: &IntervalBox, swap: bool) -> Result<Vec<AlgebraicPoint>> {
    let (restricted, range) = if swap {
        (g.restrict_y(&Rational::zero()), &dom.x)
    } else {
        (g.restrict_x(&Rational::zero()), &dom.y)
    };
    let p = UPoly::from_rationals(&restricted);
    if p.is_zero() {
        return Err(Error::Inconclusive("the curve contains a boundary line of the region".into()));
    }
    let q = p.gcd(&p.derivative());
    let mut out = Vec::new();
    if q.degree() > 0 {
        for r in isolate_roots(&q.squarefree(), &range.lo, &range.hi) {
            let t = Algebraic::from_root(&q, r);
            let zero = Algebraic::rational(Rational::zero());
            out.push(if swap {
                AlgebraicPoint { x: t, y: zero }
            } else {
                AlgebraicPoint { x: zero, y: t }
            });
        }
    }
    Ok(out)
}

fn candidates(input: &ChartInput) -> Result<Vec<AlgebraicPoint>> {
    let (mut pts, _) = critical_solutions(input.poly, &input.domain);
    let mut extra = Vec::new();
    if input.half[0] {
        extra.extend(side_zeros(input.poly, &input.domain, false)?);
    }
    if input.half[1] {
        extra.extend(side_zeros(input.poly, &input.domain, true)?);
    }
    if input.half[0] && input.half[1] && input.poly.eval(&Rational::zero(), &Rational::zero()).is_zero() {
        extra.push(AlgebraicPoint {
            x: Algebraic::rational(Rational::zero()),
            y: Algebraic::rational(Rational::zero()),
        });
    }
    for p in extra {
        if !pts.iter().any(|q| q.same(&p)) {
            pts.push(p);
        }
    }
    Ok(pts)
}

fn power_of_two_below(q: &Rational) -> Rational {
    let mut r = Rational::new(1.into(), 2.into());
    while r > *q && r > Rational::new(1.into(), num_bigint::BigInt::one() << 200u32) {
        r /= int(2);
    }
    r
}

fn certify_points(input: &ChartInput, pts: Vec<AlgebraicPoint>, opts: &CertifyOptions) -> Result<Vec<ChartPoint>> {
    let fine = Rational::new(1.into(), num_bigint::BigInt::one() << 40u32);
    let centres: Vec<(Rational, Rational)> = pts
        .iter()
        .map(|p| {
            let (mut x, mut y) = (p.x.clone(), p.y.clone());
            x.refine(&fine);
            y.refine(&fine);
            (x.approx(), y.approx())
        })
        .collect();
    let mut out = Vec::new();
    for (k, p) in pts.into_iter().enumerate() {
        let mut sep = int(2);
        for (l, c) in centres.iter().enumerate() {
            if l != k {
                let d = (&centres[k].0 - &c.0).abs().max((&centres[k].1 - &c.1).abs());
                sep = sep.min(d);
            }
        }
        let square = [input.half[0] && p.x.is_zero(), input.half[1] && p.y.is_zero()];
        let mut r = power_of_two_below(&(sep / int(4)));
        let mut local = None;
        for _ in 0..opts.local_attempts {
            local = certify_point(input.poly, &p, square, &r, opts.local_depth);
            if local.is_some() {
                break;
            }
            r /= int(4);
        }
        let local = local.ok_or_else(|| {
            Error::Inconclusive(format!("no local certificate at ({:.6}, {:.6})", p.x.to_f64(), p.y.to_f64()))
        })?;
        out.push(ChartPoint { point: p, square, local });
    }
    Ok(out)
}

pub fn certify_chart(input: &ChartInput, opts: &CertifyOptions) -> Result<ChartOutcome> {
    let pts = candidates(input)?;
    let points = certify_points(input, pts, opts)?;
    let mut sign = 0;
    for p in &points {
        if sign != 0 && p.local.sign != sign {
            return Err(Error::Inconclusive("the polynomial changes sign".into()));
        }
        sign = p.local.sign;
    }
    let holes: Vec<IntervalBox> = points.iter().map(|p| p.local.exclusion.clone()).collect();
    let c = cover(input.poly, &input.domain, &holes, sign, opts.positivity_depth, opts.max_boxes).map_err(|e| {
        Error::Inconclusive(match e {
            CoverFailure::Depth(d) => format!(
                "no definite sign on [{}, {}] x [{}, {}] at depth {}",
                d.x.lo, d.x.hi, d.y.lo, d.y.hi, opts.positivity_depth
            ),
            CoverFailure::SignChange => "the polynomial changes sign".into(),
            CoverFailure::TooManyBoxes => format!("more than {} boxes", opts.max_boxes),
        })
    })?;
    let (leaves, sign) = (c.leaves, if c.sign == 0 { 1 } else { c.sign });
    Ok(ChartOutcome { points, leaves, sign })
}
