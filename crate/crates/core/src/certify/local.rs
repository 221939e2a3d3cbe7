//! Certificates that a zero of `g` is the only zero in a box around it.
//!
//! A coordinate lying on a one-sided boundary (`u ≥ 0` near `u = 0`) is
//! replaced by its square root, so the half-neighbourhood becomes a full one.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::bernstein::{certified_sign, cover};
use super::elimination::AlgebraicPoint;
use super::subst::compose;
use crate::geom::LatticePoint;
use crate::poly::univariate::{isolate_roots, rational_value, UPoly};
use crate::poly::{Interval, IntervalBox, SparseBivariate};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum LocalMethod {
    /// Blow-up at an exact rational zero of even order with definite tangent cone.
    BlowUp { order: u32 },
    /// Strict convexity around an exact critical zero.
    Convexity,
}

#[derive(Clone, Debug)]
pub struct LocalCertificate {
    /// Box around the point, in chart coordinates, where the point is the only zero.
    pub exclusion: IntervalBox,
    /// Sign of `g` on the box minus the point.
    pub sign: i32,
    pub method: LocalMethod,
}

const SQUARE: [i64; 3] = [0, 0, 1];

/// Nested blow-ups tried at a degenerate tangent direction.
const MAX_BLOW_UPS: u32 = 4;

fn substitution(square: bool, centre: &Rational) -> Vec<Rational> {
    if square {
        SQUARE.iter().map(|&c| int(c)).collect()
    } else {
        vec![centre.clone(), Rational::one()]
    }
}

fn extent(square: bool, centre: &Rational, r: &Rational) -> Interval {
    if square {
        Interval::new(Rational::zero(), r * r)
    } else {
        Interval::new(centre - r, centre + r)
    }
}

/// `h(U, U·W) / U^m` for the order `m` of `h` at the origin.
fn blow_up(h: &SparseBivariate, m: i64, second: bool) -> SparseBivariate {
    let mut out = SparseBivariate::zero();
    for (e, c) in h.terms() {
        let (i, j) = if second { (e.j, e.i) } else { (e.i, e.j) };
        out.add_term(LatticePoint::new(i + j - m, j), c.clone());
    }
    out
}

/// Sign of `h` on `[-r, r]² \ {0}` for `h(0) = 0`, by blow-ups: directions
/// where the tangent cone vanishes are blown up again, up to `level` times.
/// Returns the sign and the order of `h` at the origin.
fn punctured_sign(h: &SparseBivariate, r: &Rational, level: u32, depth: u32) -> Option<(i32, u32)> {
    let m = h.terms().keys().map(|e| e.i + e.j).min()?;
    if m % 2 != 0 || !h.coeff(LatticePoint::new(0, 0)).is_zero() {
        return None;
    }
    let strip = IntervalBox::new(Interval::new(-r, r.clone()), Interval::new(int(-1), int(1)));
    let mut sign = 0;
    for second in [false, true] {
        let g = blow_up(h, m, second);
        // tangent cone along the exceptional line T = 0
        let cone = UPoly::from_rationals(&g.restrict_x(&Rational::zero()));
        let mut holes = Vec::new();
        if cone.is_zero() {
            return None;
        }
        let roots = isolate_roots(&cone.squarefree(), &int(-1), &int(1));
        if !roots.is_empty() {
            if level == 0 {
                return None;
            }
            let ws: Vec<Rational> = roots
                .iter()
                .map(|w| rational_value(&cone.squarefree(), w))
                .collect::<Option<_>>()?;
            for (k, w) in ws.iter().enumerate() {
                let sep = ws
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != k)
                    .map(|(_, v)| (w - v).abs())
                    .fold(int(1), |a, b| a.min(b));
                let mut rk = r.clone().min(sep / int(4));
                let shifted = compose(&g, &[Rational::zero(), Rational::one()], &[w.clone(), Rational::one()]);
                let mut found = None;
                for _ in 0..3 {
                    if let Some((s, _)) = punctured_sign(&shifted, &rk, level - 1, depth) {
                        found = Some(s);
                        break;
                    }
                    rk /= int(4);
                }
                let s = found?;
                if sign != 0 && s != sign {
                    return None;
                }
                sign = s;
                holes.push(IntervalBox::new(Interval::new(-&rk, rk.clone()), Interval::new(w - &rk, w + &rk)));
            }
        }
        let c = cover(&g, &strip, &holes, sign, depth, 1 << 16).ok()?;
        if c.sign == 0 || (sign != 0 && c.sign != sign) {
            return None;
        }
        sign = c.sign;
    }
    Some((sign, m as u32))
}

fn by_blow_up(
    g: &SparseBivariate,
    (a, b): (&Rational, &Rational),
    square: [bool; 2],
    r: &Rational,
    depth: u32,
) -> Option<LocalCertificate> {
    let h = compose(g, &substitution(square[0], a), &substitution(square[1], b));
    let (sign, order) = punctured_sign(&h, r, MAX_BLOW_UPS, depth)?;
    Some(LocalCertificate {
        exclusion: IntervalBox::new(extent(square[0], a, r), extent(square[1], b, r)),
        sign,
        method: LocalMethod::BlowUp { order },
    })
}

fn by_convexity(
    g: &SparseBivariate,
    p: &AlgebraicPoint,
    square: [bool; 2],
    r: &Rational,
    depth: u32,
) -> Option<LocalCertificate> {
    let eps = r / int(4);
    let mut coords = [p.x.clone(), p.y.clone()];
    let mut boxes = Vec::new();
    let mut subs = Vec::new();
    for (k, c) in coords.iter_mut().enumerate() {
        c.refine(&eps);
        let centre = c.approx();
        if square[k] {
            boxes.push(Interval::new(-r, r.clone()));
            subs.push(SQUARE.iter().map(|&v| int(v)).collect::<Vec<_>>());
        } else {
            boxes.push(Interval::new(&centre - r, &centre + r));
            subs.push(vec![Rational::zero(), Rational::one()]);
        }
    }
    let h = compose(g, &subs[0], &subs[1]);
    let (hxx, hyy, hxy) = (h.partial_x().partial_x(), h.partial_y().partial_y(), h.partial_x().partial_y());
    let det = &(&hxx * &hyy) - &(&hxy * &hxy);
    let b = IntervalBox::new(boxes[0].clone(), boxes[1].clone());
    if certified_sign(&det, &b, depth)? != 1 {
        return None;
    }
    let sign = certified_sign(&hxx, &b, depth)?;
    let ext = |k: usize| {
        if square[k] {
            Interval::new(Rational::zero(), r * r)
        } else {
            boxes[k].clone()
        }
    };
    Some(LocalCertificate {
        exclusion: IntervalBox::new(ext(0), ext(1)),
        sign,
        method: LocalMethod::Convexity,
    })
}

/// Certifies that `p`, an exact zero of `g` that is critical for the
/// squared-coordinate polynomial, is the only zero of `g` near it.
/// `square[k]` marks a coordinate equal to 0 on a one-sided boundary.
pub fn certify_point(
    g: &SparseBivariate,
    p: &AlgebraicPoint,
    square: [bool; 2],
    r: &Rational,
    depth: u32,
) -> Option<LocalCertificate> {
    debug_assert!(r.is_positive());
    match p.rational() {
        Some((a, b)) => by_blow_up(g, (&a, &b), square, r, depth),
        None => by_convexity(g, p, square, r, depth),
    }
}

/// Hessian determinant of `g` is positive at the point: a non-degenerate
/// solitary node when `g` vanishes there.
pub fn hessian_positive(g: &SparseBivariate, p: &AlgebraicPoint) -> Option<bool> {
    let (gxx, gyy, gxy) = (g.partial_x().partial_x(), g.partial_y().partial_y(), g.partial_x().partial_y());
    let det = &(&gxx * &gyy) - &(&gxy * &gxy);
    if let Some((a, b)) = p.rational() {
        return Some(det.eval(&a, &b).is_positive());
    }
    let (mut x, mut y) = (p.x.clone(), p.y.clone());
    let mut eps = Rational::new(1.into(), 1024.into());
    for _ in 0..20 {
        x.refine(&eps);
        y.refine(&eps);
        let v = crate::poly::eval_interval(&det, &IntervalBox::new(x.interval(), y.interval()));
        if v.is_positive() {
            return Some(true);
        }
        if v.is_negative() {
            return Some(false);
        }
        eps = eps / int(1 << 20);
    }
    None
}
