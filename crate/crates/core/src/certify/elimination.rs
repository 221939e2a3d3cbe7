//! Resultants by evaluation and interpolation, and the real solutions of
//! `f = f_x = f_y = 0` with at least one rational coordinate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::algebraic::Algebraic;
use crate::linalg::interpolate;
use crate::poly::univariate::{isolate_roots, UPoly};
use crate::poly::{IntervalBox, SparseBivariate};
use crate::rational::{common_denominator, Rational};

/// Coefficients of `p` as a polynomial in `y` over `ℤ[x]`, after clearing
/// denominators: `rows[j][i]` multiplies `x^i y^j`.
fn integer_rows(p: &SparseBivariate) -> Vec<Vec<BigInt>> {
    let den = Rational::from_integer(common_denominator(p.terms().values()));
    let mut rows = vec![vec![BigInt::zero(); p.degree_x().max(0) as usize + 1]; p.degree_y().max(0) as usize + 1];
    for (e, c) in p.terms() {
        rows[e.j as usize][e.i as usize] = (c * &den).to_integer();
    }
    rows
}

fn eval_row(c: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * &x + a)
}

/// Fraction-free Gaussian elimination.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `Res_y(a, b)` as a polynomial in `x`, with the formal `y`-degrees of `a` and `b`.
pub fn resultant_y(a: &SparseBivariate, b: &SparseBivariate) -> UPoly {
    if a.is_zero() || b.is_zero() {
        return UPoly::default();
    }
    let (ra, rb) = (integer_rows(a), integer_rows(b));
    let (m, n) = (ra.len() - 1, rb.len() - 1);
    let bound = (n as i64) * a.degree_x() + (m as i64) * b.degree_x();
    let size = m + n;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for x in 0..=bound {
        let ca: Vec<BigInt> = ra.iter().map(|r| eval_row(r, x)).collect();
        let cb: Vec<BigInt> = rb.iter().map(|r| eval_row(r, x)).collect();
        let mut s = vec![vec![BigInt::zero(); size]; size];
        for r in 0..n {
            for (k, c) in ca.iter().rev().enumerate() {
                s[r][r + k] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in cb.iter().rev().enumerate() {
                s[n + r][r + k] = c.clone();
            }
        }
        xs.push(Rational::from_integer(x.into()));
        ys.push(Rational::from_integer(bareiss(s)));
    }
    UPoly::from_rationals(&interpolate(&xs, &ys))
}

/// A point of the plane with algebraic coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    pub x: Algebraic,
    pub y: Algebraic,
}

impl AlgebraicPoint {
    pub fn same(&self, o: &AlgebraicPoint) -> bool {
        self.x.same(&o.x) && self.y.same(&o.y)
    }

    pub fn rational(&self) -> Option<(Rational, Rational)> {
        Some((self.x.as_rational()?.clone(), self.y.as_rational()?.clone()))
    }

    fn swapped(self) -> Self {
        Self { x: self.y, y: self.x }
    }
}

/// Solutions of the system `ps = 0` with rational `x` in the box, and the
/// irrational `x`-candidates that were left open.
fn rational_x_pass(ps: &[SparseBivariate], dom: &IntervalBox) -> (Vec<AlgebraicPoint>, usize) {
    let mut elim = UPoly::default();
    for p in &ps[1..] {
        let r = resultant_y(&ps[0], p);
        elim = if elim.is_zero() { r } else if r.is_zero() { elim } else { elim.gcd(&r) };
    }
    if elim.degree() < 0 {
        // every x is a candidate: a common component; positivity will fail there
        return (Vec::new(), 1);
    }
    let mut out = Vec::new();
    let mut open = 0;
    for root in isolate_roots(&elim.squarefree(), &dom.x.lo, &dom.x.hi) {
        let x = Algebraic::from_root(&elim, root);
        let Some(a) = x.as_rational() else {
            open += 1;
            continue;
        };
        let h = ps
            .iter()
            .map(|p| UPoly::from_rationals(&p.restrict_x(a)))
            .fold(UPoly::default(), |g, q| if g.is_zero() { q } else if q.is_zero() { g } else { g.gcd(&q) });
        if h.degree() <= 0 {
            continue;
        }
        for r in isolate_roots(&h.squarefree(), &dom.y.lo, &dom.y.hi) {
            out.push(AlgebraicPoint {
                x: x.clone(),
                y: Algebraic::from_root(&h, r),
            });
        }
    }
    (out, open)
}

/// Real common zeros of `ps` in the closed box having a rational coordinate,
/// and whether some candidate with two irrational coordinates was skipped.
pub fn common_zeros(ps: &[SparseBivariate], dom: &IntervalBox) -> (Vec<AlgebraicPoint>, bool) {
    let (mut pts, open_x) = rational_x_pass(ps, dom);
    let swapped: Vec<SparseBivariate> = ps.iter().map(|p| p.swap_xy()).collect();
    let sdom = IntervalBox::new(dom.y.clone(), dom.x.clone());
    let (ypts, open_y) = rational_x_pass(&swapped, &sdom);
    for p in ypts.into_iter().map(AlgebraicPoint::swapped) {
        if !pts.iter().any(|q| q.same(&p)) {
            pts.push(p);
        }
    }
    // an irrational x-candidate is settled when a point found through its rational y has that x
    let irrational_x = pts.iter().filter(|p| p.x.as_rational().is_none()).count();
    let skipped = open_x > irrational_x || open_y > pts.iter().filter(|p| p.y.as_rational().is_none()).count();
    (pts, skipped)
}

/// Real solutions of `f = f_x = f_y = 0` in the closed box.
pub fn critical_solutions(f: &SparseBivariate, dom: &IntervalBox) -> (Vec<AlgebraicPoint>, bool) {
    common_zeros(&[f.clone(), f.partial_x(), f.partial_y()], dom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{symmetric_unit, Interval};
    use crate::rational::int;

    fn big() -> IntervalBox {
        let i = Interval::new(int(-4), int(4));
        IntervalBox::new(i.clone(), i)
    }

    #[test]
    fn resultant_of_circle_and_line() {
        // Res_y(x² + y² − 1, y − x) = 2x² − 1
        let c = SparseBivariate::from_int_terms(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -1)]);
        let l = SparseBivariate::from_int_terms(&[((0, 1), 1), ((1, 0), -1)]);
        assert_eq!(resultant_y(&c, &l), UPoly::from_i64(&[-1, 0, 2]));
    }

    #[test]
    fn resultant_matches_determinant_formula() {
        // Res_y(y² + a, y + b) = b² + a with a = x, b = x²
        let p = SparseBivariate::from_int_terms(&[((0, 2), 1), ((1, 0), 1)]);
        let q = SparseBivariate::from_int_terms(&[((0, 1), 1), ((2, 0), 1)]);
        assert_eq!(resultant_y(&p, &q), UPoly::from_i64(&[0, 1, 0, 0, 1]));
    }

    #[test]
    fn nodes_of_a_quartic() {
        // (x² − 1)² + (y² − 1)² has four nodes at (±1, ±1)
        let f = SparseBivariate::from_int_terms(&[((4, 0), 1), ((2, 0), -2), ((0, 4), 1), ((0, 2), -2), ((0, 0), 2)]);
        let (pts, skipped) = critical_solutions(&f, &big());
        assert!(!skipped);
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|p| p.rational().is_some()));
    }

    #[test]
    fn half_irrational_points() {
        // (x² − 2)² + (y − 1)²: nodes at (±√2, 1)
        let f = SparseBivariate::from_int_terms(&[((4, 0), 1), ((2, 0), -4), ((0, 2), 1), ((0, 1), -2), ((0, 0), 5)]);
        let (pts, skipped) = critical_solutions(&f, &big());
        assert!(!skipped);
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.x.as_rational().is_none() && p.y.as_rational() == Some(&int(1))));
    }

    #[test]
    fn doubly_irrational_points_are_flagged() {
        // (x² − 2)² + (y² − 3)²
        let f = SparseBivariate::from_int_terms(&[((4, 0), 1), ((2, 0), -4), ((0, 4), 1), ((0, 2), -6), ((0, 0), 13)]);
        let (pts, skipped) = critical_solutions(&f, &big());
        assert!(pts.is_empty() && skipped);
        let unit = IntervalBox::new(symmetric_unit(), symmetric_unit());
        assert!(!critical_solutions(&f, &unit).1);
    }
}
