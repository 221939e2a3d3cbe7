//! Bernstein coefficients of a bivariate polynomial on a box: all of them
//! positive proves positivity on the box, and de Casteljau splitting
//! refines them.

use num_traits::{One, Signed, Zero};

use super::subst::compose;
use crate::poly::{Interval, IntervalBox, SparseBivariate};
use crate::rational::{int, Rational};

fn binomials(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::one()];
    for k in 0..n {
        let next = &row[k] * int((n - k) as i64) / int(k as i64 + 1);
        row.push(next);
    }
    row
}

/// Bernstein form of a polynomial on an axis box.
#[derive(Clone, Debug)]
pub struct BernsteinPatch {
    pub domain: IntervalBox,
    /// `coeffs[i][j]` for `B_i(s) B_j(t)`.
    coeffs: Vec<Vec<Rational>>,
}

impl BernsteinPatch {
    pub fn new(p: &SparseBivariate, domain: &IntervalBox) -> Self {
        let (n, m) = (p.degree_x().max(0) as usize, p.degree_y().max(0) as usize);
        // power basis on the unit square
        let sx = [domain.x.lo.clone(), domain.x.width()];
        let sy = [domain.y.lo.clone(), domain.y.width()];
        let local = compose(p, &sx, &sy);
        let mut a = vec![vec![Rational::zero(); m + 1]; n + 1];
        for (e, c) in local.terms() {
            a[e.i as usize][e.j as usize] = c.clone();
        }
        let (bn, bm) = (binomials(n), binomials(m));
        let bin = |r: usize, k: usize| -> Rational {
            // C(r, k)
            binomials(r)[k].clone()
        };
        // b_ij = Σ_{k≤i, l≤j} C(i,k)/C(n,k) · C(j,l)/C(m,l) · a_kl
        let mut col = vec![vec![Rational::zero(); m + 1]; n + 1];
        for i in 0..=n {
            for l in 0..=m {
                let mut acc = Rational::zero();
                for k in 0..=i {
                    if !a[k][l].is_zero() {
                        acc += bin(i, k) / &bn[k] * &a[k][l];
                    }
                }
                col[i][l] = acc;
            }
        }
        let mut coeffs = vec![vec![Rational::zero(); m + 1]; n + 1];
        for i in 0..=n {
            for j in 0..=m {
                let mut acc = Rational::zero();
                for l in 0..=j {
                    if !col[i][l].is_zero() {
                        acc += bin(j, l) / &bm[l] * &col[i][l];
                    }
                }
                coeffs[i][j] = acc;
            }
        }
        Self {
            domain: domain.clone(),
            coeffs,
        }
    }

    /// `1` or `-1` when every coefficient has that sign, else `0`.
    pub fn sign(&self) -> i32 {
        let mut all_pos = true;
        let mut all_neg = true;
        for c in self.coeffs.iter().flatten() {
            all_pos &= c.is_positive();
            all_neg &= c.is_negative();
            if !all_pos && !all_neg {
                return 0;
            }
        }
        if all_pos {
            1
        } else if all_neg {
            -1
        } else {
            0
        }
    }

    /// Range enclosure from the extreme coefficients.
    pub fn enclosure(&self) -> Interval {
        let lo = self.coeffs.iter().flatten().min().cloned().unwrap_or_else(Rational::zero);
        let hi = self.coeffs.iter().flatten().max().cloned().unwrap_or_else(Rational::zero);
        Interval::new(lo, hi)
    }

    fn split_rows(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        // de Casteljau at 1/2 along the first index
        let n = rows.len();
        let half = Rational::new(1.into(), 2.into());
        let mut work = rows.to_vec();
        let mut left = Vec::with_capacity(n);
        let mut right = vec![Vec::new(); n];
        for r in 0..n {
            left.push(work[0].clone());
            right[n - 1 - r] = work[n - 1 - r].clone();
            for k in 0..n - 1 - r {
                work[k] = work[k]
                    .iter()
                    .zip(&work[k + 1])
                    .map(|(a, b)| (a + b) * &half)
                    .collect();
            }
        }
        (left, right)
    }

    fn transpose(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        if a.is_empty() {
            return Vec::new();
        }
        (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
    }

    /// The four quadrants of the domain.
    pub fn split4(&self) -> [BernsteinPatch; 4] {
        let (l, r) = Self::split_rows(&self.coeffs);
        let halves = |c: &[Vec<Rational>]| {
            let (a, b) = Self::split_rows(&Self::transpose(c));
            (Self::transpose(&a), Self::transpose(&b))
        };
        let (ll, lu) = halves(&l);
        let (rl, ru) = halves(&r);
        let mx = self.domain.x.mid();
        let my = self.domain.y.mid();
        let xs = [
            Interval::new(self.domain.x.lo.clone(), mx.clone()),
            Interval::new(mx, self.domain.x.hi.clone()),
        ];
        let ys = [
            Interval::new(self.domain.y.lo.clone(), my.clone()),
            Interval::new(my, self.domain.y.hi.clone()),
        ];
        let mk = |c: Vec<Vec<Rational>>, x: &Interval, y: &Interval| BernsteinPatch {
            domain: IntervalBox::new(x.clone(), y.clone()),
            coeffs: c,
        };
        [
            mk(ll, &xs[0], &ys[0]),
            mk(lu, &xs[0], &ys[1]),
            mk(rl, &xs[1], &ys[0]),
            mk(ru, &xs[1], &ys[1]),
        ]
    }
}

/// Sign of `p` on the whole box, by Bernstein subdivision up to `depth` levels.
pub fn certified_sign(p: &SparseBivariate, domain: &IntervalBox, depth: u32) -> Option<i32> {
    cover(p, domain, &[], 0, depth, usize::MAX).ok().map(|c| c.sign)
}

/// A quadtree of boxes on which `p` has one strict sign, covering `domain`
/// minus the closed `holes`.
pub struct Cover {
    pub sign: i32,
    pub leaves: Vec<IntervalBox>,
}

fn inside(b: &IntervalBox, e: &IntervalBox) -> bool {
    e.x.lo <= b.x.lo && b.x.hi <= e.x.hi && e.y.lo <= b.y.lo && b.y.hi <= e.y.hi
}

/// Why a cover could not be built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverFailure {
    /// Some box at maximal depth has no definite sign.
    Depth(IntervalBox),
    /// Boxes of both signs were found.
    SignChange,
    TooManyBoxes,
}

/// Covers `domain \ holes` by boxes of sign `sign` (or any single sign when `sign == 0`).
pub fn cover(
    p: &SparseBivariate,
    domain: &IntervalBox,
    holes: &[IntervalBox],
    mut sign: i32,
    depth: u32,
    max_boxes: usize,
) -> Result<Cover, CoverFailure> {
    let mut leaves = Vec::new();
    let mut stack = vec![(BernsteinPatch::new(p, domain), 0u32)];
    let mut visited = 0usize;
    while let Some((patch, d)) = stack.pop() {
        visited += 1;
        if visited > max_boxes {
            return Err(CoverFailure::TooManyBoxes);
        }
        if holes.iter().any(|h| inside(&patch.domain, h)) {
            continue;
        }
        match patch.sign() {
            0 if d < depth => stack.extend(patch.split4().into_iter().map(|c| (c, d + 1))),
            0 => return Err(CoverFailure::Depth(patch.domain)),
            s if sign == 0 || s == sign => {
                sign = s;
                leaves.push(patch.domain);
            }
            _ => return Err(CoverFailure::SignChange),
        }
    }
    Ok(Cover { sign, leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::eval_interval;
    use crate::rational::frac;

    fn unit() -> IntervalBox {
        IntervalBox::new(Interval::new(int(0), int(1)), Interval::new(int(0), int(1)))
    }

    #[test]
    fn vertex_coefficients_are_values() {
        let p = SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 1), -3), ((2, 1), 1), ((1, 2), 1)]);
        let b = BernsteinPatch::new(&p, &unit());
        let n = b.coeffs.len() - 1;
        let m = b.coeffs[0].len() - 1;
        assert_eq!(b.coeffs[0][0], p.eval(&int(0), &int(0)));
        assert_eq!(b.coeffs[n][m], p.eval(&int(1), &int(1)));
        assert_eq!(b.coeffs[n][0], p.eval(&int(1), &int(0)));
    }

    #[test]
    fn enclosure_contains_range() {
        let p = SparseBivariate::from_int_terms(&[((2, 0), 1), ((0, 2), 1), ((1, 1), -1), ((0, 0), -1)]);
        let b = BernsteinPatch::new(&p, &unit());
        let e = b.enclosure();
        for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            assert!(e.contains(&p.eval(&int(x), &int(y))));
        }
        assert!(eval_interval(&p, &unit()).lo <= e.lo);
    }

    #[test]
    fn split_matches_direct_conversion() {
        let p = SparseBivariate::from_int_terms(&[((3, 0), 2), ((1, 2), -1), ((0, 1), 5)]);
        let parts = BernsteinPatch::new(&p, &unit()).split4();
        for part in parts {
            let direct = BernsteinPatch::new(&p, &part.domain);
            assert_eq!(direct.coeffs, part.coeffs);
        }
    }

    #[test]
    fn positive_away_from_node() {
        let p = SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 1), -3), ((2, 1), 1), ((1, 2), 1)]);
        let b = IntervalBox::new(Interval::new(frac(3, 2), int(2)), Interval::new(int(0), int(2)));
        assert_eq!(certified_sign(&p, &b, 10), Some(1));
        let around = IntervalBox::new(Interval::new(frac(1, 2), int(2)), Interval::new(frac(1, 2), int(2)));
        assert_eq!(certified_sign(&p, &around, 6), None);
    }
}
