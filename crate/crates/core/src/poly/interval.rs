use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::SparseBivariate;
use crate::rational::{self, Rational};

/// Closed interval with rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rational::serde_rational")]
    pub lo: Rational,
    #[serde(with = "rational::serde_rational")]
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(&self, o: &Self) -> Self {
        Self {
            lo: self.lo.clone().min(o.lo.clone()),
            hi: self.hi.clone().max(o.hi.clone()),
        }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }
}

/// Axis-parallel box with rational corners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalBox {
    pub x: Interval,
    pub y: Interval,
}

impl IntervalBox {
    pub fn new(x: Interval, y: Interval) -> Self {
        Self { x, y }
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.x.contains(x) && self.y.contains(y)
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.x.overlaps(&o.x) && self.y.overlaps(&o.y)
    }

    /// Splits along the longer side.
    pub fn bisect(&self) -> (Self, Self) {
        if self.x.width() >= self.y.width() {
            let m = self.x.mid();
            (
                Self::new(Interval::new(self.x.lo.clone(), m.clone()), self.y.clone()),
                Self::new(Interval::new(m, self.x.hi.clone()), self.y.clone()),
            )
        } else {
            let m = self.y.mid();
            (
                Self::new(self.x.clone(), Interval::new(self.y.lo.clone(), m.clone())),
                Self::new(self.x.clone(), Interval::new(m, self.y.hi.clone())),
            )
        }
    }
}

fn horner(coeffs: &[Interval], v: &Interval) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for c in coeffs.iter().rev() {
        acc = &(&acc * v) + c;
    }
    acc
}

/// Enclosure of the range of `p` over `b`: Horner in `x` for every power
/// of `y`, then Horner in `y`.
pub fn eval_interval(p: &SparseBivariate, b: &IntervalBox) -> Interval {
    if p.is_zero() {
        return Interval::point(Rational::zero());
    }
    let dy = p.degree_y() as usize;
    let dx = p.degree_x() as usize;
    let mut rows = vec![vec![Interval::point(Rational::zero()); dx + 1]; dy + 1];
    for (e, a) in p.terms() {
        rows[e.j as usize][e.i as usize] = Interval::point(a.clone());
    }
    let ycoeffs: Vec<Interval> = rows.iter().map(|r| horner(r, &b.x)).collect();
    horner(&ycoeffs, &b.y)
}

/// Unit interval `[-1, 1]`.
pub fn symmetric_unit() -> Interval {
    Interval::new(-Rational::one(), Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn unit() -> Interval {
        Interval::new(int(0), int(1))
    }

    #[test]
    fn enclosure_of_x() {
        let b = IntervalBox::new(unit(), unit());
        assert_eq!(eval_interval(&SparseBivariate::x(), &b), unit());
    }

    #[test]
    fn enclosure_of_sum_of_squares() {
        let p = SparseBivariate::from_int_terms(&[((2, 0), 1), ((0, 2), 1)]);
        let r = eval_interval(&p, &IntervalBox::new(symmetric_unit(), symmetric_unit()));
        assert!(r.lo <= int(0) && r.hi >= int(2));
    }

    #[test]
    fn enclosure_near_block_node() {
        let p = SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 1), -3), ((2, 1), 1), ((1, 2), 1)]);
        let i = Interval::new(frac(9, 10), frac(11, 10));
        assert!(eval_interval(&p, &IntervalBox::new(i.clone(), i)).contains_zero());
    }
}
