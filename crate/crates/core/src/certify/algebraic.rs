//! Real algebraic numbers given by a square-free integer polynomial and an
//! isolating interval.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::poly::univariate::{bisect_root, isolate_roots, rational_value, RealRoot, UPoly};
use crate::poly::Interval;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Algebraic {
    poly: UPoly,
    root: RealRoot,
}

impl Algebraic {
    pub fn rational(q: Rational) -> Self {
        let poly = UPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        Self {
            poly,
            root: RealRoot { lo: q.clone(), hi: q },
        }
    }

    /// The root of `poly` isolated by `root`; rational roots become exact.
    pub fn from_root(poly: &UPoly, root: RealRoot) -> Self {
        let poly = poly.squarefree();
        match rational_value(&poly, &root) {
            Some(q) => Self::rational(q),
            None => Self { poly, root },
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.root.is_exact().then_some(&self.root.lo)
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.root.lo.clone(), self.root.hi.clone())
    }

    /// Shrinks the enclosure below `eps`.
    pub fn refine(&mut self, eps: &Rational) {
        while !self.root.is_exact() && self.root.width() > *eps {
            self.root = bisect_root(&self.poly, &self.root);
        }
    }

    /// Rational point of the enclosure, the value itself when exact.
    pub fn approx(&self) -> Rational {
        if self.root.is_exact() {
            self.root.lo.clone()
        } else {
            (&self.root.lo + &self.root.hi) / Rational::from_integer(2.into())
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(q);
        }
        // irrational: q is never the value, so bisection separates them
        let mut r = self.root.clone();
        loop {
            if *q <= r.lo {
                return Ordering::Greater;
            }
            if *q >= r.hi {
                return Ordering::Less;
            }
            r = bisect_root(&self.poly, &r);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|v| v.is_zero())
    }

    pub fn same(&self, o: &Algebraic) -> bool {
        match (self.as_rational(), o.as_rational()) {
            (Some(a), Some(b)) => a == b,
            (Some(_), None) | (None, Some(_)) => false,
            (None, None) => {
                let lo = (&self.root.lo).max(&o.root.lo).clone();
                let hi = (&self.root.hi).min(&o.root.hi).clone();
                if lo >= hi {
                    return false;
                }
                let g = self.poly.gcd(&o.poly);
                g.degree() > 0 && isolate_roots(&g, &lo, &hi).iter().any(|r| !(r.is_exact() && (r.lo == lo || r.lo == hi)))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.approx().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
    }

    pub fn abs_lt_one(&self) -> bool {
        self.cmp_rational(&Rational::one()) == Ordering::Less && self.cmp_rational(&-Rational::one()) == Ordering::Greater
    }

    pub fn abs_enclosure_lo(&self) -> Rational {
        let i = self.interval();
        if i.contains_zero() {
            Rational::zero()
        } else {
            i.lo.abs().min(i.hi.abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::univariate::isolate_roots;
    use crate::rational::{frac, int};

    fn sqrt2() -> Algebraic {
        let p = UPoly::from_i64(&[-2, 0, 1]);
        let r = isolate_roots(&p, &int(0), &int(2)).remove(0);
        Algebraic::from_root(&p, r)
    }

    #[test]
    fn rational_roots_become_exact() {
        let p = UPoly::from_i64(&[-1, 0, 4]);
        let r = isolate_roots(&p, &int(0), &int(1)).remove(0);
        assert_eq!(Algebraic::from_root(&p, r).as_rational(), Some(&frac(1, 2)));
    }

    #[test]
    fn comparisons() {
        let a = sqrt2();
        assert!(a.as_rational().is_none());
        assert_eq!(a.cmp_rational(&frac(141, 100)), Ordering::Greater);
        assert_eq!(a.cmp_rational(&frac(142, 100)), Ordering::Less);
        assert!(!a.abs_lt_one());
    }

    #[test]
    fn equality_across_polynomials() {
        let a = sqrt2();
        let q = UPoly::from_i64(&[2, 0, -3, 0, 1]); // (x²−1)(x²−2)
        let r = isolate_roots(&q, &frac(13, 10), &int(2)).remove(0);
        assert!(a.same(&Algebraic::from_root(&q, r)));
        let s = UPoly::from_i64(&[-3, 0, 1]);
        let r3 = isolate_roots(&s, &int(1), &int(2)).remove(0);
        assert!(!a.same(&Algebraic::from_root(&s, r3)));
    }
}
