use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{LatticePoint, LatticePolygon};
use crate::rational::{self, int, Rational};

/// Sparse polynomial in `x, y` with exact rational coefficients; no zero
/// coefficient is ever stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseBivariate {
    terms: BTreeMap<LatticePoint, Rational>,
}

impl SparseBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(LatticePoint::new(0, 0), c)
    }

    pub fn monomial(e: LatticePoint, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(LatticePoint::new(1, 0), Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(LatticePoint::new(0, 1), Rational::one())
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (LatticePoint, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Shorthand for integer coefficients.
    pub fn from_int_terms(terms: &[((i64, i64), i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&((i, j), c)| (LatticePoint::new(i, j), int(c))))
    }

    pub fn add_term(&mut self, e: LatticePoint, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, Rational> {
        &self.terms
    }

    pub fn coeff(&self, e: LatticePoint) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> i64 {
        self.terms.keys().map(|e| e.i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> i64 {
        self.terms.keys().map(|e| e.j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^e.i y^e.j`.
    pub fn shift(&self, e: LatticePoint) -> Self {
        Self {
            terms: self.terms.iter().map(|(f, a)| (f.add(e), a.clone())).collect(),
        }
    }

    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.i != 0)
                .map(|(e, a)| (LatticePoint::new(e.i - 1, e.j), a * int(e.i))),
        )
    }

    pub fn partial_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.j != 0)
                .map(|(e, a)| (LatticePoint::new(e.i, e.j - 1), a * int(e.j))),
        )
    }

    /// Convex hull of the exponents of nonzero terms.
    pub fn newton_polygon(&self) -> Result<LatticePolygon> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        LatticePolygon::hull(self.terms.keys().copied())
    }

    /// `p(x², y²)`.
    pub fn substitute_squares(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, a)| (e.scale(2), a.clone())).collect(),
        }
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut xs = vec![Rational::one()];
        let mut ys = vec![Rational::one()];
        let mut acc = Rational::zero();
        for (e, a) in &self.terms {
            while xs.len() <= e.i as usize {
                let next = xs.last().unwrap() * x;
                xs.push(next);
            }
            while ys.len() <= e.j as usize {
                let next = ys.last().unwrap() * y;
                ys.push(next);
            }
            acc += a * &xs[e.i as usize] * &ys[e.j as usize];
        }
        acc
    }

    /// Restriction `p(x, c)` as coefficients in `x`, lowest degree first.
    pub fn restrict_y(&self, c: &Rational) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree_x() as usize + 1];
        for (e, a) in &self.terms {
            out[e.i as usize] += a * rational::pow(c, e.j);
        }
        out
    }

    /// Restriction `p(c, y)` as coefficients in `y`, lowest degree first.
    pub fn restrict_x(&self, c: &Rational) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree_y() as usize + 1];
        for (e, a) in &self.terms {
            out[e.j as usize] += a * rational::pow(c, e.i);
        }
        out
    }

    /// Exchanges `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, a)| (LatticePoint::new(e.j, e.i), a.clone())).collect(),
        }
    }

    /// `p(σx·x, σy·y)` for signs `σ = ±1`.
    pub fn reflect(&self, neg_x: bool, neg_y: bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    let odd = (neg_x && e.i % 2 != 0) != (neg_y && e.j % 2 != 0);
                    (*e, if odd { -a } else { a.clone() })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                e: *e,
                c: rational::to_string(c),
                lift: None,
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let mut p = Self::zero();
        for t in doc.terms {
            p.add_term(t.e, rational::parse(&t.c)?);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub e: LatticePoint,
    pub c: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl fmt::Debug for SparseBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparseBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, a)) in self.terms.iter().enumerate() {
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else { "+" };
            if k == 0 {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mono = match (e.i, e.j) {
                (0, 0) => String::new(),
                _ => {
                    let pv = |v: &str, n: i64| match n {
                        0 => None,
                        1 => Some(v.to_string()),
                        _ => Some(format!("{v}^{n}")),
                    };
                    [pv("x", e.i), pv("y", e.j)].into_iter().flatten().collect::<Vec<_>>().join("*")
                }
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", rational::to_string(&mag))?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{mono}", rational::to_string(&mag))?,
            }
        }
        Ok(())
    }
}

impl Add for &SparseBivariate {
    type Output = SparseBivariate;
    fn add(self, o: &SparseBivariate) -> SparseBivariate {
        let mut p = self.clone();
        for (e, a) in &o.terms {
            p.add_term(*e, a.clone());
        }
        p
    }
}

impl Sub for &SparseBivariate {
    type Output = SparseBivariate;
    fn sub(self, o: &SparseBivariate) -> SparseBivariate {
        let mut p = self.clone();
        for (e, a) in &o.terms {
            p.add_term(*e, -a);
        }
        p
    }
}

impl Neg for &SparseBivariate {
    type Output = SparseBivariate;
    fn neg(self) -> SparseBivariate {
        SparseBivariate {
            terms: self.terms.iter().map(|(e, a)| (*e, -a)).collect(),
        }
    }
}

impl Mul for &SparseBivariate {
    type Output = SparseBivariate;
    fn mul(self, o: &SparseBivariate) -> SparseBivariate {
        let mut p = SparseBivariate::zero();
        for (e, a) in &self.terms {
            for (f, b) in &o.terms {
                p.add_term(e.add(*f), a * b);
            }
        }
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SparseBivariate {
            type Output = SparseBivariate;
            fn $m(self, o: SparseBivariate) -> SparseBivariate {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparseBivariate {
    type Output = SparseBivariate;
    fn neg(self) -> SparseBivariate {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn cubic() -> SparseBivariate {
        SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 1), -3), ((2, 1), 1), ((1, 2), 1)])
    }

    #[test]
    fn derivative_of_cubic_block() {
        let expected = SparseBivariate::from_int_terms(&[((0, 1), -3), ((1, 1), 2), ((0, 2), 1)]);
        assert_eq!(cubic().partial_x(), expected);
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = (SparseBivariate::x(), SparseBivariate::y());
        let prod = (&x + &y) * (&x - &y);
        assert_eq!(prod, SparseBivariate::from_int_terms(&[((2, 0), 1), ((0, 2), -1)]));
        assert!((&prod + &(-&prod)).is_zero());
    }

    #[test]
    fn newton_polygons() {
        let t = cubic().newton_polygon().unwrap();
        assert_eq!(t.vertices().len(), 3);
        assert_eq!(t.lattice_area(), 3);
        let r = SparseBivariate::from_int_terms(&[((2, 2), 1), ((1, 1), -3), ((1, 0), 1), ((0, 1), 1)]);
        let rp = r.newton_polygon().unwrap();
        assert!(rp.contains_in_interior(LatticePoint::new(1, 1)));
        assert!(SparseBivariate::constant(int(5)).newton_polygon().unwrap().is_degenerate());
        assert_eq!(SparseBivariate::zero().newton_polygon(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squares() {
        let s = cubic().substitute_squares();
        assert_eq!(s, SparseBivariate::from_int_terms(&[((0, 0), 1), ((2, 2), -3), ((4, 2), 1), ((2, 4), 1)]));
        assert!(SparseBivariate::zero().substitute_squares().is_zero());
    }

    #[test]
    fn evaluation_and_display() {
        assert_eq!(cubic().eval(&int(1), &int(1)), int(0));
        assert_eq!(cubic().eval(&frac(1, 2), &int(2)), int(1) - int(3) + int(1) / int(2) + int(2));
        assert_eq!(cubic().to_string(), "1 - 3*x*y + x*y^2 + x^2*y");
    }

    #[test]
    fn json_round_trip() {
        let p = cubic().scale(&frac(-2, 3));
        assert_eq!(SparseBivariate::from_json(&p.to_json()).unwrap(), p);
    }
}
