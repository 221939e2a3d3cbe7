use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sparse::{PolyJson, TermJson};
use super::SparseBivariate;
use crate::error::{Error, Result};
use crate::geom::LatticePoint;
use crate::rational::{self, Rational};

/// A coefficient together with the exponent of `t` it is multiplied by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViroTerm {
    pub coeff: Rational,
    pub lift: Rational,
}

/// `Σ a_ij t^{ν(i,j)} x^i y^j`, a one-parameter family of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ViroPolynomial {
    terms: BTreeMap<LatticePoint, ViroTerm>,
}

impl ViroPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a term; zero coefficients are skipped.
    pub fn insert(&mut self, e: LatticePoint, coeff: Rational, lift: Rational) {
        if coeff.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, ViroTerm { coeff, lift });
        }
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, ViroTerm> {
        &self.terms
    }

    pub fn get(&self, e: LatticePoint) -> Option<&ViroTerm> {
        self.terms.get(&e)
    }

    /// The `t`-free polynomial `Σ a_ij x^i y^j`.
    pub fn underlying(&self) -> SparseBivariate {
        SparseBivariate::from_terms(self.terms.iter().map(|(e, t)| (*e, t.coeff.clone())))
    }

    /// Least common denominator of all lifts.
    pub fn lift_denominator(&self) -> BigInt {
        rational::common_denominator(self.terms.values().map(|t| &t.lift))
    }

    /// Replaces `t` by `t0`. Fractional lifts with common denominator `d`
    /// require `t0` to be a `d`-th power of a rational.
    pub fn specialize_t(&self, t0: &Rational) -> Result<SparseBivariate> {
        if !t0.is_positive() {
            return Err(Error::NonPositiveT(rational::to_string(t0)));
        }
        let d = self.lift_denominator();
        let d32 = d
            .to_u32()
            .ok_or_else(|| Error::Unsupported(format!("lift denominator {d} too large")))?;
        let root = if d.is_one() {
            t0.clone()
        } else {
            rational::rational_root(t0, d32).ok_or_else(|| Error::NotAPower {
                t: rational::to_string(t0),
                degree: d32,
            })?
        };
        let mut cache: BTreeMap<i64, Rational> = BTreeMap::new();
        let mut out = SparseBivariate::zero();
        for (e, term) in &self.terms {
            let exp = (&term.lift * Rational::from_integer(d.clone())).to_integer();
            let exp = exp
                .to_i64()
                .ok_or_else(|| Error::Unsupported(format!("lift exponent {exp} too large")))?;
            let factor = cache.entry(exp).or_insert_with(|| rational::pow(&root, exp)).clone();
            out.add_term(*e, &term.coeff * factor);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, t)| TermJson {
                e: *e,
                c: rational::to_string(&t.coeff),
                lift: Some(rational::to_string(&t.lift)),
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    /// Parses the polynomial JSON format; a missing `lift` means lift 0.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let mut out = Self::new();
        for t in doc.terms {
            let lift = match &t.lift {
                Some(s) => rational::parse(s)?,
                None => Rational::zero(),
            };
            out.insert(t.e, rational::parse(&t.c)?, lift);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn lp(i: i64, j: i64) -> LatticePoint {
        LatticePoint::new(i, j)
    }

    #[test]
    fn direct_substitution() {
        let mut v = ViroPolynomial::new();
        v.insert(lp(0, 0), int(1), int(0));
        v.insert(lp(1, 1), int(-3), int(1));
        let p = v.specialize_t(&frac(1, 4)).unwrap();
        assert_eq!(p, SparseBivariate::from_terms([(lp(0, 0), int(1)), (lp(1, 1), frac(-3, 4))]));
    }

    #[test]
    fn zero_lifts_are_identity() {
        let mut v = ViroPolynomial::new();
        v.insert(lp(2, 1), int(5), int(0));
        v.insert(lp(0, 3), frac(-1, 7), int(0));
        assert_eq!(v.specialize_t(&frac(3, 11)).unwrap(), v.underlying());
    }

    #[test]
    fn fractional_lifts_need_powers() {
        let mut v = ViroPolynomial::new();
        v.insert(lp(1, 0), int(1), frac(1, 2));
        assert_eq!(v.specialize_t(&frac(1, 9)).unwrap().coeff(lp(1, 0)), frac(1, 3));
        assert!(matches!(v.specialize_t(&frac(1, 2)), Err(Error::NotAPower { degree: 2, .. })));
        assert!(matches!(v.specialize_t(&int(0)), Err(Error::NonPositiveT(_))));
    }

    #[test]
    fn json_keeps_lifts() {
        let mut v = ViroPolynomial::new();
        v.insert(lp(1, 2), frac(2, 3), frac(-5, 2));
        let j = v.to_json();
        assert_eq!(j["terms"][0]["lift"], "-5/2");
        assert_eq!(ViroPolynomial::from_json(&j).unwrap(), v);
    }
}
