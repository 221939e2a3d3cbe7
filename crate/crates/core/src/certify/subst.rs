//! Substitutions `x ↦ P(u)`, `y ↦ Q(v)` of univariate polynomials.

use num_traits::Zero;

use crate::geom::LatticePoint;
use crate::poly::SparseBivariate;
use crate::rational::Rational;

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn powers(p: &[Rational], n: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::from_integer(1.into())]];
    for k in 0..n {
        let next = mul(&out[k], p);
        out.push(next);
    }
    out
}

/// `p(P(u), Q(v))` with `P`, `Q` given by coefficients, lowest first.
pub fn compose(p: &SparseBivariate, px: &[Rational], py: &[Rational]) -> SparseBivariate {
    let xp = powers(px, p.degree_x().max(0) as usize);
    let yp = powers(py, p.degree_y().max(0) as usize);
    let mut out = SparseBivariate::zero();
    for (e, c) in p.terms() {
        let (a, b) = (&xp[e.i as usize], &yp[e.j as usize]);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = c * x;
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out.add_term(LatticePoint::new(i as i64, j as i64), &cx * y);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn shift_and_square() {
        let p = SparseBivariate::from_int_terms(&[((1, 0), 1), ((0, 1), 1)]);
        // x ↦ 1 + u, y ↦ v²
        let q = compose(&p, &[int(1), int(1)], &[int(0), int(0), int(1)]);
        assert_eq!(q, SparseBivariate::from_int_terms(&[((0, 0), 1), ((1, 0), 1), ((0, 2), 1)]));
    }
}
