use serde::Serialize;

use crate::bounds::{signed_upper, SurfaceModel, WeightedCount};
use crate::error::{Error, Result};

/// Intersections of the extra oval with the sections `B₀` and `B_∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OvalData {
    /// Multiplicity of the single point `p_∞`.
    pub b_infinity_multiplicity: i64,
    /// Multiplicity of the single point `p₀`.
    pub b0_multiplicity: i64,
    /// After perturbation: simple tangencies with `B_∞`.
    pub b_infinity_tangencies: i64,
    /// After perturbation: simple tangencies with `B₀`.
    pub b0_tangencies: i64,
}

/// Solitary nodes of the rational bigonal curve `C_{n,b,q} ⊂ Σ_{2n}` of
/// bidegree `(2, 2b)` and their split between the halves `ℝΣ_{2n,±}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BigonalCountReport {
    pub n: i64,
    pub b: i64,
    pub q: i64,
    pub solitary_total: i64,
    pub plus_half: i64,
    pub minus_half: i64,
    pub oval: OvalData,
}

impl BigonalCountReport {
    /// Self-intersection of the class `2B₀ + 2bF` on `Σ_{2n}`.
    pub fn e2(&self) -> i64 {
        8 * self.n + 8 * self.b
    }

    /// Every node has weight 1; both halves are annuli.
    pub fn weighted(&self) -> WeightedCount {
        WeightedCount { plus: self.plus_half, minus: self.minus_half, chi_plus: 0, chi_minus: 0 }
    }

    /// The signed inequality for the double covering ramified over the curve.
    pub fn satisfies_signed_bound(&self) -> bool {
        let model = SurfaceModel::hirzebruch(2 * self.n, 0).expect("n > 0");
        signed_upper(&self.weighted(), self.e2(), 0, model.t21)
    }
}

pub fn bigonal_counts(n: i64, b: i64, q: i64) -> Result<BigonalCountReport> {
    if n <= 0 || b < 0 || q < 0 || q > n + b - 1 {
        return Err(Error::Parameter(format!("need n > 0, b ≥ 0, 0 ≤ q ≤ n + b − 1; got n={n}, b={b}, q={q}")));
    }
    Ok(BigonalCountReport {
        n,
        b,
        q,
        solitary_total: 2 * n + 2 * b - 1,
        plus_half: n + b + q,
        minus_half: n + b - q - 1,
        oval: OvalData {
            b_infinity_multiplicity: 2 * b,
            b0_multiplicity: 4 * n + 2 * b - 2 * q,
            b_infinity_tangencies: b,
            b0_tangencies: 2 * n + b - q,
        },
    })
}

/// Real points of the double covering built from `𝒟_n(𝔤)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverAudit {
    /// Each of the `2n` solitary nodes lifts to two.
    pub doubled_nodes: i64,
    /// The `n` tangencies with `B₀` on the smooth component.
    pub tangency_lifts: i64,
    /// One tangency on each of the `𝔤 − 1` extra components.
    pub extra_tangency_lifts: i64,
}

impl CoverAudit {
    pub fn total(&self) -> i64 {
        self.doubled_nodes + self.tangency_lifts + self.extra_tangency_lifts
    }
}

/// `5n − 1 + 𝔤`, with its decomposition.
pub fn cover_counts(n: i64, genus: i64) -> Result<CoverAudit> {
    if genus < 1 || n < genus - 1 || n < 1 {
        return Err(Error::Parameter(format!("need n ≥ 𝔤 − 1 ≥ 0 and n ≥ 1; got n={n}, 𝔤={genus}")));
    }
    Ok(CoverAudit { doubled_nodes: 2 * (2 * n), tangency_lifts: n, extra_tangency_lifts: genus - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_parameters() {
        let r = bigonal_counts(1, 0, 0).unwrap();
        assert_eq!((r.solitary_total, r.plus_half, r.minus_half), (1, 1, 0));
        let r = bigonal_counts(2, 1, 1).unwrap();
        assert_eq!((r.solitary_total, r.plus_half, r.minus_half), (5, 4, 1));
        assert_eq!(bigonal_counts(1, 1, 1).unwrap().oval.b0_tangencies, 2);
        assert!(bigonal_counts(1, 0, 1).is_err());
    }

    #[test]
    fn signed_bound_on_small_parameters() {
        for n in 1..=5 {
            for b in 0..=5 {
                for q in 0..=(n + b - 1).min(5) {
                    let r = bigonal_counts(n, b, q).unwrap();
                    assert_eq!(r.solitary_total, r.plus_half + r.minus_half);
                    assert!(r.satisfies_signed_bound(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn cover_totals() {
        assert_eq!(cover_counts(9, 1).unwrap().total(), 45);
        assert_eq!(cover_counts(1, 1).unwrap().total(), 5);
        for n in 1..=20 {
            for g in 1..=(n + 1).min(20) {
                assert_eq!(cover_counts(n, g).unwrap().total(), 5 * n - 1 + g);
            }
        }
        assert!(cover_counts(1, 3).is_err());
    }
}
