//! Closed-form upper and lower bounds on the number of real points of a
//! finite real algebraic curve, with the surface invariants as inputs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The surfaces for which bounds are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceKind {
    ProjectivePlane,
    /// `Σ_n` over a base curve of genus `base_genus`.
    Hirzebruch { n: i64, base_genus: i64 },
    QuadricEllipsoid,
}

/// Topological invariants entering the bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub kind: SurfaceKind,
    pub h11: i64,
    /// Todd-type coefficient `T_{2,1}`.
    pub t21: i64,
    /// Euler characteristic of the real part.
    pub chi_rx: i64,
}

impl SurfaceModel {
    pub fn projective_plane() -> Self {
        Self {
            kind: SurfaceKind::ProjectivePlane,
            h11: 1,
            t21: -1,
            chi_rx: 1,
        }
    }

    /// Ruled surface `Σ_n` over a genus-`base_genus` curve with the standard
    /// real structure; the real part is a union of tori or Klein bottles, so `χ = 0`.
    pub fn hirzebruch(n: i64, base_genus: i64) -> Result<Self> {
        Self::hirzebruch_with_chi(n, base_genus, 0)
    }

    /// As [`SurfaceModel::hirzebruch`] with an explicit `χ(ℝX)` for non-maximal bases.
    pub fn hirzebruch_with_chi(n: i64, base_genus: i64, chi_rx: i64) -> Result<Self> {
        if n < 0 || base_genus < 0 {
            return Err(Error::Parameter(format!("Σ_n needs n >= 0 and base genus >= 0, got n={n}, genus={base_genus}")));
        }
        Ok(Self {
            kind: SurfaceKind::Hirzebruch { n, base_genus },
            h11: 2,
            t21: 2 * base_genus - 2,
            chi_rx,
        })
    }

    pub fn quadric_ellipsoid() -> Self {
        Self {
            kind: SurfaceKind::QuadricEllipsoid,
            h11: 2,
            t21: -2,
            chi_rx: 2,
        }
    }
}

/// A real curve class `[C] = 2e` together with the genus of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub surface: SurfaceModel,
    /// Coordinates of `e`: `k` on ℂP², `(a, b)` on `Σ_n`, `(k, k)` on the ellipsoid.
    pub half_class: Vec<i64>,
    /// Genus; `-1` encodes a pair of complex conjugate components.
    pub genus: i64,
}

fn check_genus(g: i64) -> Result<()> {
    if g < -1 {
        return Err(Error::Parameter(format!("genus {g} is below -1")));
    }
    Ok(())
}

impl CurveClass {
    /// Curve of degree `2k` in ℂP².
    pub fn plane(k: i64, genus: i64) -> Result<Self> {
        check_genus(genus)?;
        if k < 1 {
            return Err(Error::Parameter(format!("half degree k = {k} must be at least 1")));
        }
        Ok(Self {
            surface: SurfaceModel::projective_plane(),
            half_class: vec![k],
            genus,
        })
    }

    /// Curve in the class `2a·B₀ + 2b·F` of `Σ_n` over a genus-`base_genus` base.
    pub fn ruled(n: i64, base_genus: i64, a: i64, b: i64, genus: i64) -> Result<Self> {
        check_genus(genus)?;
        Ok(Self {
            surface: SurfaceModel::hirzebruch(n, base_genus)?,
            half_class: vec![a, b],
            genus,
        })
    }

    /// Curve of bidegree `(2k, 2k)` in the ellipsoid.
    pub fn ellipsoid(k: i64, genus: i64) -> Result<Self> {
        check_genus(genus)?;
        Ok(Self {
            surface: SurfaceModel::quadric_ellipsoid(),
            half_class: vec![k, k],
            genus,
        })
    }

    /// Self-intersection `e²`.
    pub fn e2(&self) -> i64 {
        let e = &self.half_class;
        match self.surface.kind {
            SurfaceKind::ProjectivePlane => e[0] * e[0],
            SurfaceKind::Hirzebruch { n, .. } => n * e[0] * e[0] + 2 * e[0] * e[1],
            SurfaceKind::QuadricEllipsoid => 2 * e[0] * e[1],
        }
    }

    /// `e · c₁(X)`; on `Σ_n` over a genus-𝔤 base, `c₁ = 2B₀ + (2 − 2𝔤 − n)F`.
    pub fn e_dot_c1(&self) -> i64 {
        let e = &self.half_class;
        match self.surface.kind {
            SurfaceKind::ProjectivePlane => 3 * e[0],
            SurfaceKind::Hirzebruch { n, base_genus } => 2 * n * e[0] + (2 - 2 * base_genus - n) * e[0] + 2 * e[1],
            SurfaceKind::QuadricEllipsoid => 2 * (e[0] + e[1]),
        }
    }

    /// Genus-dependent upper bound for this class.
    pub fn general_upper(&self) -> i64 {
        general_upper(self.e2(), self.genus, self.surface.t21, self.surface.chi_rx)
    }

    /// Genus-free upper bound for this class.
    pub fn pet_corollary_upper(&self) -> i64 {
        pet_corollary_upper(self.e2(), self.e_dot_c1(), self.surface.t21, self.surface.chi_rx)
    }
}

/// Weighted counts of real points on the two halves `ℝX₊`, `ℝX₋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedCount {
    pub plus: i64,
    pub minus: i64,
    pub chi_plus: i64,
    pub chi_minus: i64,
}

/// `(σ⁻_inv, σ⁻_skew) = ((h¹¹ + χ)/2 − 1, (h¹¹ − χ)/2)`.
pub fn inertia_indices(h11: i64, chi_rx: i64) -> Result<(i64, i64)> {
    if (h11 + chi_rx).rem_euclid(2) != 0 {
        return Err(Error::Parameter(format!("h11 + χ = {} is odd", h11 + chi_rx)));
    }
    Ok(((h11 + chi_rx) / 2 - 1, (h11 - chi_rx) / 2))
}

/// Admissible Euler characteristics of the real part: `[2 − h¹¹, h¹¹]`.
pub fn comessatti_range(h11: i64) -> Result<(i64, i64)> {
    if h11 < 1 {
        return Err(Error::Parameter(format!("h11 = {h11} must be positive")));
    }
    Ok((2 - h11, h11))
}

/// `3k(k−1)/2 + 1` for curves of degree `2k` in ℂP².
pub fn petrovsky_upper(k: i64) -> i64 {
    3 * k * (k - 1) / 2 + 1
}

/// `k² + g + 1` for curves of degree `2k` and genus `g` in ℂP².
pub fn genus_upper_cp2(k: i64, g: i64) -> Result<i64> {
    check_genus(g)?;
    Ok(k * k + g + 1)
}

/// `e² + g − T₂₁ + χ(ℝX) − 1`.
pub fn general_upper(e2: i64, g: i64, t21: i64, chi_rx: i64) -> i64 {
    e2 + g - t21 + chi_rx - 1
}

/// `⌊(3e² − e·c₁ − T₂₁ + χ(ℝX)) / 2⌋`.
pub fn pet_corollary_upper(e2: i64, e_dot_c1: i64, t21: i64, chi_rx: i64) -> i64 {
    (3 * e2 - e_dot_c1 - t21 + chi_rx).div_euclid(2)
}

/// Whether the floor in [`pet_corollary_upper`] is exact.
pub fn pet_corollary_is_integral(e2: i64, e_dot_c1: i64, t21: i64, chi_rx: i64) -> bool {
    (3 * e2 - e_dot_c1 - t21 + chi_rx).rem_euclid(2) == 0
}

/// Signed inequality `wt₊ − wt₋ ≤ e² + g − T₂₁ + χ₊ − χ₋ − 1`.
pub fn signed_upper(w: &WeightedCount, e2: i64, g: i64, t21: i64) -> bool {
    w.plus - w.minus <= e2 + g - t21 + w.chi_plus - w.chi_minus - 1
}

/// Whether `(a, b)` lies in the range `a > 0, b > 0` of the ruled-surface theorem.
pub fn hirzebruch_within_hypothesis(a: i64, b: i64) -> bool {
    a > 0 && b > 0
}

fn check_ruled(n: i64, a: i64, b: i64, base_genus: i64) -> Result<()> {
    if n < 0 || a < 1 || b < 0 || base_genus < 0 {
        return Err(Error::Parameter(format!(
            "ruled surface bound needs n >= 0, a >= 1, b >= 0, base genus >= 0; got n={n}, a={a}, b={b}, genus={base_genus}"
        )));
    }
    Ok(())
}

/// `½na(3a − 1) + 3ab − (a + b) + 1 + (a − 1)𝔤` for class `2aB₀ + 2bF` in `Σ_n`.
pub fn hirzebruch_upper(n: i64, a: i64, b: i64, base_genus: i64) -> Result<i64> {
    check_ruled(n, a, b, base_genus)?;
    Ok(n * a * (3 * a - 1) / 2 + 3 * a * b - (a + b) + 1 + (a - 1) * base_genus)
}

/// `na² + 2ab + g + 1 − 2𝔤`.
pub fn hirzebruch_upper_genus(n: i64, a: i64, b: i64, base_genus: i64, g: i64) -> Result<i64> {
    check_ruled(n, a, b, base_genus)?;
    check_genus(g)?;
    Ok(n * a * a + 2 * a * b + g + 1 - 2 * base_genus)
}

/// Genus-free bound for bidegree `(m, m)` in the ellipsoid.
pub fn ellipsoid_upper(m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::Parameter(format!("bidegree m = {m} must be at least 2")));
    }
    let k = m / 2;
    Ok(if m % 2 == 0 { 3 * k * k - 2 * k + 2 } else { 3 * k * k + 2 * k })
}

/// Genus-dependent bound for bidegree `(m, m)` in the ellipsoid.
pub fn ellipsoid_upper_genus(m: i64, g: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::Parameter(format!("bidegree m = {m} must be at least 2")));
    }
    check_genus(g)?;
    let k = m / 2;
    Ok(if m % 2 == 0 { 2 * k * k + g + 3 } else { 2 * k * k + 4 * k + g })
}

/// `2e² − e·c₁ + 1 − |ℝC|`: arithmetic genus minus one per real node.
pub fn adjunction_genus_cap(e2: i64, e_dot_c1: i64, real_count: i64) -> i64 {
    2 * e2 - e_dot_c1 + 1 - real_count
}

/// `(m − 1)² − |ℝC|` for bidegree `(m, m)` in the ellipsoid.
pub fn ellipsoid_genus_cap(m: i64, real_count: i64) -> i64 {
    (m - 1) * (m - 1) - real_count
}

/// Exact maximum for bidegree `m ≤ 5` in the ellipsoid.
pub fn ellipsoid_exact_small(m: i64) -> Option<i64> {
    match m {
        1 => Some(1),
        2 => Some(2),
        3 => Some(5),
        4 => Some(10),
        5 => Some(15),
        _ => None,
    }
}

/// Three-case closed form `12l² − 4l + 2`, `12l² + 4l + 3`, `12l² + 12l + 6`.
pub fn exact_formula(k: i64) -> i64 {
    let l = k.div_euclid(3);
    match k.rem_euclid(3) {
        0 => 12 * l * l - 4 * l + 2,
        1 => 12 * l * l + 4 * l + 3,
        _ => 12 * l * l + 12 * l + 6,
    }
}

/// Best known degree-12 count (`k = 6`), obtained by a separate construction.
pub const DEGREE_12_LITERATURE: i64 = 45;

/// Where a tabulated value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Unions of complex conjugate lines or conics.
    Trivial,
    /// The three-case closed form.
    ExactFormula,
    /// A constant from a construction not reproduced here.
    Literature,
    Petrovsky,
}

/// Lower bound on the maximal number of real points of a finite curve of degree `2k`.
pub fn delta_lower_exact(k: i64) -> Result<(i64, Provenance)> {
    if k < 3 {
        return Err(Error::Parameter(format!("exact lower bound needs k >= 3, got {k}")));
    }
    let f = exact_formula(k);
    if k == 6 && DEGREE_12_LITERATURE > f {
        return Ok((DEGREE_12_LITERATURE, Provenance::Literature));
    }
    Ok((f, Provenance::ExactFormula))
}

/// Lower bound `k² + g + 1` attained for `0 ≤ g ≤ k − 3`.
pub fn low_genus_lower_cp2(k: i64, g: i64) -> Result<i64> {
    if k < 3 || g < 0 || g > k - 3 {
        return Err(Error::Parameter(format!("low genus construction needs k >= 3 and 0 <= g <= k-3, got k={k}, g={g}")));
    }
    Ok(k * k + g + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: i64,
    pub upper: i64,
    pub lower: i64,
    pub upper_provenance: Provenance,
    pub lower_provenance: Provenance,
}

/// Upper and lower bounds for degrees `2, 4, …, 20`.
pub fn known_table() -> Vec<TableRow> {
    (1..=10)
        .map(|k| {
            let (upper, upper_provenance) = match k {
                1 => (1, Provenance::Trivial),
                2 => (4, Provenance::Trivial),
                _ => (petrovsky_upper(k), Provenance::Petrovsky),
            };
            let (lower, lower_provenance) = match k {
                1 => (1, Provenance::Trivial),
                2 => (4, Provenance::Trivial),
                _ => delta_lower_exact(k).expect("k >= 3"),
            };
            TableRow {
                k,
                upper,
                lower,
                upper_provenance,
                lower_provenance,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inertia_examples() {
        assert_eq!(inertia_indices(2, 2).unwrap(), (1, 0));
        assert_eq!(inertia_indices(2, 0).unwrap(), (0, 1));
        assert!(inertia_indices(2, 1).is_err());
    }

    #[test]
    fn comessatti_examples() {
        assert_eq!(comessatti_range(1).unwrap(), (1, 1));
        assert_eq!(comessatti_range(2).unwrap(), (0, 2));
        assert_eq!(comessatti_range(46).unwrap(), (-44, 46));
    }

    #[test]
    fn petrovsky_examples() {
        assert_eq!(petrovsky_upper(3), 10);
        assert_eq!(petrovsky_upper(5), 31);
        assert_eq!(petrovsky_upper(10), 136);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_upper_cp2(4, 1).unwrap(), 18);
        assert_eq!(genus_upper_cp2(3, 0).unwrap(), petrovsky_upper(3));
        assert!(genus_upper_cp2(3, -2).is_err());
    }

    #[test]
    fn ruled_examples() {
        for n in 0..6 {
            for b in 1..6 {
                assert_eq!(hirzebruch_upper(n, 2, b, 0).unwrap(), 5 * n + 5 * b - 1);
                assert_eq!(hirzebruch_upper(n, 1, b, 0).unwrap(), n + 2 * b);
            }
        }
        assert_eq!(hirzebruch_upper_genus(3, 2, 1, 0, 0).unwrap(), 12 + 4 + 1);
    }

    #[test]
    fn ellipsoid_examples() {
        assert_eq!(ellipsoid_upper(4).unwrap(), 10);
        assert_eq!(ellipsoid_upper(5).unwrap(), 16);
        assert_eq!(ellipsoid_upper(3).unwrap(), 5);
        assert_eq!(ellipsoid_genus_cap(5, 16), 0);
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(adjunction_genus_cap(9, 9, 10), 0);
        assert_eq!(adjunction_genus_cap(9, 9, 0), 10);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(delta_lower_exact(7).unwrap().0, 59);
        assert_eq!(delta_lower_exact(9).unwrap().0, 98);
        assert_eq!(delta_lower_exact(6).unwrap(), (45, Provenance::Literature));
        assert_eq!(exact_formula(6), 42);
    }

    #[test]
    fn table_rows() {
        let t = known_table();
        let row = |k: i64| t[(k - 1) as usize];
        assert_eq!((row(2).upper, row(2).lower), (4, 4));
        assert_eq!((row(8).upper, row(8).lower), (85, 78));
        assert_eq!((row(10).upper, row(10).lower), (136, 123));
    }
}
