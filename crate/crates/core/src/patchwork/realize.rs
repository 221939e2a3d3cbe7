//! Turning a construction into an explicit polynomial at a fixed `t` whose
//! cubic-cell nodes survive exactly.
//!
//! Substituting `t = t₀` into the Viro polynomial moves each node of a
//! cubic block off the curve by an amount of higher order in `t₀`, and
//! likewise splits the double roots of the axis patterns. Both are restored
//! by changing the coefficients: `f = f_x = f_y = 0` is imposed at the
//! predicted node positions `(t₀^{-α}, t₀^{-β})`, where `α i + β j + γ` is
//! the lift on the cell, and `f = ∂f = 0` at the predicted tangencies.
//! Among the solutions the one closest to the specialized polynomial in the
//! norm weighted by `t₀^{-ν}` is taken.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::construction::Construction;
use crate::error::{Error, Result};
use crate::geom::{AffineFn, LatticePoint};
use crate::linalg::{determinant, interpolate, kernel_vector, solve};
use crate::poly::univariate::{cauchy_bound, isolate_roots, rational_value, refine_root, UPoly};
use crate::poly::SparseBivariate;
use crate::rational::{self, int, Rational};

/// `4^{-i}`, the parameter values tried by certification.
pub fn t_schedule(i: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(4).pow(i))
}

/// Rational powers of a fixed `t`, for exponents with a bounded denominator.
struct TPowers {
    root: Rational,
    den: BigInt,
}

impl TPowers {
    fn new<'a>(t: &Rational, exponents: impl IntoIterator<Item = &'a Rational>) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonPositiveT(rational::to_string(t)));
        }
        let den = rational::common_denominator(exponents);
        let d = den
            .to_u32()
            .ok_or_else(|| Error::Unsupported(format!("lift denominator {den} too large")))?;
        let root = rational::rational_root(t, d).ok_or_else(|| Error::NotAPower {
            t: rational::to_string(t),
            degree: d,
        })?;
        Ok(Self { root, den })
    }

    fn pow(&self, e: &Rational) -> Result<Rational> {
        let n = (e * Rational::from_integer(self.den.clone())).to_integer();
        let n = n
            .to_i64()
            .ok_or_else(|| Error::Unsupported(format!("exponent {n} too large")))?;
        Ok(rational::pow(&self.root, n))
    }
}

/// The polynomial at `t = t₀` with its nodes and their predicted positions.
#[derive(Clone, Debug)]
pub struct Realization {
    pub t: Rational,
    /// Polynomial `f` in the positive-quadrant coordinates; the curve is `f(x², y²) = 0`.
    pub poly: SparseBivariate,
    /// Exact nodes of `poly`, one per cubic cell.
    pub nodes: Vec<(Rational, Rational)>,
}

impl Realization {
    /// `f(x², y²)`.
    pub fn curve(&self) -> SparseBivariate {
        self.poly.substitute_squares()
    }
}

fn cubic_lifts(c: &Construction) -> Result<Vec<AffineFn>> {
    let s = &c.subdivision;
    s.cells
        .iter()
        .filter(|cell| cell.tag.is_cubic())
        .map(|cell| {
            let v = cell.polygon.vertices();
            let h = |q: LatticePoint| s.lift.get(&q).cloned().unwrap_or_else(Rational::zero);
            AffineFn::through([(v[0], h(v[0])), (v[1], h(v[1])), (v[2], h(v[2]))])
                .ok_or_else(|| Error::Degenerate(format!("{v:?}")))
        })
        .collect()
}

/// Positions `(t^{-α}, t^{-β})` of the nodes of the cubic cells.
pub fn predicted_nodes(c: &Construction, t: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let lifts = cubic_lifts(c)?;
    let exps: Vec<Rational> = lifts.iter().flat_map(|f| [f.a.clone(), f.b.clone()]).collect();
    let tp = TPowers::new(t, &exps)?;
    lifts.iter().map(|f| Ok((tp.pow(&-f.a.clone())?, tp.pow(&-f.b.clone())?))).collect()
}

/// `[m, m_x, m_y]` at `(x, y)` for the monomial `m = x^i y^j`.
fn jet(e: LatticePoint, x: &Rational, y: &Rational) -> [Rational; 3] {
    let m = rational::pow(x, e.i) * rational::pow(y, e.j);
    let mx = if e.i == 0 { int(0) } else { int(e.i) * rational::pow(x, e.i - 1) * rational::pow(y, e.j) };
    let my = if e.j == 0 { int(0) } else { int(e.j) * rational::pow(x, e.i) * rational::pow(y, e.j - 1) };
    [m, mx, my]
}

#[derive(Clone, Copy)]
enum Row {
    Value,
    Dx,
    Dy,
}

/// A point condition on the polynomial.
#[derive(Clone)]
struct Condition {
    x: Rational,
    y: Rational,
    row: Row,
}

impl Condition {
    fn entry(&self, orbit: &[LatticePoint]) -> Rational {
        let k = self.row as usize;
        orbit.iter().map(|e| jet(*e, &self.x, &self.y)[k].clone()).sum()
    }
}

/// Node and tangency conditions, reduced modulo the `x ↔ y` symmetry when present.
struct System {
    orbits: Vec<Vec<LatticePoint>>,
    /// Target coefficients (one per orbit) and weights `t^{2ν}`.
    target: Vec<Rational>,
    weights: Vec<Rational>,
    nodes: Vec<(Rational, Rational)>,
    /// Tangency positions on the `x`-axis (and on the `y`-axis when not symmetric).
    tangencies: Vec<(Rational, Rational)>,
    symmetric: bool,
}

impl System {
    fn conditions(&self) -> Vec<Condition> {
        let mut out = Vec::new();
        for (x, y) in &self.nodes {
            if self.symmetric && x > y {
                continue;
            }
            let rows: &[Row] = if self.symmetric && x == y { &[Row::Value, Row::Dx] } else { &[Row::Value, Row::Dx, Row::Dy] };
            out.extend(rows.iter().map(|r| Condition { x: x.clone(), y: y.clone(), row: *r }));
        }
        for (x, y) in &self.tangencies {
            let along = if y.is_zero() { Row::Dx } else { Row::Dy };
            out.push(Condition { x: x.clone(), y: y.clone(), row: Row::Value });
            out.push(Condition { x: x.clone(), y: y.clone(), row: along });
        }
        out
    }

    fn matrix(&self, conds: &[Condition]) -> Vec<Vec<Rational>> {
        conds.iter().map(|c| self.orbits.iter().map(|o| c.entry(o)).collect()).collect()
    }

    fn polynomial(&self, coeffs: &[Rational]) -> SparseBivariate {
        let mut p = SparseBivariate::zero();
        for (o, c) in self.orbits.iter().zip(coeffs) {
            for e in o {
                p.add_term(*e, c.clone());
            }
        }
        p
    }

    /// The closest point to the target in the kernel, in the norm weighted by `1/t^{2ν}`.
    fn project(&self, m: &[Vec<Rational>]) -> Option<Vec<Rational>> {
        let r: Vec<Rational> = m
            .iter()
            .map(|row| -row.iter().zip(&self.target).map(|(a, c)| a * c).sum::<Rational>())
            .collect();
        let n = m.len();
        let mut gram = vec![vec![Rational::zero(); n]; n];
        for a in 0..n {
            for b in a..n {
                let acc: Rational = (0..self.orbits.len())
                    .filter(|&u| !m[a][u].is_zero() && !m[b][u].is_zero())
                    .map(|u| &m[a][u] * &m[b][u] * &self.weights[u])
                    .sum();
                gram[a][b] = acc.clone();
                gram[b][a] = acc;
            }
        }
        let lambda = solve(gram, r)?;
        Some(
            (0..self.orbits.len())
                .map(|u| {
                    let d: Rational = lambda.iter().zip(m).map(|(l, row)| l * &row[u]).sum();
                    &self.target[u] + d * &self.weights[u]
                })
                .collect(),
        )
    }

    /// Multiple of `v` closest to the target in the weighted norm.
    fn fit(&self, v: &[Rational]) -> Vec<Rational> {
        let (mut num, mut den) = (Rational::zero(), Rational::zero());
        for ((a, c), w) in v.iter().zip(&self.target).zip(&self.weights) {
            num += a * c / w;
            den += a * a / w;
        }
        let l = num / den;
        v.iter().map(|a| a * &l).collect()
    }
}

fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

fn relative_gap(a: &Rational, b: &Rational) -> f64 {
    (to_f64(&(a / b)) - 1.0).abs()
}

/// `det M` as a polynomial in one position parameter, by interpolation.
fn det_polynomial(sys: &mut System, degree: i64, set: impl Fn(&mut System, Rational)) -> UPoly {
    let xs: Vec<Rational> = (0..=degree).map(int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|v| {
            set(sys, v.clone());
            determinant(sys.matrix(&sys.conditions()))
        })
        .collect();
    UPoly::from_rationals(&interpolate(&xs, &ys))
}

/// A rational `s > 0` with `lo ≤ s² ≤ hi`.
fn rational_sqrt_between(lo: &Rational, hi: &Rational) -> Option<Rational> {
    for bits in (8..400).step_by(8) {
        let m: BigInt = BigInt::one() << bits;
        let scaled = (hi * Rational::from_integer(&m * &m)).floor().to_integer();
        let s = Rational::new(scaled.sqrt(), m.clone());
        if &(&s * &s) >= lo && s.is_positive() {
            return Some(s);
        }
    }
    None
}

/// Square systems of the symmetric layout with a diagonal node `(d, d)`, an
/// off-diagonal node `(p, q)` with `p < d < q` and a tangency at `(a, 0)`.
/// There the kernel is nonzero iff a polynomial in `a` vanishes whose
/// relevant factor is quadratic with discriminant a square times
/// `(d − p)(q − d)`. Taking `d = (q + s²p)/(1 + s²)` makes that product a
/// square for every rational `s`; `s` is tuned so that the rational root
/// `a` lands within 1% of its predicted value.
fn solve_square(sys: &mut System) -> Option<Vec<Rational>> {
    if !sys.symmetric || sys.tangencies.is_empty() {
        return None;
    }
    let di = sys.nodes.iter().position(|(x, y)| x == y)?;
    let d0 = sys.nodes[di].0.clone();
    let (p, q) = sys.nodes.iter().find(|(x, y)| *x < d0 && d0 < *y)?.clone();
    let ti = sys.tangencies.len() - 1;
    let a0 = sys.tangencies[ti].0.clone();
    let degree = 2 * sys.orbits.iter().flatten().map(|e| e.i.max(e.j)).max().unwrap_or(0) + 1;
    let set_d = move |sys: &mut System, d: Rational| sys.nodes[di] = (d.clone(), d);
    let set_a = move |sys: &mut System, a: Rational| sys.tangencies[ti] = (a, Rational::zero());

    // the diagonal position consistent with the predicted tangency
    set_a(sys, a0.clone());
    let pd = det_polynomial(sys, degree, set_d).squarefree();
    if pd.degree() <= 0 {
        return None;
    }
    let fine = &d0 / int(1000);
    let root = isolate_roots(&pd, &p, &q)
        .into_iter()
        .map(|r| refine_root(&pd, &r, &fine))
        .filter(|r| r.lo > p && r.hi < q)
        .min_by(|x, y| {
            relative_gap(&x.lo, &d0)
                .partial_cmp(&relative_gap(&y.lo, &d0))
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
    for level in 1..=12u32 {
        let eps = &d0 / Rational::from_integer(BigInt::one() << (8 * level as usize));
        let r = refine_root(&pd, &root, &eps);
        // s² = (q − d)/(d − p) is decreasing in d
        let s2 = |d: &Rational| (&q - d) / (d - &p);
        let s = rational_sqrt_between(&s2(&r.hi), &s2(&r.lo))?;
        let ss = &s * &s;
        let d = (&q + &ss * &p) / (Rational::one() + &ss);
        set_d(sys, d);
        let pa = det_polynomial(sys, degree, set_a).squarefree();
        if pa.degree() <= 0 {
            continue;
        }
        let bound = cauchy_bound(&pa);
        let best = isolate_roots(&pa, &Rational::zero(), &bound)
            .iter()
            .filter_map(|r| rational_value(&pa, r))
            .filter(|a| a.is_positive())
            .min_by(|x, y| {
                relative_gap(x, &a0)
                    .partial_cmp(&relative_gap(y, &a0))
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(a) = best else { continue };
        if relative_gap(&a, &a0) > 0.01 {
            continue;
        }
        set_a(sys, a);
        if let Some(v) = kernel_vector(sys.matrix(&sys.conditions()), sys.orbits.len()) {
            return Some(sys.fit(&v));
        }
    }
    None
}

/// Double roots of the axis segment patterns, `t^{-σ}` for the slope `σ` of the lift along the segment.
fn predicted_tangencies(c: &Construction, tp: &TPowers) -> Result<Vec<(Rational, Rational)>> {
    let s = &c.subdivision;
    let mut out = Vec::new();
    for seg in s.segments.iter().filter(|g| g.length() >= 2) {
        let h = |q: LatticePoint| s.lift.get(&q).cloned().unwrap_or_else(Rational::zero);
        let slope = (h(seg.to) - h(seg.from)) / int(seg.length());
        let pos = tp.pow(&-slope)?;
        out.push(if seg.from.j == 0 && seg.to.j == 0 { (pos, int(0)) } else { (int(0), pos) });
    }
    Ok(out)
}

/// Specializes the construction at `t` and makes the cubic-cell nodes and
/// the axis tangencies exact.
pub fn realize(c: &Construction, t: &Rational) -> Result<Realization> {
    let f0 = c.viro.specialize_t(t)?;
    let s = &c.subdivision;
    let outer = s.ambient.as_ref().unwrap_or(&s.parent);
    let support: Vec<LatticePoint> = s
        .parent
        .lattice_points()
        .into_iter()
        .filter(|q| !s.cut_corners.contains(q))
        .filter(|q| c.viro.get(*q).is_some() || outer.contains_in_interior(*q))
        .collect();
    let all_lifts: Vec<Rational> = s.lift.values().cloned().collect();
    let tp = TPowers::new(t, &all_lifts)?;
    let symmetric = f0 == f0.swap_xy();
    let mut orbits: Vec<Vec<LatticePoint>> = Vec::new();
    for q in &support {
        let m = LatticePoint::new(q.j, q.i);
        if symmetric && q.i > q.j {
            continue;
        }
        orbits.push(if symmetric && m != *q { vec![*q, m] } else { vec![*q] });
    }
    let mut weights = Vec::with_capacity(orbits.len());
    for o in &orbits {
        let w = tp.pow(&s.lift.get(&o[0]).cloned().unwrap_or_else(Rational::zero))?;
        weights.push(&w * &w);
    }
    let mut tangencies = predicted_tangencies(c, &tp)?;
    if symmetric {
        tangencies.retain(|(_, y)| y.is_zero());
    }
    let mut sys = System {
        target: orbits.iter().map(|o| f0.coeff(o[0])).collect(),
        orbits,
        weights,
        nodes: predicted_nodes(c, t)?,
        tangencies,
        symmetric,
    };
    let conds = sys.conditions();
    let coeffs = if conds.len() < sys.orbits.len() {
        sys.project(&sys.matrix(&conds))
    } else if conds.len() == sys.orbits.len() {
        solve_square(&mut sys)
    } else {
        None
    }
    .ok_or_else(|| {
        Error::Unsupported(format!(
            "{} node and tangency conditions on {} coefficients have no rational solution near t = {}",
            conds.len(),
            sys.orbits.len(),
            rational::to_string(t)
        ))
    })?;
    Ok(Realization {
        t: t.clone(),
        poly: sys.polynomial(&coeffs),
        nodes: sys.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patchwork::exact_construction;

    #[test]
    fn schedule_is_powers_of_four() {
        assert_eq!(t_schedule(2), rational::frac(1, 16));
    }

    #[test]
    fn solver_inverts() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(solve(a, vec![int(3), int(5)]).unwrap(), vec![rational::frac(4, 5), rational::frac(7, 5)]);
    }

    #[test]
    fn nodes_and_tangencies_are_exact() {
        for k in [3, 4] {
            let c = exact_construction(k).unwrap();
            let r = realize(&c, &t_schedule(2)).unwrap();
            assert_eq!(r.nodes.len(), c.subdivision.cubic_count());
            let (fx, fy) = (r.poly.partial_x(), r.poly.partial_y());
            for (x, y) in &r.nodes {
                assert!(x.is_positive() && y.is_positive());
                assert!(r.poly.eval(x, y).is_zero());
                assert!(fx.eval(x, y).is_zero() && fy.eval(x, y).is_zero());
            }
            // the x-axis restriction has a positive double root
            let axis = UPoly::from_rationals(&r.poly.restrict_y(&int(0)));
            let g = axis.gcd(&axis.derivative());
            assert!(g.degree() >= 1);
            for cut in &c.subdivision.cut_corners {
                assert!(r.poly.coeff(*cut).is_zero());
            }
        }
    }
}
