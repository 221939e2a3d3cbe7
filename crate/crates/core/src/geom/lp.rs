//! Exact linear feasibility over the rationals (phase-one simplex, Bland's rule).

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// A linear constraint `coeffs · x (= | >=) rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub equality: bool,
}

/// Finds `x >= 0` satisfying every constraint, or `None` if infeasible.
pub fn feasible_point(n: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    let m = constraints.len();
    let surplus: Vec<usize> = constraints
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.equality)
        .map(|(r, _)| r)
        .collect();
    let n_slack = surplus.len();
    let width = n + n_slack + m;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (r, c) in constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for (k, a) in c.coeffs.iter().enumerate() {
            row[k] = a.clone();
        }
        if let Some(s) = surplus.iter().position(|&x| x == r) {
            row[n + s] = -Rational::from_integer(1.into());
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
        }
        row[n + n_slack + r] = Rational::from_integer(1.into());
        tab.push(row);
        rhs.push(b);
    }
    let mut basis: Vec<usize> = (0..m).map(|r| n + n_slack + r).collect();
    let is_artificial = |col: usize| col >= n + n_slack;

    loop {
        // reduced cost of column j for the objective "sum of artificials"
        let entering = (0..width).filter(|&j| !basis.contains(&j)).find(|&j| {
            let mut cost = if is_artificial(j) {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            };
            for (r, &b) in basis.iter().enumerate() {
                if is_artificial(b) {
                    cost -= &tab[r][j];
                }
            }
            cost.is_negative()
        });
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if tab[r][j].is_positive() {
                let ratio = &rhs[r] / &tab[r][j];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { break };
        pivot(&mut tab, &mut rhs, r, j);
        basis[r] = j;
    }

    let infeasible = basis
        .iter()
        .enumerate()
        .any(|(r, &b)| is_artificial(b) && !rhs[r].is_zero());
    if infeasible {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = rhs[r].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], rhs: &mut [Rational], r: usize, j: usize) {
    let p = tab[r][j].clone();
    for v in tab[r].iter_mut() {
        *v = &*v / &p;
    }
    rhs[r] = &rhs[r] / &p;
    let prow = tab[r].clone();
    let prhs = rhs[r].clone();
    for (k, row) in tab.iter_mut().enumerate() {
        if k == r || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
        rhs[k] -= &f * &prhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn c(coeffs: &[i64], rhs: i64, equality: bool) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&v| int(v)).collect(),
            rhs: int(rhs),
            equality,
        }
    }

    #[test]
    fn finds_point() {
        let cons = [c(&[1, 1], 3, true), c(&[1, -1], 1, false)];
        let x = feasible_point(2, &cons).unwrap();
        assert_eq!(&x[0] + &x[1], int(3));
        assert!(&x[0] - &x[1] >= int(1));
    }

    #[test]
    fn detects_infeasibility() {
        let cons = [c(&[1, 1], 1, true), c(&[1, 0], 2, false)];
        assert!(feasible_point(2, &cons).is_none());
    }
}
