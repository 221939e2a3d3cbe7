//! Dense exact linear algebra over ℚ.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Solves `a x = b` exactly; `None` if `a` is singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for k in col..n {
                let d = &f * &a[col][k];
                a[r][k] -= d;
            }
            let d = &f * &b[col];
            b[r] -= d;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for k in col..n {
                let d = &f * &a[col][k];
                a[r][k] -= d;
            }
        }
    }
    det
}

/// A basis vector of the kernel when it is one-dimensional.
pub fn kernel_vector(mut a: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].recip();
        for k in 0..cols {
            a[row][k] = &a[row][k] * &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..cols {
                    let d = &f * &a[row][k];
                    a[r][k] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); cols];
    v[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][free].clone();
    }
    Some(v)
}

/// Coefficients of the polynomial through `(xs[i], ys[i])`, lowest first.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        // basis polynomial Π_{j≠i} (x − x_j) / (x_i − x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for j in (0..n).filter(|&j| j != i) {
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &ys[i] / denom;
        for (k, b) in basis.iter().enumerate() {
            out[k] += b * &scale;
        }
    }
    out
}
