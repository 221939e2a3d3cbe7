//! Dense univariate polynomials over ℤ: gcd, square-free part and real root
//! isolation by Descartes' rule of signs with bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|a| a.is_zero()) {
            c.pop();
        }
        Self(c)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// Primitive integer multiple of a rational polynomial.
    pub fn from_rationals(c: &[Rational]) -> Self {
        let den = crate::rational::common_denominator(c.iter());
        Self::new(c.iter().map(|a| (a * Rational::from_integer(den.clone())).to_integer()).collect()).primitive()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self(self.0.iter().map(|a| a / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * BigInt::from(k))
                .collect(),
        )
    }

    /// Sign of `p(q)`, computed exactly.
    pub fn sign_at(&self, q: &Rational) -> i32 {
        let v = self.eval_scaled(q.numer(), q.denom());
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// `d^n · p(n/d)` with `n = deg p`, an integer with the sign of `p(n/d)` when `d > 0`.
    pub fn eval_scaled(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for a in self.0.iter().rev() {
            acc = acc * num + a * &dpow;
            dpow *= den;
        }
        acc
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.0.iter().rev() {
            acc = acc * q + Rational::from_integer(a.clone());
        }
        acc
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.0.clone();
        let dd = d.0.len();
        let lc = d.leading();
        while r.len() >= dd && !r.is_empty() {
            let shift = r.len() - dd;
            let lr = r.last().unwrap().clone();
            for a in r.iter_mut() {
                *a *= &lc;
            }
            for (k, b) in d.0.iter().enumerate() {
                r[shift + k] -= &lr * b;
            }
            r.pop();
            while r.last().is_some_and(|a| a.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Greatest common divisor (primitive, positive leading coefficient).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Exact quotient `self / d` when `d` divides `self` over ℚ, returned primitive.
    pub fn div_exact(&self, d: &Self) -> Self {
        let mut r: Vec<Rational> = self.0.iter().map(|a| Rational::from_integer(a.clone())).collect();
        let dd = d.0.len();
        let lc = Rational::from_integer(d.leading());
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd) + 1];
        while r.len() >= dd && !r.is_empty() {
            let shift = r.len() - dd;
            let f = r.last().unwrap() / &lc;
            for (k, b) in d.0.iter().enumerate() {
                r[shift + k] -= &f * Rational::from_integer(b.clone());
            }
            q[shift] = f;
            r.pop();
        }
        debug_assert!(r.iter().all(|a| a.is_zero()), "inexact division");
        Self::from_rationals(&q)
    }

    /// `p / gcd(p, p')`.
    pub fn squarefree(&self) -> Self {
        if self.degree() <= 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.primitive()
        } else {
            self.div_exact(&g)
        }
    }

    /// `p(a + b·x)` for rationals `a`, `b`, as a primitive integer polynomial.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let mut c: Vec<Rational> = self.0.iter().map(|v| Rational::from_integer(v.clone())).collect();
        // Taylor shift by a
        let n = c.len();
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let t = &c[k + 1] * a;
                c[k] += t;
            }
        }
        let mut bp = Rational::one();
        for v in c.iter_mut() {
            *v *= &bp;
            bp *= b;
        }
        Self::from_rationals(&c)
    }
}

fn taylor_shift_one(c: &mut [BigInt]) {
    let n = c.len();
    for i in 0..n {
        for k in (i..n - 1).rev() {
            let t = c[k + 1].clone();
            c[k] += t;
        }
    }
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = 0;
    let mut v = 0;
    for a in c {
        let s = if a.is_positive() {
            1
        } else if a.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Descartes bound for roots in `(0, 1)`: variations of `(x+1)^n p(1/(x+1))`.
fn descartes_01(p: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = p.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// A real root: exact when `lo == hi`, otherwise the unique root in the open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: Rational,
    pub hi: Rational,
}

impl RealRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Isolates the real roots of a square-free `p` in the closed interval `[lo, hi]`.
pub fn isolate_roots(p: &UPoly, lo: &Rational, hi: &Rational) -> Vec<RealRoot> {
    let mut out = Vec::new();
    if p.degree() <= 0 || lo > hi {
        return out;
    }
    if p.sign_at(lo) == 0 {
        out.push(RealRoot { lo: lo.clone(), hi: lo.clone() });
    }
    if lo == hi {
        return out;
    }
    let w = hi - lo;
    let q = p.compose_affine(lo, &w);
    // stack of (polynomial on (0,1), numerator c, exponent k): local interval [c/2^k, (c+1)/2^k]
    let mut stack: Vec<(Vec<BigInt>, BigInt, u32)> = vec![(q.0.clone(), BigInt::zero(), 0)];
    let to_global = |c: &BigInt, k: u32| lo + &w * Rational::new(c.clone(), BigInt::one() << k);
    let mut found: Vec<RealRoot> = Vec::new();
    while let Some((mut poly, c, k)) = stack.pop() {
        if poly.first().is_some_and(|a| a.is_zero()) {
            // the left end of the top interval was reported above
            if k > 0 {
                let x = to_global(&c, k);
                found.push(RealRoot { lo: x.clone(), hi: x });
            }
            poly.remove(0);
        }
        let v = descartes_01(&poly);
        if v == 0 {
            continue;
        }
        if v == 1 {
            found.push(RealRoot {
                lo: to_global(&c, k),
                hi: to_global(&(&c + 1), k),
            });
            continue;
        }
        let n = poly.len();
        let mut left = poly;
        for (i, a) in left.iter_mut().enumerate() {
            *a <<= n - 1 - i;
        }
        let mut right = left.clone();
        taylor_shift_one(&mut right);
        stack.push((right, &c * 2 + 1, k + 1));
        stack.push((left, &c * 2, k + 1));
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    out.extend(found);
    if p.sign_at(hi) == 0 {
        out.push(RealRoot { lo: hi.clone(), hi: hi.clone() });
    }
    out
}

/// Sign of `p` just to the right of `x`, read off the first derivative not vanishing there.
fn sign_right_of(p: &UPoly, x: &Rational) -> i32 {
    let mut q = p.clone();
    while !q.is_zero() {
        let s = q.sign_at(x);
        if s != 0 {
            return s;
        }
        q = q.derivative();
    }
    0
}

/// Sign of `p` just to the left of `x`.
fn sign_left_of(p: &UPoly, x: &Rational) -> i32 {
    let mut q = p.clone();
    let mut flip = 1;
    while !q.is_zero() {
        let s = q.sign_at(x);
        if s != 0 {
            return flip * s;
        }
        q = q.derivative();
        flip = -flip;
    }
    0
}

/// Halves an isolating interval, keeping the root; exact roots are returned unchanged.
pub fn bisect_root(p: &UPoly, r: &RealRoot) -> RealRoot {
    if r.is_exact() {
        return r.clone();
    }
    let m = (&r.lo + &r.hi) / Rational::from_integer(2.into());
    let sm = p.sign_at(&m);
    if sm == 0 {
        return RealRoot { lo: m.clone(), hi: m };
    }
    if sign_right_of(p, &r.lo) * sm < 0 {
        RealRoot { lo: r.lo.clone(), hi: m }
    } else {
        RealRoot { lo: m, hi: r.hi.clone() }
    }
}

/// Refines until the width is at most `eps`.
pub fn refine_root(p: &UPoly, r: &RealRoot, eps: &Rational) -> RealRoot {
    let mut r = r.clone();
    while !r.is_exact() && r.width() > *eps {
        r = bisect_root(p, &r);
    }
    r
}

/// The root as an exact rational if it is one. `p` must be primitive and square-free.
pub fn rational_value(p: &UPoly, r: &RealRoot) -> Option<Rational> {
    if r.is_exact() {
        return Some(r.lo.clone());
    }
    // a rational root m/lc has m integral, and distinct candidates are 1/|lc| apart
    let lc = p.leading().abs();
    let eps = Rational::new(BigInt::one(), &lc * 2);
    let r = refine_root(p, r, &eps);
    if r.is_exact() {
        return Some(r.lo);
    }
    let lcq = Rational::from_integer(lc.clone());
    let m_lo = (&r.lo * &lcq).ceil().to_integer();
    let m_hi = (&r.hi * &lcq).floor().to_integer();
    let mut m = m_lo;
    while m <= m_hi {
        let cand = Rational::new(m.clone(), lc.clone());
        if r.lo < cand && cand < r.hi && p.sign_at(&cand) == 0 {
            return Some(cand);
        }
        m += 1;
    }
    None
}

/// `1 + max |a_k / a_n|`, a bound on the absolute value of every complex root.
pub fn cauchy_bound(p: &UPoly) -> Rational {
    let lc = Rational::from_integer(p.leading().abs());
    let m = p.0[..p.0.len().saturating_sub(1)]
        .iter()
        .map(|a| Rational::from_integer(a.abs()) / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Multiplicity structure of the roots of `p ≠ 0`.
#[derive(Clone, Debug, Default)]
pub struct RootStructure {
    /// Distinct real roots with their multiplicities, increasing.
    pub real: Vec<(RealRoot, u32)>,
    /// `imaginary[m]` = number of distinct non-real roots of multiplicity exactly `m`.
    pub imaginary: std::collections::BTreeMap<u32, usize>,
}

/// Real roots with multiplicities and the multiplicity histogram of the
/// non-real roots, from the chain `g₀ = p`, `g_{j+1} = gcd(g_j, g_j')`.
pub fn root_structure(p: &UPoly) -> RootStructure {
    let mut out = RootStructure::default();
    if p.degree() <= 0 {
        return out;
    }
    let b = cauchy_bound(p);
    let base = p.squarefree();
    // isolate on each side of 0 so that every interval has a definite sign
    let mut roots = isolate_roots(&base, &-b.clone(), &Rational::zero());
    roots.extend(
        isolate_roots(&base, &Rational::zero(), &b)
            .into_iter()
            .filter(|r| !(r.is_exact() && r.lo.is_zero())),
    );
    let mut mult = vec![0u32; roots.len()];
    // distinct non-real roots of multiplicity > j
    let mut nonreal_above: Vec<usize> = Vec::new();
    let mut g = p.primitive();
    while g.degree() > 0 {
        let q = g.squarefree();
        let mut real_here = 0usize;
        for (k, r) in roots.iter().enumerate() {
            let vanishes = if r.is_exact() {
                q.sign_at(&r.lo) == 0
            } else {
                sign_right_of(&q, &r.lo) * sign_left_of(&q, &r.hi) < 0
            };
            if vanishes {
                mult[k] += 1;
                real_here += 1;
            }
        }
        nonreal_above.push(q.degree() as usize - real_here);
        g = g.gcd(&g.derivative());
    }
    out.real = roots.into_iter().zip(mult).collect();
    for (j, &n) in nonreal_above.iter().enumerate() {
        let next = nonreal_above.get(j + 1).copied().unwrap_or(0);
        if n > next {
            out.imaginary.insert(j as u32 + 1, n - next);
        }
    }
    out
}
