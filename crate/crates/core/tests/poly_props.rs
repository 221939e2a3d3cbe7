use proptest::prelude::*;
use solitary_core::certify::certified_sign;
use solitary_core::geom::LatticePoint;
use solitary_core::poly::univariate::{isolate_roots, rational_value, UPoly};
use solitary_core::poly::{eval_interval, Interval, IntervalBox, SparseBivariate};
use solitary_core::rational::{frac, int, Rational};

fn bivariate() -> impl Strategy<Value = SparseBivariate> {
    prop::collection::vec(((0i64..4, 0i64..4), -5i64..=5), 0..7).prop_map(|t| SparseBivariate::from_int_terms(&t))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..5).prop_map(|(n, d)| frac(n, d))
}

fn interval() -> impl Strategy<Value = Interval> {
    (rational(), 1i64..6, 1i64..4).prop_map(|(lo, w, d)| {
        let hi = &lo + frac(w, d);
        Interval::new(lo, hi)
    })
}

/// Point of the interval at fraction `t ∈ [0, 1]`.
fn at(i: &Interval, t: &Rational) -> Rational {
    &i.lo + (&i.hi - &i.lo) * t
}

/// Coefficients of `∏ (x − r)`, lowest degree first.
fn from_roots(roots: &[Rational]) -> Vec<Rational> {
    let mut c = vec![int(1)];
    for r in roots {
        let mut next = vec![int(0); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * r;
        }
        c = next;
    }
    c
}

proptest! {
    #[test]
    fn ring_laws(p in bivariate(), q in bivariate(), r in bivariate()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in bivariate(), q in bivariate(), x in rational(), y in rational()) {
        prop_assert_eq!((&p * &q).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
        prop_assert_eq!((&p + &q).eval(&x, &y), p.eval(&x, &y) + q.eval(&x, &y));
    }

    #[test]
    fn derivatives_obey_leibniz(p in bivariate(), q in bivariate()) {
        prop_assert_eq!((&p * &q).partial_x(), &(&p.partial_x() * &q) + &(&p * &q.partial_x()));
        prop_assert_eq!(p.partial_x().partial_y(), p.partial_y().partial_x());
    }

    #[test]
    fn square_substitution_and_swap(p in bivariate(), x in rational(), y in rational()) {
        prop_assert_eq!(p.substitute_squares().eval(&x, &y), p.eval(&(&x * &x), &(&y * &y)));
        prop_assert_eq!(p.swap_xy().eval(&y, &x), p.eval(&x, &y));
        prop_assert_eq!(p.shift(LatticePoint::new(1, 0)).eval(&x, &y), &x * p.eval(&x, &y));
    }

    #[test]
    fn interval_enclosure_contains_values(
        p in bivariate(), bx in interval(), by in interval(), s in 0i64..=8, t in 0i64..=8,
    ) {
        let b = IntervalBox::new(bx.clone(), by.clone());
        let v = p.eval(&at(&bx, &frac(s, 8)), &at(&by, &frac(t, 8)));
        prop_assert!(eval_interval(&p, &b).contains(&v));
    }

    #[test]
    fn certified_signs_are_sound(
        p in bivariate(), bx in interval(), by in interval(), s in 0i64..=8, t in 0i64..=8,
    ) {
        let b = IntervalBox::new(bx.clone(), by.clone());
        if let Some(sign) = certified_sign(&p, &b, 3) {
            let v = p.eval(&at(&bx, &frac(s, 8)), &at(&by, &frac(t, 8)));
            let actual = if v > int(0) { 1 } else if v < int(0) { -1 } else { 0 };
            prop_assert!(sign == actual || (sign == 0 && p.is_zero()));
        }
    }

    #[test]
    fn rational_roots_are_isolated_and_recovered(mut roots in prop::collection::vec(rational(), 1..6)) {
        roots.sort();
        roots.dedup();
        let p = UPoly::from_rationals(&from_roots(&roots)).squarefree();
        let found = isolate_roots(&p, &int(-20), &int(20));
        prop_assert_eq!(found.len(), roots.len());
        for (r, want) in found.iter().zip(&roots) {
            prop_assert_eq!(rational_value(&p, r), Some(want.clone()));
        }
    }
}
