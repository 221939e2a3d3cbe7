use proptest::prelude::*;
use solitary_core::certify::{certify_finite_count, CertifyOptions, Region};
use solitary_core::poly::SparseBivariate;
use solitary_core::rational::{frac, int, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..4).prop_map(|(n, d)| frac(n, d))
}

/// `c·(x − a)² + (y − b)²`, zero only at `(a, b)`.
fn well(a: &Rational, b: &Rational, c: &Rational) -> SparseBivariate {
    let x = &SparseBivariate::x() - &SparseBivariate::constant(a.clone());
    let y = &SparseBivariate::y() - &SparseBivariate::constant(b.clone());
    &(&(&x * &x) * &SparseBivariate::constant(c.clone())) + &(&y * &y)
}

fn count(f: &SparseBivariate, r: Region) -> usize {
    certify_finite_count(f, r, &CertifyOptions::default()).unwrap().count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn one_well(a in rational(), b in rational(), c in 1i64..5) {
        let f = well(&a, &b, &int(c));
        prop_assert_eq!(count(&f, Region::Plane), 1);
        let inside = a > int(0) && b > int(0);
        prop_assert_eq!(count(&f, Region::OpenPositiveQuadrant), usize::from(inside));
    }

    #[test]
    fn two_wells(a in rational(), b in rational(), c in rational(), d in rational()) {
        let f = &well(&a, &b, &int(1)) * &well(&c, &d, &int(2));
        let expected = if (&a, &b) == (&c, &d) { 1 } else { 2 };
        prop_assert_eq!(count(&f, Region::Plane), expected);
    }
}
