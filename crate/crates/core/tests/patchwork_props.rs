use proptest::prelude::*;
use solitary_core::bounds::{exact_formula, petrovsky_upper};
use solitary_core::geom::{check_regular, simplex};
use solitary_core::patchwork::exact_construction;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ledger_matches_the_closed_form(k in 3i64..=9) {
        let c = exact_construction(k).unwrap();
        prop_assert_eq!(c.predicted, exact_formula(k));
        prop_assert!(c.predicted <= petrovsky_upper(k));
        prop_assert!(c.subdivision.validate_tiling().is_ok());
        prop_assert!(check_regular(&c.subdivision).is_ok());
    }

    #[test]
    fn viro_support_lies_in_the_simplex(k in 3i64..=7) {
        let c = exact_construction(k).unwrap();
        let tri = simplex(k);
        let area: i64 = c.subdivision.cells.iter().map(|cell| cell.polygon.lattice_area()).sum();
        // the parent is the simplex with corners cut away
        prop_assert_eq!(area, c.subdivision.parent.lattice_area());
        prop_assert!(area <= tri.lattice_area());
        prop_assert!(c.subdivision.parent.vertices().iter().all(|v| tri.contains(*v)));
        for e in c.viro.terms().keys() {
            prop_assert!(tri.contains(*e));
        }
    }
}

#[test]
fn closed_form_second_differences() {
    // second differences of the closed form are 2·12 on each residue class mod 3
    for r in 0..3 {
        let seq: Vec<i64> = (0..6).map(|l| exact_formula(3 * l + r)).collect();
        for w in seq.windows(3) {
            assert_eq!(w[2] - 2 * w[1] + w[0], 24);
        }
    }
}
