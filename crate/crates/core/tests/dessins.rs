use solitary_core::dessins::{family_bigonal, family_genus, Dessin, VertexKind};

fn budgets(d: &Dessin) -> [usize; 3] {
    [VertexKind::Bullet, VertexKind::Circle, VertexKind::Cross].map(|k| d.budget(k))
}

#[test]
fn bigonal_family_is_valid_up_to_eight() {
    for n in 1..=8u32 {
        for q in 0..n {
            for contracted in [false, true] {
                let d = family_bigonal(n, q, contracted).unwrap();
                let v = d.validate();
                assert!(v.is_valid(), "n={n} q={q} contracted={contracted}: {:?}", v.violations);
                assert_eq!(budgets(&d), [8 * n as usize; 3]);
                assert!(d.half_assignment_is_arc_independent());
                assert!(d.regions().iter().all(|r| d.is_triangle(r)));
            }
        }
    }
}

#[test]
fn genus_family_is_valid_up_to_eight() {
    for n in 1..=8u32 {
        for g in 1..=n + 1 {
            let d = family_genus(n, g).unwrap();
            let v = d.validate();
            assert!(v.is_valid(), "n={n} g={g}: {:?}", v.violations);
            assert_eq!(budgets(&d), [8 * n as usize; 3]);
            assert_eq!(d.boundary.len(), g as usize + 1);
            assert!(d.regions().iter().all(|r| d.is_triangle(r)));
        }
    }
}

#[test]
fn split_matches_the_count_formula() {
    for n in 1..=8u32 {
        for q in 0..n {
            let d = family_bigonal(n, q, false).unwrap();
            let r = solitary_core::dessins::bigonal_counts(n as i64, 0, q as i64).unwrap();
            let (plus, minus) = d.solitary_split().unwrap();
            assert_eq!((plus as i64, minus as i64), (r.plus_half, r.minus_half));
        }
    }
}

#[test]
fn json_round_trip() {
    let d = family_genus(2, 2).unwrap();
    let back: Dessin = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
    assert_eq!(back, d);
}
