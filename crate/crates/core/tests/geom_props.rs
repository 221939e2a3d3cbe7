use proptest::prelude::*;
use solitary_core::geom::{simplex, tile_with_cubic_triangle, LatticePoint, LatticePolygon};

fn point() -> impl Strategy<Value = LatticePoint> {
    (-6i64..=6, -6i64..=6).prop_map(|(i, j)| LatticePoint::new(i, j))
}

fn polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec(point(), 3..9).prop_filter_map("degenerate hull", |pts| {
        LatticePolygon::hull(pts).ok().filter(|p| !p.is_degenerate())
    })
}

/// Twice the area by the shoelace formula, independent of the polygon code.
fn shoelace(vs: &[LatticePoint]) -> i64 {
    let n = vs.len();
    (0..n)
        .map(|a| {
            let (p, q) = (vs[a], vs[(a + 1) % n]);
            p.i * q.j - p.j * q.i
        })
        .sum::<i64>()
        .abs()
}

/// Pick's theorem: 2A = 2I + B − 2.
fn pick_holds(p: &LatticePolygon) -> bool {
    let pts = p.lattice_points();
    let boundary = pts.iter().filter(|q| p.on_boundary(**q)).count() as i64;
    let interior = pts.len() as i64 - boundary;
    p.lattice_area() == 2 * interior + boundary - 2
}

proptest! {
    #[test]
    fn hull_contains_its_generators(pts in prop::collection::vec(point(), 3..9)) {
        if let Ok(h) = LatticePolygon::hull(pts.clone()) {
            for q in &pts {
                prop_assert!(h.contains(*q));
            }
        }
    }

    #[test]
    fn area_matches_shoelace_and_pick(p in polygon()) {
        prop_assert_eq!(p.lattice_area(), shoelace(p.vertices()));
        prop_assert!(pick_holds(&p));
    }

    #[test]
    fn translation_and_dilation_scale_area(p in polygon(), by in point(), k in 1i64..5) {
        prop_assert_eq!(p.translate(by).lattice_area(), p.lattice_area());
        prop_assert_eq!(p.dilate(k).unwrap().lattice_area(), k * k * p.lattice_area());
    }

    #[test]
    fn minkowski_area_is_superadditive(p in polygon(), q in polygon()) {
        let s = p.minkowski_sum(&q).unwrap();
        prop_assert!(s.lattice_area() >= p.lattice_area() + q.lattice_area());
    }

    #[test]
    fn tilings_of_the_simplex_are_exact(k in 3i64..24) {
        let tri = simplex(1);
        let s = tile_with_cubic_triangle(&tri, k).unwrap();
        prop_assert!(s.validate_tiling().is_ok());
        let total: i64 = s.cells.iter().map(|c| c.polygon.lattice_area()).sum();
        prop_assert_eq!(total, simplex(k).lattice_area());
        for a in 0..s.cells.len() {
            for b in a + 1..s.cells.len() {
                prop_assert!(!s.cells[a].polygon.interiors_overlap(&s.cells[b].polygon));
            }
        }
    }
}
