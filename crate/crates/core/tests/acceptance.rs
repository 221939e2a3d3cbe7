//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach the output.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solitary_core::bounds::{self, CurveClass};
use solitary_core::certify::{certify_construction, certify_finite_count, is_solitary, CertifyOptions, Region};
use solitary_core::dessins::{bigonal_counts, cover_counts, family_bigonal, family_genus, VertexKind};
use solitary_core::error::Error;
use solitary_core::geom::{tile_with_cubic_triangle, LatticePoint, LatticePolygon, TILING_BOUNDARY_CONSTANT};
use solitary_core::patchwork::{cubic_block, exact_construction};
use solitary_core::poly::SparseBivariate;
use solitary_core::rational::{int, Rational};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table() -> Check {
    let upper = [1, 4, 10, 19, 31, 46, 64, 85, 109, 136];
    let lower = [1, 4, 10, 19, 30, 45, 59, 78, 98, 123];
    let rows = bounds::known_table();
    let got_u: Vec<i64> = rows.iter().map(|r| r.upper).collect();
    let got_l: Vec<i64> = rows.iter().map(|r| r.lower).collect();
    ensure(got_u == upper && got_l == lower, format!("upper {got_u:?}, lower {got_l:?}"))?;
    Ok("k = 1..10 exact".into())
}

fn cubic() -> Check {
    let b = cubic_block();
    let coeffs: Vec<Rational> = b.poly.terms().values().cloned().collect();
    let mut sorted = coeffs.clone();
    sorted.sort();
    ensure(sorted == vec![int(-3), int(1), int(1), int(1)], format!("coefficients {coeffs:?}"))?;
    let cert = certify_finite_count(&b.poly, Region::OpenPositiveQuadrant, &CertifyOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(cert.count == 1, format!("count {}", cert.count))?;
    let p = &cert.points[0];
    ensure(p.exclusion.contains(&int(1), &int(1)), "isolating box misses (1, 1)")?;
    ensure(is_solitary(&b.poly, &p.exclusion), "not solitary")?;
    Ok("1 point, box around (1, 1), solitary".into())
}

fn construction(k: i64, expected: usize) -> Check {
    let c = exact_construction(k).map_err(|e| e.to_string())?;
    let cert = certify_construction(&c, 6, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    ensure(cert.count == expected, format!("count {}", cert.count))?;
    let t = cert.t_used.as_ref().map(|t| t.to_string()).unwrap_or_default();
    Ok(format!("count {} at t = {t}", cert.count))
}

fn formulas() -> Check {
    for k in 1..=20 {
        for g in 0..=5 {
            let c = CurveClass::plane(k, g).unwrap();
            ensure(c.general_upper() == bounds::genus_upper_cp2(k, g).unwrap(), format!("plane k={k} g={g}"))?;
        }
    }
    for n in 0..=10 {
        for a in 1..=10 {
            for b in 0..=10 {
                for base in 0..=5 {
                    for g in 0..=5 {
                        let c = CurveClass::ruled(n, base, a, b, g).unwrap();
                        let h = bounds::hirzebruch_upper_genus(n, a, b, base, g).unwrap();
                        ensure(c.general_upper() == h, format!("ruled n={n} a={a} b={b} base={base} g={g}"))?;
                    }
                }
                ensure(bounds::hirzebruch_upper(n, 1, b, 0).unwrap() == n + 2 * b, format!("a=1 n={n} b={b}"))?;
                ensure(bounds::hirzebruch_upper(n, 2, b, 0).unwrap() == 5 * n + 5 * b - 1, format!("a=2 n={n} b={b}"))?;
            }
        }
    }
    for m in (2..=20).step_by(2) {
        for g in 0..=5 {
            let c = CurveClass::ellipsoid(m / 2, g).unwrap();
            ensure(c.general_upper() == bounds::ellipsoid_upper_genus(m, g).unwrap(), format!("ellipsoid m={m} g={g}"))?;
        }
    }
    for k in 1..=100 {
        let c = CurveClass::plane(k, 0).unwrap();
        ensure(c.pet_corollary_upper() == bounds::petrovsky_upper(k), format!("petrovsky k={k}"))?;
    }
    Ok("plane, ruled and ellipsoid grids agree".into())
}

fn asymptotics() -> Check {
    let tri = LatticePolygon::triangle(LatticePoint::new(0, 0), LatticePoint::new(1, 0), LatticePoint::new(0, 1))
        .map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for k in [10, 20, 40] {
        let cells = tile_with_cubic_triangle(&tri, k).map_err(|e| e.to_string())?.cubic_count() as f64;
        let gap = (4.0 * cells / (k * k) as f64 - 4.0 / 3.0).abs();
        ensure(gap <= TILING_BOUNDARY_CONSTANT / k as f64, format!("k={k}: gap {gap:.4}"))?;
        worst = worst.max(gap * k as f64);
    }
    Ok(format!("max k·gap = {worst:.2} ≤ C = {TILING_BOUNDARY_CONSTANT}"))
}

fn dessins() -> Check {
    for n in 1..=8u32 {
        let d = family_bigonal(n, 0, false).map_err(|e| e.to_string())?;
        let cross = d.vertices.iter().filter(|v| v.kind == VertexKind::Cross).count();
        let (b, c, _) = d.census();
        ensure((b, c, cross) == (2 * n as usize, 2 * n as usize, 2 * n as usize + 1), format!("census at n={n}"))?;
        for q in 0..n {
            for contracted in [false, true] {
                let d = family_bigonal(n, q, contracted).map_err(|e| e.to_string())?;
                ensure(d.validate().is_valid(), format!("bigonal n={n} q={q} contracted={contracted}"))?;
            }
        }
        for g in 1..=n + 1 {
            let d = family_genus(n, g).map_err(|e| e.to_string())?;
            ensure(d.validate().is_valid(), format!("genus n={n} g={g}"))?;
        }
    }
    for n in 1..=8 {
        for b in 0..=8 {
            for q in 0..n + b {
                let r = bigonal_counts(n, b, q).map_err(|e| e.to_string())?;
                let ok = r.solitary_total == 2 * n + 2 * b - 1
                    && (r.plus_half, r.minus_half) == (n + b + q, n + b - q - 1);
                ensure(ok, format!("counts n={n} b={b} q={q}"))?;
            }
        }
    }
    let c = cover_counts(9, 1).map_err(|e| e.to_string())?.total();
    ensure(c == 45, format!("cover count {c}"))?;
    Ok("families valid for n ≤ 8, censuses and counts match, cover(9, 1) = 45".into())
}

fn ellipsoid() -> Check {
    let upper: Vec<i64> = (3..=5).map(|m| bounds::ellipsoid_upper(m).unwrap()).collect();
    let exact: Vec<i64> = (3..=5).map(|m| bounds::ellipsoid_exact_small(m).unwrap()).collect();
    ensure(upper == [5, 10, 16] && exact == [5, 10, 15], format!("upper {upper:?}, exact {exact:?}"))?;
    Ok(format!("upper {upper:?} vs exact {exact:?}, gap 1 at m = 5"))
}

/// `a x + b y + c` with small integer coefficients.
fn line(rng: &mut ChaCha8Rng) -> [i64; 3] {
    loop {
        let l = [rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        if l[0] != 0 || l[1] != 0 {
            return l;
        }
    }
}

fn line_poly(l: [i64; 3]) -> SparseBivariate {
    SparseBivariate::from_int_terms(&[((1, 0), l[0]), ((0, 1), l[1]), ((0, 0), l[2])])
}

fn meet(l: [i64; 3], m: [i64; 3]) -> Option<(Rational, Rational)> {
    let det = l[0] * m[1] - l[1] * m[0];
    if det == 0 {
        return None;
    }
    let x = Rational::new((l[1] * m[2] - l[2] * m[1]).into(), det.into());
    let y = Rational::new((l[2] * m[0] - l[0] * m[2]).into(), det.into());
    Some((x, y))
}

fn on(l: [i64; 3], p: &(Rational, Rational)) -> bool {
    (int(l[0]) * &p.0 + int(l[1]) * &p.1 + int(l[2])) == int(0)
}

/// `(l₁l₂)² + (l₃l₄)²`, whose real zeros are the affine points where a line
/// of each pair meet. Samples with a point on three lines, or with two
/// proportional lines, are redrawn.
fn battery_case(rng: &mut ChaCha8Rng) -> (SparseBivariate, usize) {
    loop {
        let ls = [line(rng), line(rng), line(rng), line(rng)];
        let proportional = (0..4).any(|i| {
            (i + 1..4).any(|j| {
                let (a, b) = (ls[i], ls[j]);
                a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1]
            })
        });
        if proportional {
            continue;
        }
        let mut pts = BTreeSet::new();
        let mut degenerate = false;
        for i in 0..2 {
            for j in 2..4 {
                if let Some(p) = meet(ls[i], ls[j]) {
                    if ls.iter().filter(|&&l| on(l, &p)).count() > 2 {
                        degenerate = true;
                    }
                    pts.insert(p);
                }
            }
        }
        if degenerate {
            continue;
        }
        let q1 = &line_poly(ls[0]) * &line_poly(ls[1]);
        let q2 = &line_poly(ls[2]) * &line_poly(ls[3]);
        return (&(&q1 * &q1) + &(&q2 * &q2), pts.len());
    }
}

fn soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let opts = CertifyOptions::default();
    let mut histogram = [0usize; 5];
    for i in 0..100 {
        let (f, expected) = battery_case(&mut rng);
        let cert = certify_finite_count(&f, Region::Plane, &opts).map_err(|e| format!("case {i}: {e}"))?;
        ensure(cert.count == expected, format!("case {i}: certified {} expected {expected}", cert.count))?;
        histogram[expected] += 1;
    }
    let cross = SparseBivariate::from_int_terms(&[((2, 0), 1), ((0, 2), -1)]);
    match certify_finite_count(&cross, Region::Plane, &opts) {
        Err(Error::Inconclusive(_)) => {}
        other => return Err(format!("x² − y² gave {other:?}")),
    }
    Ok(format!("100 cases match (counts 0..4: {histogram:?}); x² − y² inconclusive"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Box<dyn Fn() -> Check>, Duration); 9] = [
        ("table reproduction", Box::new(table), Duration::from_secs(1)),
        ("cubic block", Box::new(cubic), Duration::from_secs(1)),
        ("degree-6 construction", Box::new(|| construction(3, 10)), Duration::from_secs(60)),
        ("degree-8 construction", Box::new(|| construction(4, 19)), Duration::from_secs(600)),
        ("formula cross-checks", Box::new(formulas), Duration::from_secs(5)),
        ("asymptotics", Box::new(asymptotics), Duration::from_secs(30)),
        ("dessin suite", Box::new(dessins), Duration::from_secs(5)),
        ("ellipsoid", Box::new(ellipsoid), Duration::from_secs(1)),
        ("soundness battery", Box::new(soundness), Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let line = match result {
            Ok(detail) if took <= *budget => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  {detail}, but took longer than {budget:?}"),
            Err(why) => format!("FAIL  {why}"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {}: {name}: {line} [{:.2?}]", i + 1, took);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
