use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solitary")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("solitary-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn table_rows() {
    let out = run(&["table"]);
    assert!(out.status.success());
    let rows = json(&out);
    let row = |k: usize| (rows[k - 1]["upper"].as_i64().unwrap(), rows[k - 1]["lower"].as_i64().unwrap());
    assert_eq!(row(1), (1, 1));
    assert_eq!(row(6), (46, 45));
    assert_eq!(row(9), (109, 98));
    let csv = String::from_utf8(run(&["table", "--format", "csv"]).stdout).unwrap();
    assert_eq!(csv.lines().count(), 11);
    assert!(csv.contains("\n6,46,45,petrovsky,literature\n"));
}

#[test]
fn bounds_examples() {
    let e = json(&run(&["bounds", "--surface", "ellipsoid", "-m", "5"]));
    assert_eq!((e["ellipsoid_upper"].as_i64(), e["exact"].as_i64()), (Some(16), Some(15)));
    let h = json(&run(&["bounds", "--surface", "hirzebruch", "-n", "1", "-a", "2", "-b", "1"]));
    assert_eq!(h["hirzebruch_upper"], 9);
    let p = json(&run(&["bounds", "--surface", "p2", "-k", "4", "-g", "0"]));
    assert_eq!((p["genus_upper"].as_i64(), p["petrovsky_upper"].as_i64()), (Some(17), Some(19)));
    assert_eq!(run(&["bounds", "--surface", "p2"]).status.code(), Some(2));
}

#[test]
fn construct_then_certify_degree_six() {
    let dir = scratch("k3");
    let out = run(&["construct", "-k", "3", "--out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 10);
    for f in ["construction.json", "subdivision.json", "subdivision.svg", "polynomial.json", "certificate.json"] {
        assert!(dir.join(f).exists(), "{f} missing");
    }
    let again = run(&["certify", dir.join("polynomial.json").to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(json(&again)["count"], 10);
}

#[test]
fn large_construction_skips_certification() {
    let out = run(&["construct", "-k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["predicted"], 30);
    assert!(String::from_utf8_lossy(&out.stderr).contains("certification skipped"));
    assert_eq!(run(&["certify", "-k", "5"]).status.code(), Some(2));
}

#[test]
fn crossing_lines_are_inconclusive() {
    let dir = scratch("cross");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    std::fs::write(&path, r#"{"terms":[{"e":[2,0],"c":"1"},{"e":[0,2],"c":"-1"}]}"#).unwrap();
    let out = run(&["certify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn dessin_examples() {
    let b = json(&run(&["dessin", "bigonal", "-n", "1"]));
    assert_eq!(b["valid"], true);
    assert_eq!(b["counts"]["report"]["plus_half"], 1);
    assert_eq!(b["counts"]["report"]["minus_half"], 0);
    let g = json(&run(&["dessin", "genus", "-n", "9", "--genus-base", "1"]));
    assert_eq!(g["counts"]["total"], 45);
    assert_eq!(run(&["dessin", "bigonal", "-n", "2", "--q", "5"]).status.code(), Some(2));
    let svg = run(&["dessin", "genus", "-n", "2", "--svg"]);
    assert!(String::from_utf8(svg.stdout).unwrap().starts_with("<svg"));
}

#[test]
fn outputs_are_reproducible() {
    for args in [&["table", "--format", "csv"][..], &["dessin", "bigonal", "-n", "3", "--q", "1"], &["subdivide", "-k", "4"]] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
