use std::fs;
use std::path::PathBuf;

use clarkit::cli::run;

const C60: &str = "5,6,6,6,6,6,5,6,5,6,5,6,5,6,5,6,6,5,6,5,6,5,6,5,6,5,6,6,6,6,6,5";
const DODECAHEDRON: &str = "5,5,5,5,5,5,5,5,5,5,5,5";

fn clarkit(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(
        std::iter::once("clarkit").chain(args.iter().copied()),
        &mut out,
    );
    (code, String::from_utf8(out).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("clarkit-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_reports_face_counts() {
    assert_eq!(
        clarkit(&["validate", C60]),
        (
            0,
            "fullerene: n=60, pentagons=12, hexagons=20, cλ=5\n".into()
        )
    );
    let (code, out) = clarkit(&["validate", DODECAHEDRON]);
    assert_eq!(code, 0);
    assert!(out.starts_with("fullerene: n=20"));
}

#[test]
fn exit_codes() {
    assert_eq!(clarkit(&["validate", "5,6,x"]).0, 2);
    assert_eq!(clarkit(&["validate", "5,5,5,5,5,5"]).0, 1);
    assert_eq!(clarkit(&["validate", "5,5,7"]).0, 2);
    assert_eq!(clarkit(&["bogus"]).0, 2);
    assert_eq!(clarkit(&["--workers", "0", "enumerate", "--n", "20"]).0, 2);
    assert_eq!(clarkit(&["enumerate", "--n", "21"]).0, 1);
    // a cube is cubic and planar but not a fullerene
    let cube =
        "8\n0: 1 3 4\n1: 0 5 2\n2: 1 6 3\n3: 2 7 0\n4: 0 7 5\n5: 1 4 6\n6: 2 5 7\n7: 3 6 4\n";
    let dir = scratch("cube");
    let path = dir.join("cube.adj");
    fs::write(&path, cube).unwrap();
    assert_eq!(clarkit(&["validate", path.to_str().unwrap()]).0, 1);
    assert_eq!(
        clarkit(&["validate", "--format", "adjacency", "3\n0: 1"]).0,
        2
    );
}

#[test]
fn clar_summary_and_formulas() {
    assert_eq!(
        clarkit(&["clar", C60]),
        (0, "clar=8 bound=8 extremal=yes formulas=5\n".into())
    );
    assert_eq!(
        clarkit(&["clar", DODECAHEDRON]),
        (0, "clar=0 bound=1 extremal=no formulas=1\n".into())
    );
    let (_, out) = clarkit(&["clar", C60, "--formulas"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("formula ")).count(), 5);
    let (_, json) = clarkit(&["clar", C60, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["clar"], 8);
    assert_eq!(v["formula_count"], 5);
}

#[test]
fn svg_output_is_reproducible() {
    let dir = scratch("svg");
    let (a, b) = (dir.join("a.svg"), dir.join("b.svg"));
    assert_eq!(clarkit(&["clar", C60, "--svg", a.to_str().unwrap()]).0, 0);
    assert_eq!(clarkit(&["clar", C60, "--svg", b.to_str().unwrap()]).0, 0);
    let text = fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(clarkit(&["fries", C60, "--svg", a.to_str().unwrap()]).0, 0);
}

#[test]
fn fries_and_classify() {
    assert_eq!(
        clarkit(&["fries", C60]),
        (0, "fries=20 pentagon-free=yes\n".into())
    );
    let (code, out) = clarkit(&["classify", C60]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains(": P ")).count(), 12);
    assert!(out.ends_with("criterion=extremal direct=extremal class=B1/B2\n"));
    let caps = "5,5,5,5,5,5,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,6,5,5,5,5,5,5";
    let (_, out) = clarkit(&["classify", caps]);
    assert!(out.contains(": Other "));
    assert!(out.ends_with("criterion=not-extremal direct=not-extremal class=-\n"));
    let (_, json) = clarkit(&["classify", DODECAHEDRON, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!(v["criterion"].is_null());
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}

#[test]
fn census_files_validate_back() {
    let dir = scratch("census");
    let manifest = dir.join("c32.tsv");
    let m = manifest.to_str().unwrap();
    assert_eq!(
        clarkit(&["census", "--n", "32", "--out", m]),
        (0, "isomers=6 extremal=0\n".into())
    );
    for part in ["c32.tsv", "c32.analysis.tsv"] {
        let (code, out) = clarkit(&["validate", dir.join(part).to_str().unwrap()]);
        assert_eq!((code, out.lines().count()), (0, 6), "{part}");
    }
    let breakdown = fs::read_to_string(dir.join("c32.breakdown.tsv")).unwrap();
    assert!(breakdown.ends_with("total\t0\n"));
    assert_eq!(
        clarkit(&["census", "--n", "22", "--out", m]),
        (0, "isomers=0 extremal=0\n".into())
    );
    assert_eq!(
        clarkit(&["census", "--n", "20", "--out", m]),
        (0, "isomers=1 extremal=0\n".into())
    );
    let (code, out) = clarkit(&["--workers", "1", "enumerate", "--n", "36"]);
    assert_eq!((code, out.lines().count()), (0, 15));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_clarkit");
    let ok = std::process::Command::new(bin)
        .args(["clar", C60])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "clar=8 bound=8 extremal=yes formulas=5\n"
    );
    let bad = std::process::Command::new(bin)
        .args(["validate", "5,5,5,5,5,5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let env = std::process::Command::new(bin)
        .args(["enumerate", "--n", "24"])
        .env("CLARKIT_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}
