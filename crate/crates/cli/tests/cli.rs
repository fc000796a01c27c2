use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use ybx_core::group::GroupTable;
use ybx_core::hopf::{dual_group_algebra, fixtures, group_algebra, AlgebraElement2};
use ybx_core::io::Document;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn ybx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybx")).args(args).env_remove("YBX_JOBS").output().unwrap()
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = ybx(args);
    let code = out.status.code().unwrap();
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, report)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn swap_passes_the_ybe() {
    let (code, report) = run(&["check-ybe", path(&data("swap2.json"))]);
    assert_eq!(code, 0);
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks"][0]["name"], "ybe");
    assert_eq!(report["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn failing_check_exits_with_one() {
    let (code, report) = run(&["check-ybe", path(&data("not_a_solution.json"))]);
    assert_eq!(code, 1);
    assert_eq!(report["passed"], false);
    assert!(!report["checks"][0]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["check-ybe".to_string(), path(&data("broken.json")).to_string()],
        vec!["check-ybe".to_string(), path(&data("truncated.json")).to_string()],
        vec!["check-ybe".to_string(), path(&data("missing.json")).to_string()],
        vec!["check-ybe".to_string(), path(&data("id.json")).to_string()],
        vec!["census".into(), "--size".into(), "5".into()],
    ] {
        let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let out = ybx(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn quiet_prints_nothing() {
    let out = ybx(&["check-ybe", path(&data("not_a_solution.json")), "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
    let out = ybx(&["check-ybe", path(&data("broken.json")), "-q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}

#[test]
fn extend_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("ext.json");
    let (code, report) = run(&[
        "extend", "--rb", path(&data("pb.json")), "--rc", path(&data("pc.json")), "--cross", path(&data("id.json")), "--out", path(&ext),
    ]);
    assert_eq!(code, 0);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["compat", "derived_relations", "ybe"]);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&ext).unwrap()).unwrap();
    assert_eq!(doc["pair_layout"]["b"], 2);
    assert_eq!(doc["size"], 4);
    assert_eq!(run(&["check-ybe", path(&ext)]).0, 0);
}

#[test]
fn incompatible_extension_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let ext = dir.path().join("ext.json");
    let (code, report) = run(&[
        "extend", "--rb", path(&data("pb.json")), "--rc", path(&data("pc.json")), "--cross", path(&data("bad.json")), "--out", path(&ext),
    ]);
    assert_eq!(code, 1);
    assert_eq!(report["checks"][0]["passed"], false);
    assert!(!ext.exists());
}

#[test]
fn y3_negative_control_names_the_relator() {
    let (pb, pc) = (data("pb.json"), data("pc.json"));
    let args = ["rep-check", "--presentation", "y3", "--rb", path(&pb), "--rc", path(&pc)];
    let (code, report) = run(&[&args[..], &["--cross", path(&data("bad.json"))]].concat());
    assert_eq!(code, 1);
    let failure = &report["checks"][0]["failures"][0];
    assert!(failure["relation"].as_str().unwrap().contains(" = "), "{failure}");
    let (code, _) = run(&[&args[..], &["--cross", path(&data("id.json"))]].concat());
    assert_eq!(code, 0);
}

#[test]
fn rep_check_with_a_quandle_braiding() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    assert_eq!(run(&["quandle", path(&data("dihedral3.json")), "--out", path(&s)]).0, 0);
    for p in ["vb3", "h3", "b4"] {
        assert_eq!(run(&["rep-check", "--presentation", p, "--r", path(&s)]).0, 0, "{p}");
    }
    let r = dir.path().join("r.json");
    assert_eq!(run(&["convert", path(&s), "--direction", "braid-to-yb", "--out", path(&r)]).0, 0);
    assert_eq!(run(&["rep-check", "--presentation", "vpn", "--n", "3", "--r", path(&r)]).0, 0);
    assert_eq!(run(&["simplicial", "--r", path(&r), "--max-n", "2"]).0, 0);
    assert_eq!(run(&["rep-check", "--presentation", "vp", "--r", path(&r)]).0, 2);
}

#[test]
fn census_counts() {
    let (code, report) = run(&["census", "--size", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["count"], 1);
    let (_, report) = run(&["census", "--size", "2", "--equation", "ybe", "--invertible"]);
    assert_eq!(report["result"]["count"], 5);
    let (_, report) = run(&["census", "--size", "2"]);
    assert_eq!(report["result"]["count"], 43);
    let (_, a) = run(&["census", "--size", "3", "--invertible", "--sample", "7", "--seed", "11"]);
    let (_, b) = run(&["census", "--size", "3", "--invertible", "--sample", "7", "--seed", "11"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["result"]["listed"], 7);
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    let (_, c) = run(&["census", "--size", "3", "--invertible", "--sample", "7", "--seed", "12"]);
    assert_ne!(a["inputs_digest"], c["inputs_digest"]);
}

#[test]
fn search_and_twist() {
    let (code, report) = run(&["search-cross", "--rb", path(&data("pb.json")), "--rc", path(&data("pc.json")), "--invertible"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["count"], 8);
    let (code, report) = run(&["twist", "--rb", path(&data("swap2.json")), "--rc", path(&data("swap2.json")), "--cross", path(&data("bad.json"))]);
    assert_eq!(code, 0, "{report}");
}

#[test]
fn matrices() {
    assert_eq!(run(&["cybe", path(&data("sl2_r.json"))]).0, 0);
    assert_eq!(run(&["qybe", path(&data("sl2_r.json"))]).0, 1);
    let (code, report) = run(&["place", path(&data("placed.json"))]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["rows"], 2);
    let (code, report) = run(&["classical-extend", "--rb", path(&data("sl2_r.json")), "--rc", path(&data("sl2_r.json")), "--cross", path(&data("sl2_r.json"))]);
    assert_eq!(code, 1);
    assert_eq!(report["checks"][0]["name"], "compat");
    assert!(report.get("result").is_none());
}

#[test]
fn quantum_extension_of_permutation_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, m: &ybx_core::matrix::RationalMatrix| {
        let p = dir.path().join(name);
        std::fs::write(&p, Document::matrix(m).to_json()).unwrap();
        p
    };
    let p = write("p.json", &ybx_core::matrix::RationalMatrix::swap(2));
    let id = write("id.json", &ybx_core::matrix::RationalMatrix::identity(4));
    let out = dir.path().join("big.json");
    let (code, report) = run(&["quantum-extend", "--rb", path(&p), "--rc", path(&p), "--cross", path(&id), "--out", path(&out)]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(run(&["check-ybe", path(&out)]).0, 0);
}

#[test]
fn hopf_commands() {
    let dir = tempfile::tempdir().unwrap();
    let save = |name: &str, d: Document| {
        let p = dir.path().join(name);
        std::fs::write(&p, d.to_json()).unwrap();
        p
    };
    let z2 = group_algebra(&GroupTable::cyclic(2));
    let z2d = dual_group_algebra(&GroupTable::cyclic(2));
    let a = save("a.json", Document::hopf(&z2));
    let d = save("d.json", Document::hopf(&z2d));
    let r = save("r.json", Document::elem2(&fixtures::z2_group_r()));
    let one = save("one.json", Document::elem2(&AlgebraElement2::one(&z2, &z2)));
    let (code, report) = run(&["hopf-check", path(&a), "--r", path(&r)]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["result"]["cocommutative"], true);
    let one_d = save("one_d.json", Document::elem2(&AlgebraElement2::one(&z2d, &z2d)));
    let (code, _) = run(&["hopf-check", path(&d), "--r", path(&one_d)]);
    assert_eq!(code, 0);
    let out = dir.path().join("prod.json");
    let args = ["hopf-product", "--b", path(&a), "--c", path(&a), "--cross", path(&one), "--rb", path(&r), "--rc", path(&r), "--out", path(&out)];
    let (code, report) = run(&args);
    assert_eq!(code, 0, "{report}");
    assert_eq!(report["checks"].as_array().unwrap().len(), 5);
    assert_eq!(run(&["hopf-check", path(&out)]).0, 0);
}

#[test]
fn words_and_presentations() {
    let (code, report) = run(&["doubling", "--word", "l12", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["word"], "l14 l24 l13 l23");
    assert_eq!(report["result"]["normal_form"], "l14 l13 l24 l23");
    let (_, report) = run(&["doubling", "--word", "s1", "--n", "3", "--braid"]);
    assert_eq!(report["result"]["word"], "s2 s3 s1 s2");
    let (code, report) = run(&["presentation", "--name", "y2"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["generators"].as_array().unwrap().len(), 4);
    assert_eq!(run(&["doubling", "--word", "l19", "--n", "3"]).0, 2);
    let (code, report) = run(&["counterexamples"]);
    assert_eq!(code, 0);
    assert_ne!(report["result"]["d0_lhs_image"], report["result"]["d0_rhs_image"]);
}

#[test]
fn report_file_and_jobs_env() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ybx"))
        .args(["census", "--size", "2", "--report", path(&rep)])
        .env("YBX_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(report["result"]["count"], 43);
}
