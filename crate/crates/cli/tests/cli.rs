use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use comat::Com;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn comat(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comat"))
        .args(&args[..1])
        .arg(file)
        .args(&args[1..])
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_accepts_and_rejects() {
    let out = comat(&["check"], &fixture("gen3_com.json"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["is_oriented_matroid"], true);
    for name in ["se_violation.json", "fs_violation.json"] {
        let out = comat(&["check"], &fixture(name));
        assert_eq!(out.status.code(), Some(1), "{name}");
    }
    for name in ["empty.json", "coloop.json", "line.json"] {
        assert_eq!(comat(&["check"], &fixture(name)).status.code(), Some(0), "{name}");
    }
}

#[test]
fn verify_gen3() {
    let out = comat(&["verify"], &fixture("gen3_com.json"));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["presentation"]["counts"], serde_json::json!([1, 3, 2]));
    let det = v["presentation"]["nbc_det"].as_str().unwrap();
    assert!(det == "1" || det == "-1");
}

#[test]
fn verify_rejects_non_com_with_report() {
    let out = comat(&["verify"], &fixture("se_violation.json"));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["kind"], "se-violation");
}

#[test]
fn realize_then_circuits_on_ex4() {
    let dir = tempfile::tempdir().unwrap();
    let out = comat(&["realize"], &fixture("ex4.json"));
    assert_eq!(out.status.code(), Some(0));
    let path = dir.path().join("ex4_com.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let l: Com = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((l.n(), l.len()), (4, 23));
    let c = json(&comat(&["circuits"], &path));
    assert_eq!(c["circuits"], serde_json::json!(["-+-0", "-+0-", "00+-", "+-+0"]));
    // arrangement files are realized on the fly
    assert_eq!(json(&comat(&["circuits"], &fixture("ex4.json")))["circuits"], c["circuits"]);
}

#[test]
fn com_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("gen3_com.json")).unwrap();
    let l: Com = serde_json::from_str(&text).unwrap();
    let path = dir.path().join("again.json");
    std::fs::write(&path, serde_json::to_string(&l).unwrap()).unwrap();
    let out = comat(&["minors"], &path);
    let v = json(&out);
    assert_eq!(v["labels"], serde_json::json!([0, 1, 2]));
    let back: Com = serde_json::from_value(v).unwrap();
    assert_eq!(back, l);
}

#[test]
fn minors_keep_labels() {
    let out = comat(&["minors", "--delete", "0", "--contract", "2"], &fixture("gen3_com.json"));
    let v = json(&out);
    assert_eq!(v["labels"], serde_json::json!([1]));
    assert_eq!(v["covectors"], serde_json::json!(["-", "0", "+"]));
}

#[test]
fn presentation_formats() {
    let f = fixture("gen3_com.json");
    let text = comat(&["presentation", "--format", "text", "--mode", "gr"], &f);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("mode: gr"));
    assert!(text.contains("e0+^2"));
    let cas = String::from_utf8(comat(&["presentation", "--format", "cas", "--symmetric"], &f).stdout).unwrap();
    assert!(cas.starts_with("-- rees presentation"));
    assert!(cas.contains("Q = R / I;"));
    let v = json(&comat(&["presentation", "--mode", "vg", "--reduced"], &f));
    assert!(v["relations"].as_array().is_some_and(|r| !r.is_empty()));
}

#[test]
fn nbc_and_hilbert() {
    let f = fixture("gen3.json");
    let v = json(&comat(&["nbc", "--order", "2,1,0"], &f));
    assert_eq!(v["counts"], serde_json::json!([1, 3, 2]));
    let v = json(&comat(&["hilbert"], &f));
    assert_eq!(v["series"], "1 + 3t + 2t^2");
    assert_eq!(json(&comat(&["topes"], &f))["topes"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "covectors": ["+x"]}"#).unwrap();
    assert_eq!(comat(&["check"], &bad).status.code(), Some(2));
    std::fs::write(&bad, r#"{"n": 2, "covectors": ["+"]}"#).unwrap();
    assert_eq!(comat(&["check"], &bad).status.code(), Some(2));
    assert_eq!(comat(&["check"], &dir.path().join("missing.json")).status.code(), Some(2));
    let f = fixture("gen3_com.json");
    assert_eq!(comat(&["nbc", "--order", "0,1"], &f).status.code(), Some(2));
    assert_eq!(comat(&["minors", "--delete", "7"], &f).status.code(), Some(2));
    assert_eq!(comat(&["topes", "--format", "cas"], &f).status.code(), Some(2));
    assert_eq!(comat(&["presentation", "--mode", "xyz"], &f).status.code(), Some(2));
}

#[test]
fn corpus_is_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_comat"))
            .args(["corpus", "--seed", "11", "--count", "4", "--dim", "2", "--n", "4"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let seeds: Vec<u64> = v["seeds"].as_array().unwrap().iter().map(|s| s["seed"].as_u64().unwrap()).collect();
    assert_eq!(seeds, [11, 12, 13, 14]);
}
