use std::process::Command;

use serde_json::Value;

fn twistkit(args: &[&str]) -> (i32, Value, Value) {
    let o = Command::new(env!("CARGO_BIN_EXE_twistkit")).args(args).env_remove("TWISTKIT_CORPUS").output().unwrap();
    let parse = |b: &[u8]| if b.is_empty() { Value::Null } else { serde_json::from_slice(b).unwrap() };
    (o.status.code().unwrap(), parse(&o.stdout), parse(&o.stderr))
}

#[test]
fn spec_examples() {
    let (code, v, _) = twistkit(&["homology", "--complex", "rp2_min", "--system", "w1", "--degree", "2"]);
    assert_eq!((code, v["rank"].as_u64(), v["torsion"].as_array().map(Vec::len)), (0, Some(1), Some(0)));
    let (_, v, _) = twistkit(&["degree", "--map", "antipodal", "--source", "octahedron"]);
    assert_eq!(v, serde_json::json!({"degree": -1}));
    let (_, v, _) = twistkit(&["conj-sign", "--group", "S3", "--char", "sign", "--element", "(12)", "--degree", "1"]);
    assert_eq!(v["sign"], -1);
}

#[test]
fn errors_go_to_stderr_with_exit_codes() {
    let (code, out, err) = twistkit(&["homology", "--complex", "rp2_min", "--degree", "9", "--system", "missing.json"]);
    assert_eq!(code, 2);
    assert!(out.is_null());
    assert_eq!(err["error"], "Io");
    let (code, _, err) = twistkit(&["fundamental", "--complex", "wedge"]);
    assert_eq!((code, err["error"].as_str()), (3, Some("NotUnique")));
    let (code, _, err) = twistkit(&["conj-sign", "--group", "Z2", "--char", "sign", "--element", "1", "--degree", "1"]);
    assert_eq!((code, err["error"].as_str()), (3, Some("VacuousSign")));
}

#[test]
fn twist_mismatch_is_a_math_error() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("edge.json");
    std::fs::write(&sub, r#"{"simplices": [[1, 0], [1, 1], [1, 2]]}"#).unwrap();
    let sys = dir.path().join("tw.json");
    std::fs::write(&sys, r#"{"edge_signs": [-1, 1, 1]}"#).unwrap();
    let zero = dir.path().join("zero.json");
    std::fs::write(&zero, r#"{"polarization_bases": [0], "nonforest_bits": {}}"#).unwrap();
    let (code, _, err) = twistkit(&[
        "extend-system",
        "--complex",
        "circle3",
        "--sub",
        sub.to_str().unwrap(),
        "--sub-system",
        sys.to_str().unwrap(),
        "--twist",
        zero.to_str().unwrap(),
    ]);
    assert_eq!((code, err["error"].as_str()), (3, Some("TwistMismatch")));
}

#[test]
fn invalid_complex_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    // the two faces of the triangle's edge 2 disagree with the edges it meets
    std::fs::write(&bad, r#"{"dim": 2, "simplices": [3, 3, 1], "faces": {"1": [[1, 0], [2, 0], [2, 1]], "2": [[0, 1, 2]]}}"#).unwrap();
    let (code, v, _) = twistkit(&["validate", "--complex", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["complex"]["valid"], false);
}

#[test]
fn corpus_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("complexes")).unwrap();
    std::fs::write(dir.path().join("complexes/seg.json"), r#"{"dim": 1, "simplices": [2, 1], "faces": {"1": [[1, 0]]}}"#).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_twistkit"))
        .args(["homology", "--complex", "seg", "--degree", "0"])
        .env("TWISTKIT_CORPUS", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 1);
    let (code, _, _) = twistkit(&["homology", "--complex", "seg", "--degree", "0"]);
    assert_eq!(code, 2);
}
