use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spec(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lietorus")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn build_tensor_sl2_prints_a_summary() {
    let o = run(&["build", "--spec", &spec("tensor_sl2.json"), "--window", "1"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_eq!(v["construction"], "Tensor");
    assert_eq!(v["root_system"], "A1");
    assert_eq!(v["nullity"], 1);
    assert_eq!(v["atoms"], 9);
}

#[test]
fn build_rejects_a_quantum_matrix_with_q12_q21_not_one() {
    let o = run(&["build", "--spec", &spec("quantum_bad.json")]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("q[0][1] q[1][0] must be 1"), "{err}");
}

#[test]
fn build_tkk_of_the_albert_torus() {
    let o = run(&["build", "--spec", &spec("tkk_albert.json")]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_eq!(v["construction"], "TKK");
    assert_eq!(v["nullity"], 3);
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{not json").unwrap();
    let unknown = dir.path().join("unknown.json");
    std::fs::write(&unknown, r#"{"construction": "e8_magic"}"#).unwrap();
    for args in [
        vec!["build", "--spec", broken.to_str().unwrap()],
        vec!["build", "--spec", unknown.to_str().unwrap()],
        vec!["build", "--spec", "/nonexistent/spec.json"],
        vec!["verify", "--suite", "torus", "--spec", &spec("tensor_sl2.json")],
        vec!["verify", "--suite", "nonsense", "--spec", &spec("tensor_sl2.json")],
        vec!["build", "--spec", &spec("tensor_sl2.json"), "--window", "-1"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

#[test]
fn lietorus_suite_on_tensor_sl2_at_radius_three() {
    let o = run(&["verify", "--suite", "lietorus", "--spec", &spec("tensor_sl2.json"), "--window", "3"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_eq!(v["window"], 3);
    assert_eq!(v["atoms_checked"], 21);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn involution_suite_with_the_identity_injected_fails() {
    let o = run(&["verify", "--suite", "involution", "--spec", &spec("tensor_sl2_identity.json")]);
    assert_eq!(code(&o), 1);
    let v = json_out(&o);
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, ["degree_reversal", "root_reversal", "cartan_negation"]);
}

#[test]
fn involution_suite_reports_a_missing_anti_involution_as_a_violation() {
    let o = run(&["verify", "--suite", "involution", "--spec", &spec("sl4_zeta3.json"), "--window", "1"]);
    assert_eq!(code(&o), 1);
    let v = json_out(&o);
    assert_eq!(v["checks"][0]["name"], "chevalley");
    assert!(v["checks"][0]["witness"]["error"].as_str().unwrap().contains("anti-involution"));
}

#[test]
fn eala_suite_on_affine_sl2() {
    let o = run(&["verify", "--suite", "eala", "--spec", &spec("affine_sl2.json"), "--window", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v = json_out(&o);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for a in ["A1", "A2", "A3", "A5", "A6"] {
        assert!(names.contains(&a), "{names:?}");
    }
}

#[test]
fn negative_controls_exit_one_with_witnesses() {
    let o = run(&["verify", "--suite", "lietorus", "--spec", &spec("sl2_corrupted.json")]);
    assert_eq!(code(&o), 1);
    let v = json_out(&o);
    let jacobi = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "jacobi").unwrap();
    assert_eq!(jacobi["status"], "fail");
    assert!(jacobi["witness"]["example"]["lhs"].is_string());

    let o = run(&["verify", "--suite", "eala", "--spec", &spec("kappa_self_pairing.json")]);
    assert_eq!(code(&o), 1);
    let v = json_out(&o);
    let alt = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "cocycle_alternating").unwrap();
    assert_eq!(alt["status"], "fail");
    assert_eq!(alt["witness"]["example"]["expr"], "κ(d,d)");
}

#[test]
fn torus_suite_passes_for_zeta4_and_flags_albert() {
    let o = run(&["verify", "--suite", "torus", "--spec", &spec("quantum_zeta4.json")]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = json_out(&o)["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"quantum_oracle".to_string()));
    let o = run(&["verify", "--suite", "torus", "--spec", &spec("albert.json")]);
    assert_eq!(code(&o), 1);
}

#[test]
fn export_of_finite_sl2() {
    let o = run(&["export", "--spec", &spec("sl2_finite.json")]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert_eq!(v["atoms"].as_array().unwrap().len(), 3);
    let rows = v["brackets"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for r in rows {
        assert!(r["i"].as_u64() < r["j"].as_u64());
    }
}

#[test]
fn export_of_tensor_sl2_at_radius_one_has_nine_atoms_in_order() {
    let o = run(&["export", "--spec", &spec("tensor_sl2.json"), "--window", "1"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    let atoms = v["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 9);
    let keys: Vec<(Vec<i64>, Vec<i64>, u64)> = atoms
        .iter()
        .map(|a| {
            let ints = |x: &Value| x.as_array().unwrap().iter().map(|y| y.as_i64().unwrap()).collect::<Vec<_>>();
            (ints(&a["root"]), ints(&a["degree"]), a["index"].as_u64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn export_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&["export", "--spec", &spec("tkk_jordan_plus.json"), "--window", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "--suite", "lietorus", "--spec", &spec("tkk_hermitian.json"), "--window", "1", "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn lift_reports_whether_the_pair_is_invariant() {
    let o = run(&["lift", "--spec", &spec("skew_example.json")]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    let lift = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "lift").unwrap();
    assert_eq!(lift["witness"]["involution_of_source"], false);

    let o = run(&["lift", "--spec", &spec("skew_example_meet.json")]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    let lift = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "lift").unwrap();
    assert_eq!(lift["witness"]["involution_of_source"], true);
}

#[test]
fn lift_of_the_identity_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("id.json");
    std::fs::write(
        &p,
        r#"{"lie": {"construction": "tensor", "g": {"builtin": ["A", 1]}, "n": 1, "involution": "identity"},
            "D": {"kind": "degree_only", "U": "full"}}"#,
    )
    .unwrap();
    let o = run(&["lift", "--spec", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let v = json_out(&o);
    let lift = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "lift").unwrap();
    assert!(lift["witness"]["error"].as_str().unwrap().contains("pre-Chevalley"));
}

#[test]
fn text_format_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.txt");
    let o = run(&["verify", "--suite", "involution", "--spec", &spec("multiloop_sl2.json"), "--format", "text", "--out", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&p).unwrap();
    assert!(text.lines().any(|l| l == "PASS cartan_negation"), "{text}");
}

#[test]
fn every_shipped_spec_parses() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let o = run(&["build", "--spec", path.to_str().unwrap(), "--window", "0"]);
        let want = if path.file_name().unwrap() == "quantum_bad.json" { 2 } else { 0 };
        assert_eq!(code(&o), want, "{}: {}", path.display(), String::from_utf8_lossy(&o.stderr));
        seen += 1;
    }
    assert!(seen >= 15);
}
