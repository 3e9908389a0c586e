use std::path::PathBuf;
use std::process::{Command, Output};

fn vinberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vinberg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vinberg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn algebra_verify_bundled() {
    let o = vinberg(&["algebra", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "jacobi: 0 violations / model: 66 pairs OK"
    );
}

#[test]
fn algebra_verify_flipped_sign() {
    let text = vinberg::canonical::ALGEBRA_JSON;
    let mut doc: serde_json::Value = serde_json::from_str(text).unwrap();
    // negate the first coefficient of the first listed bracket
    let entry = &mut doc["brackets"][0][2];
    let key = entry.as_object().unwrap().keys().next().unwrap().clone();
    let value = entry[&key].as_str().unwrap().to_string();
    let flipped = match value.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{value}"),
    };
    entry[&key] = serde_json::Value::String(flipped);
    let path = scratch("flipped.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = vinberg(&["--algebra", path.to_str().unwrap(), "algebra", "verify"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatched"));
}

#[test]
fn algebra_verify_missing_file() {
    let o = vinberg(&[
        "--algebra",
        "/definitely/not/here.json",
        "algebra",
        "verify",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ideals_expect_and_dot() {
    let dot = scratch("lattice.dot");
    let o = vinberg(&["ideals", "--expect", "14", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "14 ideals, Certified");
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.contains("label=\"<E3>\""));
    assert_eq!(text.matches("->").count(), 21);
}

#[test]
fn ideals_wrong_expectation_and_guard() {
    assert_eq!(
        vinberg(&["ideals", "--expect", "13"]).status.code(),
        Some(1)
    );
    assert_eq!(vinberg(&["ideals", "--max", "4"]).status.code(), Some(2));
}

#[test]
fn coadjoint_verdicts() {
    let o = vinberg(&[
        "coadjoint",
        "classify",
        "--xi3",
        "-1",
        "--eta3",
        "0",
        "--n",
        "1",
        "--nprime",
        "1",
        "--kernel",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "GenericCS(1,1); isotropy = <W1,W2>; crosscheck OK"
    );
    let o = vinberg(&[
        "coadjoint",
        "classify",
        "--xi3",
        "0",
        "--eta3",
        "1",
        "--n",
        "0",
        "--nprime",
        "0",
    ]);
    assert_eq!(stdout(&o).trim(), "Character");
    let o = vinberg(&[
        "coadjoint",
        "classify",
        "--xi3",
        "2",
        "--eta3",
        "0",
        "--n",
        "1",
        "--nprime",
        "1",
    ]);
    assert_eq!(stdout(&o).trim(), "NotUnitarizable");
    let o = vinberg(&[
        "coadjoint",
        "classify",
        "--xi3",
        "-0.5",
        "--n",
        "2",
        "--nprime",
        "3",
    ]);
    assert_eq!(stdout(&o).trim(), "GenericCS(2,3)");
}

#[test]
fn coadjoint_non_integer_n() {
    let o = vinberg(&[
        "coadjoint",
        "classify",
        "--xi3",
        "-1",
        "--n",
        "1.5",
        "--nprime",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn coadjoint_json() {
    let o = vinberg(&[
        "--json",
        "coadjoint",
        "classify",
        "--xi3",
        "0",
        "--eta3",
        "5/2",
        "--n",
        "0",
        "--nprime",
        "3",
        "--kernel",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "NonGenericCS");
    assert_eq!(v["eta3"], "5/2");
    assert_eq!(v["nprime"], 3);
    assert!(v["isotropy_dim"].as_u64().unwrap() > 2);
}

#[test]
fn model_suites() {
    let o = vinberg(&["model", "test", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        vinberg(&["model", "test", "--samples", "20", "--tol", "1e-15"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        vinberg(&["model", "test", "--samples", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_output_is_reproducible() {
    let args = ["--json", "--seed", "7", "model", "test", "--samples", "10"];
    let a = vinberg(&args);
    let b = vinberg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_flag_is_rejected() {
    assert_eq!(
        vinberg(&["algebra", "verify", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(vinberg(&[]).status.code(), Some(2));
}

#[test]
fn model_act_scales_base_point() {
    let params = r#"{"sl2_1":["1","0","0","1"],"sl2_2":["1","0","0","1"],"a3":"2","lambda1p":"0","mu1p":"0","lambda2p":"0","mu2p":"0","kappa":"0"}"#;
    let o = vinberg(&[
        "--json",
        "model",
        "act",
        "--params",
        params,
        "--point",
        "0,1,0,1,0,1,0,0,0,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let image: Vec<f64> = serde_json::from_value(v["image"].clone()).unwrap();
    assert_eq!(
        image,
        vec![0.0, 1.0, 0.0, 1.0, 0.0, 4.0, 0.0, 0.0, 0.0, 0.0]
    );
    let bad = params.replace("\"a3\":\"2\"", "\"a3\":\"-2\"");
    let o = vinberg(&[
        "model",
        "act",
        "--params",
        &bad,
        "--point",
        "0,1,0,1,0,1,0,0,0,0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
