//! Black-box tests of the command-line interface: exit-code contract,
//! report emission, and determinism of sampling.

use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aw-lattice"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_valid_instance_exits_zero() {
    let o = cli(&["build", "--family", "E", "--d", "3", "--params", "1/4,3,2/7,5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("relations: PASS"));
}

#[test]
fn build_invalid_constraint_exits_one() {
    // k0^2 != q^{-d-1}
    let o = cli(&["build", "--family", "E", "--d", "3", "--params", "1/3,3,2/7,5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("k0"));
}

#[test]
fn usage_error_exits_one() {
    let o = cli(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cli(&["build", "--family", "E"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn show_matrices_prints_exact_rationals() {
    let o = cli(&[
        "build",
        "--family",
        "E",
        "--d",
        "1",
        "--params",
        "1/2,3,5,7",
        "--show-matrices",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("t0 ="));
    assert!(out.contains("1/2"), "matrices must print as num/den: {out}");
}

#[test]
fn lattice_confirmed_exits_zero_and_writes_reports() {
    let dir = std::env::temp_dir();
    let json = dir.join("aw_lattice_cli_test.json");
    let dot = dir.join("aw_lattice_cli_test.dot");
    let o = cli(&[
        "lattice",
        "--family",
        "O",
        "--d",
        "4",
        "--params",
        "1,3,2/7,7/192",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("chain4"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["status"], "CONFIRMED");
    assert_eq!(report["lattice"]["shape"], "chain4");
    let dims: Vec<u64> = report["lattice"]["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![0, 2, 3, 5]);
    let dot_body = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_body.starts_with("digraph"));
    assert_eq!(dot_body.matches(" -> ").count(), 3);
    std::fs::remove_file(json).ok();
    std::fs::remove_file(dot).ok();
}

#[test]
fn lattice_handles_standalone_vd_modules() {
    let o = cli(&["lattice", "--family", "VD", "--d", "3", "--params", "2,3,5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("chain2"));
}

#[test]
fn custom_q_is_honored() {
    // With q = 3 the E constraint becomes k0^2 = 3^{-d-1}.
    let o = cli(&[
        "build", "--family", "E", "--d", "1", "--params", "1/3,2,5,7", "--q", "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = cli(&[
        "build", "--family", "E", "--d", "1", "--params", "1/2,2,5,7", "--q", "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sampling_is_deterministic_across_runs() {
    let args = [
        "sample", "--family", "E", "--d", "3", "--count", "3", "--mode", "generic",
        "--seed", "5",
    ];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let specs: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(specs.as_array().unwrap().len(), 3);
    assert_eq!(specs[0]["seed"], 5);
}

#[test]
fn report_keys_conform_to_shipped_schema() {
    let dir = std::env::temp_dir();
    let json = dir.join("aw_lattice_schema_test.json");
    let o = cli(&[
        "lattice",
        "--family",
        "E",
        "--d",
        "3",
        "--params",
        "1/4,3,2/7,5",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let schema_path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schema/report.schema.json"
    );
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let allowed = schema["properties"].as_object().unwrap();
    for key in report.as_object().unwrap().keys() {
        assert!(allowed.contains_key(key), "report key {key} missing in schema");
    }
    for required in schema["required"].as_array().unwrap() {
        let key = required.as_str().unwrap();
        assert!(
            report.get(key).is_some(),
            "required schema key {key} missing in report"
        );
    }
    // Spot-check the rational pattern on an emitted scalar.
    let pattern = schema["definitions"]["rational"]["pattern"].as_str().unwrap();
    assert_eq!(pattern, "^-?[0-9]+(/-?[0-9]+)?$");
    let c0 = report["eigen"]["c0"].as_str().unwrap();
    assert!(c0.chars().all(|ch| ch.is_ascii_digit() || ch == '/' || ch == '-'));
    std::fs::remove_file(json).ok();
}

#[test]
fn verify_paper_small_scope_passes() {
    let o = cli(&[
        "verify-paper",
        "--scope",
        "twists",
        "--count",
        "10",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: PASS"));
}
