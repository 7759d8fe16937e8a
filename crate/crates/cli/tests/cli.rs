use std::path::PathBuf;
use std::process::{Command, Output};

fn lcn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcn")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = lcn(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"))
}

fn assert_valid(schema: &str, args: &[&str]) {
    let raw = std::fs::read_to_string(schema_path(schema)).unwrap();
    let schema_json: serde_json::Value = serde_json::from_str(&raw).unwrap();
    let validator = jsonschema::validator_for(&schema_json).unwrap();
    let instance: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates {schema}: {errors:?}");
}

#[test]
fn canon_of_a_collapsing_word() {
    assert_eq!(stdout(&["canon", "--n", "3", "a2.a1"]), "ZERO (a1.a3)\n");
    assert_eq!(stdout(&["canon", "--n", "3", "1"]), "1\n");
    assert_eq!(stdout(&["canon", "--n", "4", "a1.a1.a2"]), "a1.a2\n");
}

#[test]
fn elements_of_lc2() {
    let out = stdout(&["elements", "--n", "2"]);
    assert_eq!(out.lines().count(), 4);
    assert_eq!(out, "0\t1\tidentity\n1\ta1\tsegments\n2\ta2\tsegments\n3\ta1.a2\tzero\n");
    let csv = stdout(&["elements", "--n", "2", "--format", "csv"]);
    assert_eq!(csv.lines().next().unwrap(), "s\\t,0,1,2,3");
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn multiplication() {
    assert_eq!(stdout(&["mult", "--n", "3", "a2", "a1"]), "ZERO (a1.a3)\n");
    assert_eq!(stdout(&["mult", "--n", "3", "a1", "a2"]), "a1.a2\n");
}

#[test]
fn contracted_table_uses_dots() {
    assert_eq!(stdout(&["cayley", "--n", "2", "--contracted"]), ",1,a1,a2\n1,1,a1,a2\na1,a1,a1,.\na2,a2,.,a2\n");
    let full = stdout(&["cayley", "--n", "2"]);
    assert!(full.lines().nth(2).unwrap().ends_with(",0"), "{full}");
}

#[test]
fn det_verdicts() {
    assert!(stdout(&["det", "--n", "5"]).starts_with("verdict: NonzeroCertified\n"));
    let eight = stdout(&["det", "--n", "8"]);
    assert!(eight.starts_with("verdict: ZeroCertified\n"), "{eight}");
    assert!(eight.contains("singular block: e = a1.a5\n"));
}

#[test]
fn identical_flags_give_identical_bytes() {
    for args in [
        &["det", "--n", "6", "--seed", "9", "--report", "json"][..],
        &["blocks", "--n", "6", "--format", "json"],
        &["verify", "--n", "6", "--samples", "2000", "--seed", "3"],
    ] {
        assert_eq!(lcn(args).stdout, lcn(args).stdout, "{args:?}");
    }
    assert_ne!(
        stdout(&["det", "--n", "4", "--seed", "1", "--report", "json"]),
        stdout(&["det", "--n", "4", "--seed", "2", "--report", "json"])
    );
}

#[test]
fn verify_passes_and_reports() {
    let out = stdout(&["verify", "--n", "4"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    assert!(out.contains("mobius_interval_sums"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["verify", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(json["passed"], true);
}

#[test]
fn oracle_presets() {
    let lc: serde_json::Value = serde_json::from_str(&stdout(&["oracle", "--n", "4", "--max-len", "6"])).unwrap();
    assert_eq!(lc["class_count"], 14);
    assert_eq!(lc["stable"], true);
    let cat: serde_json::Value =
        serde_json::from_str(&stdout(&["oracle", "--preset", "catalan", "--n", "4", "--max-len", "10"])).unwrap();
    assert_eq!(cat["class_count"], 14);
    assert_eq!(cat["generators"], 3);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["canon", "--n", "3", "a4"][..],
        &["canon", "--n", "3", "b1"],
        &["elements"],
        &["elements", "--n", "0"],
        &["canon", "--n", "3", "a1", "--format", "csv"],
        &["det", "--n", "3", "--trials", "0"],
        &["oracle", "--preset", "catalan", "--n", "1"],
    ] {
        let out = lcn(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(lcn(&["canon", "--n", "3", "a4"]).stderr).unwrap();
    assert!(err.contains("<WORD>"), "{err}");
    let err = String::from_utf8(lcn(&["elements", "--n", "0"]).stderr).unwrap();
    assert!(err.contains("--n"), "{err}");
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("lcn-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("idempotents.csv");
    let out = lcn(&["idempotents", "--n", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("id,word\n0,1\n"), "{written}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_outputs_match_schemas() {
    for n in ["1", "2", "3", "5"] {
        assert_valid("elements", &["elements", "--n", n, "--format", "json"]);
        assert_valid("idempotents", &["idempotents", "--n", n, "--format", "json"]);
        assert_valid("cayley", &["cayley", "--n", n, "--format", "json"]);
        assert_valid("poset", &["poset", "--n", n, "--format", "json"]);
        assert_valid("blocks", &["blocks", "--n", n, "--format", "json"]);
        assert_valid("det", &["det", "--n", n, "--report", "json"]);
        assert_valid("verify", &["verify", "--n", n, "--format", "json"]);
        assert_valid("oracle", &["oracle", "--n", n, "--max-len", "5"]);
        assert_valid("canon", &["canon", "--n", n, "a1.a1", "--format", "json"]);
        assert_valid("mult", &["mult", "--n", n, "a1", "1", "--format", "json"]);
    }
    assert_valid("canon", &["canon", "--n", "3", "a2.a1", "--format", "json"]);
    assert_valid("cayley", &["cayley", "--n", "3", "--contracted", "--format", "json"]);
    assert_valid("det", &["det", "--n", "8", "--report", "json"]);
    assert_valid("blocks", &["blocks", "--n", "8", "--format", "json"]);
    assert_valid("oracle", &["oracle", "--preset", "catalan", "--n", "5", "--max-len", "6"]);
}

#[test]
fn schemas_reject_malformed_output() {
    let raw = std::fs::read_to_string(schema_path("elements")).unwrap();
    let validator = jsonschema::validator_for(&serde_json::from_str(&raw).unwrap()).unwrap();
    assert!(!validator.is_valid(&serde_json::json!([{"id": 0, "word": "b1", "kind": "identity"}])));
    assert!(!validator.is_valid(&serde_json::json!([{"id": 0, "word": "1"}])));
    assert!(validator.is_valid(&serde_json::json!([{"id": 0, "word": "1", "kind": "identity"}])));
}
