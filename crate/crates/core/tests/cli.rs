//! End-to-end checks of the command-line front end through `cli::run`.

use flagbundles::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["flagbundles".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run(&argv)
}

#[test]
fn table1_g2() {
    let (code, out) = call(&["table1", "G2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["outputs"]["b"], serde_json::json!([10, 6]));
}

#[test]
fn cohom_singular_class() {
    let (code, out) = call(&["cohom", "A1", "-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("ALL_ZERO"));
}

#[test]
fn weyl_guard_is_a_domain_error() {
    let (code, out) = call(&["weyl", "E8", "--enumerate", "1000000"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["code"], "group-too-large");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["cohom", "A1", "one"]).0, 2);
    assert_eq!(call(&["nonsense"]).0, 2);
    assert_eq!(call(&["tag", "A2", "mystery", "1,1"]).0, 2);
}

#[test]
fn domain_errors_exit_1_with_code() {
    let (code, out) = call(&["table1", "Q7"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "malformed-token");

    let (code, out) = call(&["tag", "A1", "sc", "1"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["code"], "not-in-lattice");
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["roots", "B3"],
        vec!["faces", "A3"],
        vec!["sections", "A2", "adjoint", "1,2"],
        vec!["homog", "A3", "--I", "2"],
    ] {
        let first = call(&args);
        let second = call(&args);
        assert_eq!(first, second);
    }
}

#[test]
fn verify_passes_and_mutation_fails() {
    let (code, out) = call(&["verify", "--rank-max", "3"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = call(&["verify", "--rank-max", "3", "--mutate"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["outputs"]["passed"], false);
}

#[test]
fn tsv_rendering() {
    let (code, out) = call(&["--tsv", "table1", "A3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "b\t3,4,3"), "{out}");
}

#[test]
fn enumeration_guard_env_override() {
    std::env::set_var(flagbundles::cli::ENUM_LIMIT_ENV, "3");
    let (code, out) = call(&["sections", "A2", "adjoint", "1,1"]);
    std::env::remove_var(flagbundles::cli::ENUM_LIMIT_ENV);
    assert_eq!(code, 1);
    assert!(out.contains("group-too-large"), "{out}");
}
