use std::path::PathBuf;

use genchar_cli::{run, Outcome, EXIT_FAILED, EXIT_NOT_INVERTIBLE, EXIT_OK, EXIT_PARSE};
use genchar_core::catalog::catalog;
use genchar_core::spec_json::{load_spec, spec_to_string};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn spec(id: &str) -> String {
    root().join("specs").join(format!("{id}.json")).display().to_string()
}

fn genchar(args: &[&str]) -> Outcome {
    run(std::iter::once("genchar").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("genchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

/// Compare against `tests/golden/<name>`; set `GENCHAR_BLESS=1` to rewrite.
fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("GENCHAR_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

#[test]
fn specs_directory_matches_catalog() {
    for e in catalog() {
        let path = root().join("specs").join(format!("{}.json", e.id));
        let on_disk = std::fs::read_to_string(&path).unwrap();
        assert_eq!(on_disk, spec_to_string(&e.spec), "{} is stale; rerun `genchar export specs`", e.id);
        assert!(load_spec(&path).unwrap().same_structure(&e.spec));
    }
}

#[test]
fn golden_outputs() {
    let cases: &[(&str, &[&str])] = &[
        ("generic_quaternions.txt", &["generic", &spec("quaternions")]),
        ("generic_ut3.txt", &["generic", &spec("ut3")]),
        ("generic_inseparable.txt", &["generic", &spec("inseparable")]),
        ("generic_skew4.txt", &["generic", &spec("skew4")]),
        ("generic_m2q.json", &["generic", &spec("m2q"), "--json"]),
        ("verify_quaternions.txt", &["verify", &spec("quaternions")]),
        ("verify_ut4.json", &["verify", &spec("ut4"), "--samples", "5", "--json"]),
        ("validate_m3q.txt", &["validate", &spec("m3q")]),
        ("charpoly_sqrt2_oracle.txt", &["charpoly", &spec("sqrt2"), "-e", "1,3", "--oracle"]),
    ];
    for (name, args) in cases {
        let out = genchar(args);
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stderr);
        golden(name, &out.stdout);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", &spec("m2q"), "--samples", "10", "--seed", "7"];
    let a = genchar(&args);
    let b = genchar(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = genchar(&["verify", &spec("m2q"), "--samples", "10", "--seed", "8"]);
    assert_eq!(c.code, EXIT_OK);
}

#[test]
fn element_commands() {
    let h = spec("quaternions");
    let m2 = spec("m2q");
    let cases: &[(&[&str], &str, i32)] = &[
        (&["det", &h, "--element", "3,1,2,2"], "18\n", EXIT_OK),
        (&["trace", &h, "-e", "3,1,2,2"], "6\n", EXIT_OK),
        (&["charpoly", &m2, "-e", "0,1,0,0"], "x^2\n", EXIT_OK),
        (&["inverse", &m2, "-e", "0,1,0,0"], "not invertible\n", EXIT_NOT_INVERTIBLE),
        (&["inverse", &m2, "-e", "1,2,3,4"], "-2, 1, 3/2, -1/2\n", EXIT_OK),
        (&["inverse", &h, "-e", "1,1,0,0"], "1/2, -1/2, 0, 0\n", EXIT_OK),
        (&["nilpotent", &m2, "-e", "0,1,0,0"], "true\n", EXIT_OK),
        (&["nilpotent", &m2, "-e", "1,0,0,0"], "false\n", EXIT_OK),
        (&["minpoly", &m2, "-e", "2,0,0,2"], "x - 2\n", EXIT_OK),
        (&["det", &spec("skew4"), "-e", "1,0,0,0,0,1"], "1\n", EXIT_OK),
    ];
    for (args, want, code) in cases {
        let out = genchar(args);
        assert_eq!(out.code, *code, "{args:?}: {}", out.stderr);
        assert_eq!(out.stdout, *want, "{args:?}");
    }
}

#[test]
fn oracle_flag() {
    let out = genchar(&["minpoly", &spec("ut3"), "-e", "1,0,0,1,0,1", "--oracle"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("oracle check: ok\n"), "{}", out.stdout);
    let out = genchar(&["charpoly", &spec("m3q"), "-e", "1,2,3,4,5,6,7,8,10", "--oracle"]);
    assert!(out.stdout.contains("skipped"), "{}", out.stdout);
    let out = genchar(&["det", &spec("m3q"), "-e", "1,2,3,4,5,6,7,8,10", "--oracle"]);
    assert_eq!(out.stdout.lines().next(), Some("-3"));
    assert!(out.stdout.ends_with("oracle check: ok\n"));
}

#[test]
fn json_element_output() {
    let out = genchar(&["inverse", &spec("m2q"), "-e", "0,1,0,0", "--json"]);
    assert_eq!(out.code, EXIT_NOT_INVERTIBLE);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"], "not invertible");
    let out = genchar(&["det", &spec("quaternions"), "-e", "3,1,2,2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"], "18");
}

#[test]
fn broken_sign_is_reported() {
    let text = std::fs::read_to_string(spec("quaternions")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // i*i = +1
    v["table"][1][1] = serde_json::json!(["1", "0", "0", "0"]);
    let path = scratch("broken.json", &v.to_string());
    let out = genchar(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("(i, i, j)"), "{}", out.stdout);
    let out = genchar(&["verify", path.to_str().unwrap(), "--samples", "3"]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("FAIL"));
}

#[test]
fn parse_and_usage_errors() {
    let text = std::fs::read_to_string(spec("quaternions")).unwrap();
    let truncated = scratch("truncated.json", &text[..text.len() / 3]);
    let out = genchar(&["validate", truncated.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("parse error at line"), "{}", out.stderr);

    let bad_expr = scratch("bad_expr.json", &text.replacen("\"-1\"", "\"-1 +\"", 1));
    let out = genchar(&["generic", bad_expr.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("column 5"), "{}", out.stderr);

    let h = spec("quaternions");
    for args in [
        vec!["det", h.as_str(), "-e", "1,2"],
        vec!["det", h.as_str(), "-e", "1,2,3,y"],
        vec!["det", h.as_str()],
        vec!["verify", h.as_str(), "--samples", "0"],
        vec!["frobnicate"],
        vec!["generic", "/nonexistent/spec.json"],
    ] {
        let out = genchar(&args);
        assert_eq!(out.code, EXIT_PARSE, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let help = genchar(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("verify"));
}

#[test]
fn export_round_trip() {
    let dir = std::env::temp_dir().join(format!("genchar-export-{}", std::process::id()));
    let out = genchar(&["export", dir.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), catalog().len());
    let a = std::fs::read_to_string(dir.join("sqrt2.json")).unwrap();
    assert_eq!(a, std::fs::read_to_string(spec("sqrt2")).unwrap());
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_genchar");
    let status = std::process::Command::new(bin)
        .args(["inverse", &spec("m2q"), "-e", "0,1,0,0"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_NOT_INVERTIBLE));
    assert_eq!(String::from_utf8_lossy(&status.stdout), "not invertible\n");
    let status = std::process::Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_PARSE));
}
