//! End-to-end tests of the `comspace` binary: output shapes, exit codes,
//! determinism, and the corrupted-data negative control.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_comspace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn series_su2_plain() {
    let out = run(&["series", "--family", "SU", "--rank", "2", "-m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 + t^2 + 2 t^3");
}

#[test]
fn series_g2_json_round_trips_through_refdata() {
    let out = run(&[
        "series", "--family", "G2", "-m", "2", "--method", "oracle", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim()).expect("valid json");
    assert_eq!(value["schema"], 1);
    let coeff_json = serde_json::to_string(&value["coefficients"]).unwrap();
    let parsed = comspace::refdata::parse_coeff_array(&coeff_json).unwrap();
    let fixture = comspace::refdata::load_fixture("G2/m2").unwrap();
    assert_eq!(parsed, fixture.coefficients);
}

#[test]
fn series_both_reports_match() {
    let out = run(&[
        "series", "--family", "Sp", "--rank", "2", "-m", "3", "--method", "both",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("formula == oracle: OK"));
}

#[test]
fn top_u3_m2() {
    let out = run(&["top", "--family", "U", "--rank", "3", "-m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "coeff 3 deg 10 | predicted 3,10 | OK");
}

#[test]
fn stability_su_m2_rank4() {
    let out = run(&["stability", "--family", "SU", "-m", "2", "--rank", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("agreement through degree 7"), "{}", text);
    assert!(text.contains("OK"));
}

#[test]
fn generators_su2_m2_degrees() {
    let out = run(&["generators", "--family", "SU", "--rank", "2", "-m", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let degree_lines: Vec<&str> = text.lines().filter(|l| l.starts_with("deg")).collect();
    assert_eq!(degree_lines.len(), 3);
    assert!(degree_lines[0].starts_with("deg  2"));
    assert!(degree_lines[1].starts_with("deg  3"));
    assert!(degree_lines[2].starts_with("deg  3"));
}

#[test]
fn e8_oracle_budget_exit_code() {
    let out = run(&["series", "--family", "E8", "-m", "2", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("--budget"), "{}", err);
}

#[test]
fn usage_errors_exit_one() {
    let out = run(&["series", "--family", "Q9", "-m", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["series", "--family", "U", "-m", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_invocations_are_bit_identical() {
    let args = [
        "series", "--family", "SU", "--rank", "4", "-m", "2", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["generators", "--family", "Sp", "--rank", "3", "-m", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_fixtures_suite_passes() {
    let out = run(&["verify", "--suite", "fixtures"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("all passed"));
}

#[test]
fn verify_json_summary() {
    let out = run(&["verify", "--suite", "stability", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["failed"], 0);
    assert_eq!(value["checks"][0]["outcome"], "pass");
}

#[test]
fn verify_with_corrupted_fixture_exits_two_and_names_the_key() {
    // Build an override data directory with one corrupted coefficient and
    // a coherent manifest, so the corruption is caught by verification,
    // not by the integrity hash.
    let src: PathBuf = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data");
    let dir = std::env::temp_dir().join(format!("comspace-corrupt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut manifest = String::new();
    for name in ["fixtures.tsv", "degrees.tsv", "cartan.tsv"] {
        let mut content = std::fs::read_to_string(src.join(name)).unwrap();
        if name == "fixtures.tsv" {
            content = content.replace("[1,0,1,2]\t", "[1,0,1,3]\t");
        }
        manifest.push_str(&format!(
            "{}\t{:016x}\n",
            name,
            comspace::refdata::content_hash(content.as_bytes())
        ));
        std::fs::write(dir.join(name), content).unwrap();
    }
    std::fs::write(dir.join("manifest.tsv"), manifest).unwrap();

    let out = bin()
        .args(["verify", "--suite", "fixtures"])
        .env("COMSPACE_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("SU2/m2"), "{}", stdout(&out));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_manifest_mismatch_is_caught() {
    // Same corruption but with the original manifest: the integrity hash
    // must trip.
    let src: PathBuf = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data");
    let dir = std::env::temp_dir().join(format!("comspace-hash-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["fixtures.tsv", "degrees.tsv", "cartan.tsv", "manifest.tsv"] {
        let mut content = std::fs::read_to_string(src.join(name)).unwrap();
        if name == "fixtures.tsv" {
            content = content.replace("[1,0,1,2]\t", "[1,0,1,3]\t");
        }
        std::fs::write(dir.join(name), content).unwrap();
    }
    let out = bin()
        .args(["verify", "--suite", "fixtures"])
        .env("COMSPACE_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));
    assert!(stdout(&out).contains("integrity"), "{}", stdout(&out));

    std::fs::remove_dir_all(&dir).ok();
}
