//! End-to-end tests of the `sinecert` binary: exit codes, report files, and
//! certificate round-tripping through the text format.

use std::fs;
use std::process::{Command, Output};

use sinecert::{verify_h_certificates, DifCertificate, Interval, DEFAULT_PREC};

fn sinecert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinecert"))
        .args(args)
        .env_remove("SINECERT_PRECISION")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn pipeline_exit_codes() {
    let ok = sinecert(&["pipeline", "--n", "7", "--beta", "beta1"]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));
    let stdout = String::from_utf8_lossy(&ok.stdout).to_string();
    assert!(stdout.contains("branch two-summand"));
    assert!(stdout.ends_with("verdict Pass\n"));

    // below beta1 the proof must not go through, but it also must not crash
    let open = sinecert(&["pipeline", "--n", "40", "--beta", "0.58"]);
    assert_eq!(code(&open), 1);
    assert!(String::from_utf8_lossy(&open.stdout).contains("NOT ESTABLISHED"));

    // malformed beta and out-of-range n are usage errors
    assert_eq!(code(&sinecert(&["pipeline", "--n", "7", "--beta", "xyz"])), 2);
    assert_eq!(
        code(&sinecert(&["pipeline", "--n", "3", "--beta", "beta1"])),
        2
    );
}

#[test]
fn pipeline_reports_are_deterministic() {
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    for d in [&d1, &d2] {
        let out = sinecert(&[
            "pipeline",
            "--n",
            "11",
            "--beta",
            "beta1",
            "--out",
            d.path().to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    let p = "pipeline-n11-beta1.txt";
    let a = fs::read(d1.path().join(p)).unwrap();
    let b = fs::read(d2.path().join(p)).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "identical runs must produce byte-identical reports");
}

#[test]
fn verify_unknown_id_is_usage_error() {
    let out = sinecert(&["verify", "lemma99"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown verification target"));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = sinecert(&["verify", "b5", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("b5: certified"));
    let body = fs::read_to_string(dir.path().join("b5.txt")).unwrap();
    assert!(body.starts_with("lemma b5\nstatus certified\n"));

    let out = sinecert(&[
        "verify",
        "b5",
        "--json",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("b5.json")).unwrap()).unwrap();
    assert_eq!(json["lemma"], "b5");
    assert_eq!(json["status"], "certified");
}

#[test]
fn scan_flags_sharpness_below_beta1() {
    let neg = sinecert(&["scan", "--n", "3", "--beta", "0.58", "--cells", "2048"]);
    assert_eq!(code(&neg), 1);
    assert!(String::from_utf8_lossy(&neg.stdout).contains("NEGATIVE witness"));

    let ok = sinecert(&["scan", "--n", "2..5", "--beta", "beta1", "--cells", "512"]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).lines().count(), 4);

    assert_eq!(code(&sinecert(&["scan", "--n", "5..2", "--beta", "beta1"])), 2);
}

#[test]
fn check_validates_tampered_and_truncated_certificates() {
    // obtain a genuine certificate through the library
    let report = verify_h_certificates(64, DEFAULT_PREC).unwrap();
    let cert = &report
        .certificates
        .first()
        .expect("suite produces certificates")
        .1;
    let dir = tempfile::tempdir().unwrap();

    let good = dir.path().join("good.cert");
    fs::write(&good, cert.to_text()).unwrap();
    let out = sinecert(&["check", good.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("certificate ok"));

    // nudge one recorded difference: re-validation recomputes every link and
    // must notice the mismatch
    let mut tampered = DifCertificate::from_text(&cert.to_text()).unwrap();
    let eps = Interval::from_ratio(1, 1 << 30, tampered.prec).unwrap();
    tampered.links[0].diff = tampered.links[0].diff.add(&eps);
    let bad = dir.path().join("tampered.cert");
    fs::write(&bad, tampered.to_text()).unwrap();
    assert_eq!(code(&sinecert(&["check", bad.to_str().unwrap()])), 1);

    // a truncated file is a parse error, not a failed check
    let text = cert.to_text();
    let cut = dir.path().join("truncated.cert");
    fs::write(&cut, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&sinecert(&["check", cut.to_str().unwrap()])), 2);

    // and so is a missing file
    assert_eq!(code(&sinecert(&["check", "/nonexistent.cert"])), 2);
}

#[test]
fn precision_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_sinecert"))
        .args(["pipeline", "--n", "7", "--beta", "beta1"])
        .env("SINECERT_PRECISION", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_sinecert"))
        .args(["pipeline", "--n", "7", "--beta", "beta1"])
        .env("SINECERT_PRECISION", "192")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
