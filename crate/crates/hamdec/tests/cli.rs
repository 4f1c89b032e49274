//! Black-box tests of the `hamdec` binary: exit codes, constructed output,
//! and the decide → persist → verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hamdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamdec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hamdec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn decide_exit_codes() {
    let ok = hamdec(&["decide", "F14", "--m", "2"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("F14 m=2: Decomposable"));

    let no = hamdec(&["decide", "F8", "--m", "2"]);
    assert_eq!(no.status.code(), Some(10));
    assert!(stdout(&no).contains("F8 m=2: NotDecomposable"));

    let bad = hamdec(&["decide", "NOPE", "--m", "2"]);
    assert_eq!(bad.status.code(), Some(2));

    let p1f_wrong_m = hamdec(&["decide", "F14", "--m", "3", "--method", "p1f"]);
    assert_eq!(p1f_wrong_m.status.code(), Some(2));

    let budget = hamdec(&["decide", "F24", "--m", "3", "--budget-nodes", "10"]);
    assert_eq!(budget.status.code(), Some(3));
}

#[test]
fn construct_blow_up_profile() {
    let out = hamdec(&["construct", "F8", "--m", "2", "--target", "KmX"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order 48"), "{}", text);
    assert!(text.contains("valency 6"), "{}", text);

    // graph6 input instead of a catalog name: K4 -> L(K4) = K(2,2,2).
    let out = hamdec(&["construct", "C~", "--target", "L"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("order 6"));
}

#[test]
fn decide_persist_verify_round_trip() {
    let cert = tmp("f14.cert.json");
    let cert_str = cert.to_str().unwrap();
    let out = hamdec(&["decide", "F14", "--m", "2", "--out", cert_str]);
    assert_eq!(out.status.code(), Some(0));
    assert!(cert.with_extension("run.json").exists());

    let verify = hamdec(&["verify", cert_str]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
    assert!(stdout(&verify).contains("pass"));

    // Tampering must be detected.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered_path = tmp("f14.tampered.json");
    std::fs::write(&tampered_path, text.replacen("\"m\": 2", "\"m\": 3", 1)).unwrap();
    let verify = hamdec(&["verify", tampered_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(2));

    // Refutation certificates verify too.
    let ref_path = tmp("f10.cert.json");
    let out = hamdec(&["decide", "F10", "--m", "2", "--out", ref_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(10));
    let verify = hamdec(&["verify", ref_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
}

#[test]
fn reproduce_fast_sections_pass() {
    for section in ["thm9", "thm10", "cayley"] {
        let out = hamdec(&["reproduce", section]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", section, stdout(&out));
        assert!(stdout(&out).contains("PASS"));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn reproduce_unknown_section_is_usage_error() {
    let out = hamdec(&["reproduce", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
