use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn braidnorm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidnorm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(o: &Output, key: &str) -> i64 {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no {key} in {}", stdout(o)))
        .parse()
        .unwrap()
}

fn verify(path: &Path) -> i32 {
    braidnorm(&["verify", path.to_str().unwrap()]).status.code().unwrap()
}

#[test]
fn signature_command() {
    let o = braidnorm(&["signature", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-2\n");
    let o = braidnorm(&["signature", "-1 2 -1 2", "--strands", "4"]);
    assert_eq!(stdout(&o), "0\n");
    assert_eq!(braidnorm(&["signature", "1 0"]).status.code(), Some(1));
}

#[test]
fn norm_certificates_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("norm.json");
    let o = braidnorm(&["norm", "1 -2 3 3", "--n", "3", "--cert", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(value(&o, "word_norm_lower") <= value(&o, "word_norm_upper"));
    assert!(value(&o, "nu_lower") <= value(&o, "nu_upper"));
    assert_eq!(verify(&cert), 0);

    let text = fs::read_to_string(&cert).unwrap();
    let tampered = text.replacen("\"exponent\": 1", "\"exponent\": -1", 1);
    assert_ne!(tampered, text);
    fs::write(&cert, tampered).unwrap();
    assert_eq!(verify(&cert), 2);
}

#[test]
fn cl_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cl.json");
    let o = braidnorm(&["cl", "1 2 -1 -2", "--n", "2", "--p", "1", "--q", "1", "--cert", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "cl_upper"), 4);
    assert_eq!(value(&o, "constant"), 8);
    assert!(value(&o, "cl_lower") <= value(&o, "cl_upper"));
    assert_eq!(verify(&cert), 0);

    // swap f and g in the first factor
    let mut json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    let fac = &mut json["factors"][0];
    let (f, g) = (fac["f"].clone(), fac["g"].clone());
    fac["f"] = g;
    fac["g"] = f;
    fs::write(&cert, json.to_string()).unwrap();
    assert_eq!(verify(&cert), 2);

    assert_eq!(braidnorm(&["cl", "1 2"]).status.code(), Some(1));
}

#[test]
fn verify_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(verify(&bad), 1);
    assert_eq!(verify(&dir.path().join("missing.json")), 1);
}

#[test]
fn experiments_write_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("d.csv");
    let o = braidnorm(&["defects", "--n", "2", "--m", "5", "--samples", "50", "--len", "8", "--seed", "1", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "violations"), 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("sample,alpha,beta,sigma_ab,sigma_a,sigma_b,defect\n"));
    assert_eq!(text.lines().count(), 51);

    let csv = dir.path().join("g.csv");
    let o = braidnorm(&["growth", "-1", "--kmax", "4", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&csv).unwrap(), "k,sigma,ratio\n1,0,0\n2,1,1/2\n3,2,2/3\n4,3,3/4\n");

    let o = braidnorm(&["search", "--len", "4", "--strands", "3", "--kmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rate "));
}
