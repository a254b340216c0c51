use std::process::Command;

use clap::Parser;
use qchromatic_cli::{main_with, Cli};

fn run(args: &[&str]) -> (u8, String, String) {
    let cli =
        Cli::try_parse_from(std::iter::once("qchromatic").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = main_with(&cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn csfq_examples() {
    let (code, out, _) = run(&["csfq", "--h", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(2)*M[1,1] + (1)*M[2]\n");

    let (code, out, _) = run(&["csfq", "--h", "2,2", "--basis", "M", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], "M");
    assert_eq!(v["terms"][0]["index"], serde_json::json!([1, 1]));
    assert_eq!(
        v["terms"][0]["coeff"]["num"],
        serde_json::json!(["1/1", "1/1"])
    );
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);

    let (code, _, err) = run(&["csfq", "--h", "2,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid h"));
}

#[test]
fn frob_examples() {
    let (_, out, _) = run(&["frob", "--h", "2,2", "--ring", "R"]);
    assert_eq!(out, "(1/2 + 1/2*q)*p[1,1] + (1/2 - 1/2*q)*p[2]\n");
    let (_, out, _) = run(&["frob", "--h", "2,2", "--ring", "L"]);
    assert_eq!(out, "(1/2 + 1/2*q)*p[1,1] + (1/2 + 1/2*q)*p[2]\n");
    let (code, out, _) = run(&["frob", "--h", "2,2", "--ring", "L", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (v["h"].clone(), v["ring"].clone(), v["basis"].clone()),
        (serde_json::json!([2, 2]), "L".into(), "p".into())
    );
    assert_eq!(run(&["frob", "--h", "1,1-x"]).0, 2);
    assert_eq!(run(&["frob", "--h", "1,2,3,4,5,6"]).0, 2);
}

#[test]
fn verify_reports_every_function() {
    let (code, out, _) = run(&["verify", "--n", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    for l in &lines {
        for key in [
            "identity_L",
            "identity_R",
            "base_change",
            "sign_lemma",
            "pass",
        ] {
            assert_eq!(l[key], true, "{key} in {l}");
        }
    }
    assert_eq!(lines[3]["h"], serde_json::json!([2, 2]));
    let (code, _, err) = run(&["verify", "--n", "99"]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds"));
}

#[test]
fn verify_with_seed_adds_random_graphs() {
    let (code, out, _) = run(&["verify", "--n", "3", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9 + 50);
    assert_eq!(out, run(&["verify", "--n", "3", "--seed", "5"]).1);
    assert_ne!(out, run(&["verify", "--n", "3", "--seed", "6"]).1);
}

#[test]
fn involution_examples() {
    let (code, out, _) = run(&["involution", "--h", "2,2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["sum"]["num"], serde_json::json!([]));

    let (code, out, _) = run(&["involution", "--h", "1", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("sum=1 - q"), "{out}");

    let (code, out, _) = run(&["involution", "--n", "4"]);
    assert_eq!(code, 0);
    // Connected G(h) with 1 <= n <= 4: 1 + 1 + 2 + 5.
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [
        vec!["verify", "--n", "4"],
        vec!["involution", "--n", "4"],
        vec!["frob", "--h", "2,3,4,4"],
    ] {
        let one = run(&[args.as_slice(), &["--jobs", "1"]].concat()).1;
        let four = run(&[args.as_slice(), &["--jobs", "4"]].concat()).1;
        assert_eq!(one.as_bytes(), four.as_bytes(), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qchromatic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("frob.json");
    let (code, out, _) = run(&[
        "frob",
        "--h",
        "2,2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, run(&["frob", "--h", "2,2", "--format", "json"]).1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qchromatic");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["csfq", "--h", "2,2"]), Some(0));
    assert_eq!(status(&["csfq", "--h", "2,1"]), Some(2));
    assert_eq!(status(&["frob"]), Some(2));
    assert_eq!(status(&["bogus"]), Some(2));
    assert_eq!(status(&["verify", "--n", "6"]), Some(2));
}
