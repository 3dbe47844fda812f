use std::process::{Command, Output};

use serde_json::Value;

fn qdeform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdeform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qdeform(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn text_outputs() {
    assert_eq!(stdout(&["qrat", "5/2"]), "(1 + 2*q + q^2 + q^3) / (1 + q)");
    assert_eq!(stdout(&["qint", "0"]), "0");
    assert_eq!(stdout(&["qint", "-2"]), "-q^-2 - q^-1");
    assert_eq!(stdout(&["qint", "4"]), "1 + q + q^2 + q^3");
    assert_eq!(stdout(&["qbinom", "4", "5"]), "0");
    assert_eq!(stdout(&["jones", "3/1"]), "1 + q^2 + q^3");
    assert_eq!(
        stdout(&["qrat", "--xpoly", "5/2", "5/3"]),
        "q + q^2 + q^3 + q^4 + q^5"
    );
    assert_eq!(
        stdout(&["qrat", "5/2", "--form", "regular"]),
        stdout(&["qrat", "5/2", "--form", "matrix"])
            .lines()
            .next()
            .unwrap()
    );
}

#[test]
fn every_form_agrees() {
    for x in ["5/2", "7/3", "13/8", "1/5", "-5/2", "0", "3"] {
        let hj = stdout(&["qrat", x, "--form", "hj"]);
        assert_eq!(stdout(&["qrat", x, "--form", "regular"]), hj, "{x}");
    }
}

#[test]
fn check_summaries() {
    let tp = stdout(&["check", "--total-positivity", "--max-height", "12"]);
    assert!(tp.starts_with("pairs="), "{tp}");
    assert!(tp.contains("violations=0"));
    let fb = stdout(&["check", "--frieze-bijection", "--max-height", "8"]);
    assert!(fb.contains("catalan_counts=1,2,5,14,42,132"), "{fb}");
    let un = stdout(&["qrat", "--check-unimodal", "--max-height", "20"]);
    assert!(un.contains("violations=0"), "{un}");
}

#[test]
fn stern_brocot_listing() {
    let text = stdout(&["qrat", "--stern-brocot", "--depth", "3"]);
    assert_eq!(text.lines().count(), 15);
    assert!(text
        .lines()
        .any(|l| l.contains("5/2") && l.ends_with("(1 + 2*q + q^2 + q^3) / (1 + q)")));
}

#[test]
fn frieze_from_triangulation_matches_quiddity() {
    let tri = stdout(&[
        "frieze",
        "--triangulation",
        "8:0-2,0-3,0-5,3-5,5-7",
        "--ascii",
    ]);
    let quid = stdout(&["frieze", "--quiddity", "4,1,2,3,1,4,1,2", "--ascii"]);
    assert_eq!(tri, quid);
}

#[test]
fn quadratic_report() {
    let text = stdout(&["qreal", "--quadratic", "(1+sqrt5)/2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "A = -1 + q + q^2");
    assert_eq!(lines[1], "B = 1 + 2*q - q^2 + 2*q^3 + q^4");
    assert_eq!(lines[2], "C = 2*q");
    assert_eq!(lines[4], "R- = 0.3819660113");
    assert_eq!(lines[5], "R+ = 2.618033989");
}

#[test]
fn exit_codes() {
    let usage = qdeform(&["qrat"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(usage.stdout.is_empty());
    assert_eq!(qdeform(&["nosuch"]).status.code(), Some(2));
    assert_eq!(qdeform(&["qrat", "five"]).status.code(), Some(2));

    let domain = qdeform(&["qrat", "--xpoly", "1/2", "2/1"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("greater than"));
    assert_eq!(
        qdeform(&["frieze", "--quiddity", "2,2,2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        qdeform(&["check", "--total-positivity", "--max-height", "1000"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(qdeform(&["jones", "-1/2"]).status.code(), Some(1));
    assert_eq!(qdeform(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: &[&[&str]] = &[
        &["--json", "qrat", "5/2"],
        &["--json", "qrat", "7/3", "--form", "matrix"],
        &["--json", "qint", "-3"],
        &["--json", "qbinom", "6", "3"],
        &["--json", "frieze", "--quiddity", "1,4,2,1,3,2,2", "--q"],
        &["--json", "frieze", "--quiddity", "1,4,2,1,3,2,2"],
        &["--json", "qreal", "--cf", "per=[1]", "--order", "21"],
        &["--json", "qreal", "--quadratic", "sqrt2", "--order", "10"],
        &[
            "--json",
            "qseq",
            "--kind",
            "pell",
            "--upto",
            "7",
            "--triangle",
        ],
        &["--json", "jones", "5/2"],
        &[
            "--json",
            "check",
            "--definition-coincidence",
            "--max-height",
            "10",
        ],
        &["qrat", "--stern-brocot", "--depth", "2", "--json"],
    ];
    for args in cases {
        let text = stdout(args);
        assert_eq!(text.lines().count(), 1, "{args:?} is not a single document");
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), text, "{args:?}");
    }
}

#[test]
fn json_schemas() {
    let v: Value = serde_json::from_str(&stdout(&[
        "--json", "qreal", "--cf", "per=[2]", "--order", "5",
    ]))
    .unwrap();
    assert_eq!(v["stabilized_upto"], 5);
    assert_eq!(
        v["series"]["coeffs"],
        serde_json::json!(["1", "1", "0", "0", "1"])
    );
    let f: Value = serde_json::from_str(&stdout(&[
        "--json",
        "frieze",
        "--quiddity",
        "1,2,1,2",
        "--q",
    ]))
    .unwrap();
    assert_eq!(f["q"], true);
    assert_eq!(
        f["rows"][1][1],
        serde_json::json!({ "coeffs": ["1", "1"], "min_exp": 0 })
    );
}
