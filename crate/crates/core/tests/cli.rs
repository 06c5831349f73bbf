use std::io::Write;
use std::process::{Command, Output};

fn latin3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latin3"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn table_thm3_csv_has_nine_rows() {
    let o = latin3(&[
        "table",
        "--formula",
        "thm3",
        "--n",
        "1..3",
        "--lambda-offset",
        "0..2",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,lambda,formula,value");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[9], "3,5,thm3,27480");
}

#[test]
fn table_aps_single_cell() {
    let o = latin3(&["table", "--formula", "aps", "--n", "1", "--lambda", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,lambda,formula,value\n1,3,aps,6\n");
}

#[test]
fn table_riordan_reports_lambda_as_n() {
    let o = latin3(&["table", "--formula", "riordan", "--n", "4"]);
    assert_eq!(stdout(&o), "n,lambda,formula,value\n4,4,riordan,24\n");
}

#[test]
fn csv_and_json_agree() {
    let args = [
        "table",
        "--formula",
        "aps",
        "--n",
        "1..6",
        "--lambda-offset",
        "0..4",
    ];
    let csv_out = stdout(&latin3(&[&args[..], &["--format", "csv"]].concat()));
    let json_out = stdout(&latin3(&[&args[..], &["--format", "json"]].concat()));
    let from_csv: Vec<(u64, u64, String)> = csv_out
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[3].to_string(),
            )
        })
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    let from_json: Vec<(u64, u64, String)> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            assert_eq!(r["formula"], "aps");
            (
                r["n"].as_u64().unwrap(),
                r["lambda"].as_u64().unwrap(),
                r["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(from_csv.len(), 30);
    assert_eq!(from_csv, from_json);
    // exact decimals, no exponent notation
    assert!(from_csv
        .iter()
        .all(|(_, _, v)| v.chars().all(|c| c.is_ascii_digit())));
}

#[test]
fn table_exit_codes() {
    let o = latin3(&["table", "--formula", "aps", "--n", "3", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(
        latin3(&["table", "--formula", "nope", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        latin3(&["table", "--formula", "aps", "--n", "3..1"])
            .status
            .code(),
        Some(2)
    );
    let o = latin3(&["table", "--formula", "engine", "--n", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let o = latin3(&[
        "table",
        "--formula",
        "brute",
        "--n",
        "3",
        "--lambda",
        "5",
        "--node-budget",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn table_oracle_routes() {
    for formula in ["engine", "brute", "latin-oracle"] {
        let o = latin3(&[
            "table",
            "--formula",
            formula,
            "--n",
            "2..3",
            "--lambda-offset",
            "0..1",
            "--format",
            "plain",
        ]);
        assert!(o.status.success(), "{formula}");
        let text = stdout(&o);
        let values: Vec<&str> = text
            .lines()
            .skip(1)
            .map(|l| l.split_whitespace().last().unwrap())
            .collect();
        assert_eq!(values, ["0", "12", "12", "1056"], "{formula}");
    }
}

#[test]
fn chromatic_command() {
    let k3 = graph_file("3\n0 1\n1 2\n0 2\n");
    let o = latin3(&["chromatic", k3.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "degree=3\n0\n2\n-3\n1\n");

    let empty = graph_file("# two isolated vertices\n2\n");
    assert_eq!(
        stdout(&latin3(&["chromatic", empty.path().to_str().unwrap()])),
        "degree=2\n0\n0\n1\n"
    );

    let prism = graph_file(&latin3::graph::build_gn(2).to_text());
    let text = stdout(&latin3(&["chromatic", prism.path().to_str().unwrap()]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degree=6"));
    let coeffs: Vec<latin3::BigInt> = lines.map(|l| l.parse().unwrap()).collect();
    let poly = latin3::Poly::new(coeffs);
    for lambda in [3, 4] {
        let brute = latin3::chromatic::count_colorings_bruteforce(
            &latin3::graph::build_gn(2),
            lambda,
            1 << 30,
        )
        .unwrap();
        assert_eq!(poly.eval_u64(lambda), brute);
    }
}

#[test]
fn chromatic_errors() {
    let bad = graph_file("3\n0 1\n\n1 q\n");
    let o = latin3(&["chromatic", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    let big = graph_file("15\n0 1\n");
    assert_eq!(
        latin3(&["chromatic", big.path().to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        latin3(&["chromatic", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gnpq_command() {
    let o = latin3(&["gnpq", "--n", "1", "--p", "1", "--q", "0", "--lambda", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("closed=12\nengine=12\nEQUAL"));

    let text = stdout(&latin3(&[
        "gnpq", "--n", "1", "--p", "0", "--q", "1", "--lambda", "3",
    ]));
    assert!(text.contains("closed=6\nengine=6\nEQUAL"));

    let o = latin3(&["gnpq", "--n", "2", "--p", "1", "--q", "0", "--lambda", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains("closed="));
    assert!(text.contains("engine="));
    assert!(String::from_utf8_lossy(&o.stderr).contains("note"));

    assert_eq!(
        latin3(&["gnpq", "--n", "2", "--p", "2", "--q", "1", "--lambda", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_lanes() {
    let o = latin3(&["verify", "--n-max", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));

    let text = stdout(&latin3(&[
        "verify",
        "--n-max",
        "3",
        "--skip-engine",
        "--skip-oracle",
    ]));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 3);
    assert!(!text.contains("engine-grounding"));

    let text = stdout(&latin3(&["verify", "--n-max", "1"]));
    assert!(text.contains("PASS surgery-grounding"));

    assert_eq!(latin3(&["verify", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(
        latin3(&["verify", "--n-max", "7", "--skip-engine", "--skip-oracle"])
            .status
            .code(),
        Some(2)
    );
}
