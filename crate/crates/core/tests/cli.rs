use std::process::{Command, Output};

use chebknot::chebgen::{cheb_recurrence, ChebParams};
use chebknot::format::{parse_csv, parse_json};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebknot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn gen_text() {
    assert_eq!(ok(&["gen", "--k", "1", "--h", "3", "--n", "5"]), "16/81*x^5 - 20/9*x^3 + 5*x\n");
    assert_eq!(ok(&["gen", "--n", "4"]), "8*x^4 - 8*x^2 + 1\n");
    assert_eq!(ok(&["gen", "--k", "3", "--h", "2", "--n", "0"]), "0\n");
}

#[test]
fn gen_latex() {
    assert_eq!(
        ok(&["gen", "--k", "1", "--h", "3", "--n", "5", "--format", "latex"]).trim(),
        r"T^{(1,3)}_{5}={16\over 81}x^{5}-{20\over 9}x^{3}+5x"
    );
}

#[test]
fn gen_json_round_trips() {
    for (k, h, n) in [(1, 3, 5), (3, 2, 0), (4, 3, 7), (7, 9, 12)] {
        let text = ok(&[
            "gen",
            "--k",
            &k.to_string(),
            "--h",
            &h.to_string(),
            "--n",
            &n.to_string(),
            "--format",
            "json",
        ]);
        let parsed = parse_json(&text).unwrap();
        assert_eq!(parsed, cheb_recurrence(ChebParams::new(k, h, n).unwrap()));
    }
}

#[test]
fn table_rows() {
    assert_eq!(
        ok(&["table", "--k", "1..3", "--h", "1", "--n-max", "0"]),
        "T^(1,1)_0 = 1\nT^(2,1)_0 = 1\nT^(3,1)_0 = 1\n"
    );
}

#[test]
fn table_csv_round_trips() {
    let text = ok(&["table", "--k", "1..=4", "--h", "1..=3", "--n-max", "6", "--format", "csv"]);
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 4 * 3 * 7);
    for row in rows {
        let want = cheb_recurrence(ChebParams::new(row.k, row.h, row.n).unwrap());
        assert_eq!(row.poly, want, "k={} h={} n={}", row.k, row.h, row.n);
    }
}

#[test]
fn alexander_outputs() {
    assert_eq!(ok(&["alexander", "--n", "5"]), "q^2 - q + 1 - q^-1 + q^-2\n");
    assert_eq!(
        ok(&["alexander", "--n", "4"]),
        "q^{3/2} - q^{1/2} + q^{-1/2} - q^{-3/2}\n"
    );
    assert_eq!(ok(&["alexander", "--n", "1"]), "1\n");
}

#[test]
fn exit_codes() {
    let out = run(&["alexander", "--n", "4", "--l", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd = 2"));

    assert_eq!(run(&["verify", "--suite", "skein", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--k", "0", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--n", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--suite", "skein", "--format", "csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_text_and_json() {
    let text = ok(&["verify", "--suite", "skein", "--n-max", "20"]);
    assert!(text.starts_with("PASS skein"), "{text}");
    let json = ok(&["verify", "--suite", "connection", "--n-max", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["identity"], "connection");
}

#[test]
fn output_independent_of_worker_count() {
    let args = ["verify", "--suite", "all", "--k-max", "3", "--h-max", "3", "--n-max", "9"];
    let serial = ok(&[&args[..], &["--jobs", "1", "--format", "json"]].concat());
    let default = ok(&[&args[..], &["--format", "json"]].concat());
    let wide = ok(&[&args[..], &["--jobs", "4", "--format", "json"]].concat());
    assert_eq!(serial, default);
    assert_eq!(serial, wide);
}
