use std::io::Write;
use std::process::{Command, Output};

use hhquiver::cochains::{hochschild, BasicCochain, Cochain};
use hhquiver::gamma::{enumerate_gamma, GammaPath};
use hhquiver::{examples, Rational};
use serde_json::Value;

const FIVE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/five_vertex.quiv");

fn hhq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhq")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = hhq(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn quiv(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".quiv").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn hh_dimensions_of_five_vertex_example() {
    let out = hhq(&["hh", FIVE, "--max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for (n, d) in [1, 2, 1, 1, 1, 0, 0].iter().enumerate() {
        assert!(text.contains(&format!("HH^{n} = {d}")), "{text}");
    }
    let v = json(&["hh", FIVE, "--max", "6"]);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 1, 1, 1, 0, 0]));
}

#[test]
fn bracket_and_circ_outputs() {
    let out = hhq(&["bracket", FIVE, "--f", "g|a1 b a4", "--g", "b|a2 a3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("-1 · g|a1 a2 a3 a4"), "{}", stdout(&out));
    let out = hhq(&["circ", FIVE, "--f", "g|a1 b a4", "--g", "b|a2 a3", "--i", "2"]);
    assert!(stdout(&out).contains("1 · g|a1 a2 a3 a4"), "{}", stdout(&out));
}

#[test]
fn basis_and_gamma_round_trip() {
    let alg = examples::main_example();
    let q = alg.quiver();
    let v = json(&["basis", FIVE]);
    let parsed: Vec<_> =
        v["basis"].as_array().unwrap().iter().map(|p| q.parse_path(p.as_str().unwrap()).unwrap()).collect();
    assert_eq!(parsed, alg.basis());
    assert_eq!(v["dimension"], alg.dimension());

    for n in 0..=5 {
        let v = json(&["gamma", FIVE, "--deg", &n.to_string()]);
        let parsed: Vec<GammaPath> = v["paths"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| GammaPath::parse(&alg, p.as_str().unwrap()).unwrap())
            .collect();
        assert_eq!(parsed, enumerate_gamma(&alg, n, None, None), "degree {n}");
    }
}

#[test]
fn hh_representatives_round_trip() {
    let alg = examples::main_example();
    let report = hochschild::<Rational>(&alg, 4);
    let v = json(&["hh", FIVE, "--max", "4", "--reps"]);
    for (n, d) in v["degrees"].as_array().unwrap().iter().enumerate() {
        let reps: Vec<Cochain<Rational>> = d["representatives"]
            .as_array()
            .unwrap()
            .iter()
            .map(|terms| {
                let terms = terms.as_array().unwrap().iter().map(|t| {
                    let text = format!("{}|{}", t["value"].as_str().unwrap(), t["gamma"].as_str().unwrap());
                    let c: Rational = t["coefficient"].as_str().unwrap().parse().unwrap();
                    (BasicCochain::parse(&alg, &text).unwrap(), c)
                });
                Cochain::from_terms(n, terms)
            })
            .collect();
        assert_eq!(reps, report.degrees[n].representatives, "degree {n}");
    }
}

#[test]
fn output_does_not_depend_on_jobs() {
    let one = hhq(&["--jobs", "1", "--json", "hh", FIVE, "--max", "6", "--reps"]);
    let four = hhq(&["--jobs", "4", "--json", "hh", FIVE, "--max", "6", "--reps"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn prime_field_input() {
    let f = quiv("FIELD F 2\nVERTICES 1\nARROW x 1 1\nRELATION x x\n");
    let v = json(&["hh", f.path().to_str().unwrap(), "--max", "3"]);
    assert_eq!(v["field"], "F2");
    assert_eq!(v["dims"], serde_json::json!([2, 2, 2, 2]));
    let f = quiv("FIELD Q\nVERTICES 1\nARROW x 1 1\nRELATION x x\n");
    let v = json(&["hh", f.path().to_str().unwrap(), "--max", "3"]);
    assert_eq!(v["dims"], serde_json::json!([2, 1, 1, 1]));
}

#[test]
fn cycle_and_composition() {
    let v = json(&["cycle", FIVE, "--u", "a1 b a4", "--p", "g", "--at", "4"]);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["gamma"], true);
    let words: Vec<&str> = v["modules"].as_array().unwrap().iter().map(|m| m["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["b", "a1^-1 g a4^-1"]);

    let out = hhq(&["compose-cycles", FIVE, "--left", "g|a1 b a4", "--right", "b|a2 a3", "--s", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("Cy(a1 a2 a3 a4, g): degree 4"));
    assert!(stdout(&out).contains("equals the cycle of the composed data"));
    let out = hhq(&["compose-cycles", FIVE, "--left", "b|a2 a3", "--right", "g|a1 b a4", "--s", "2"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&hhq(&["hh"])), 1);
    assert_eq!(code(&hhq(&["frobnicate", FIVE])), 1);
    assert_eq!(code(&hhq(&["--jobs", "0", "hh", FIVE])), 1);
    assert_eq!(code(&hhq(&["hh", "/nonexistent/x.quiv"])), 2);

    let f = quiv("VERTICES 1 2 3\nARROW a 1 2\nARROW b 2 3\nARROW c 1 3\nRELATION a c\n");
    let out = hhq(&["info", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("5:10"));

    let f = quiv("VERTICES\n");
    assert_eq!(code(&hhq(&["info", f.path().to_str().unwrap()])), 2);

    let f = quiv("VERTICES 1\nARROW x 1 1\n");
    assert_eq!(code(&hhq(&["info", f.path().to_str().unwrap()])), 3);

    assert_eq!(code(&hhq(&["bypass", FIVE, "--u", "a1 a2", "--v", "a1 a2", "--s", "1", "--r", "1"])), 4);
    assert_eq!(code(&hhq(&["gamma", FIVE, "--deg", "2", "--from", "9"])), 4);
}

#[test]
fn selftest_reports_every_criterion() {
    let out = hhq(&["selftest", "--fuzz", "20"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]")).collect();
    assert_eq!(lines.len(), 9, "{text}");
    for l in &lines {
        if !l.starts_with("[FAIL] 8.") {
            assert!(l.starts_with("[PASS]"), "{l}");
        }
    }
    assert_eq!(code(&out), if lines.iter().all(|l| l.starts_with("[PASS]")) { 0 } else { 5 });
}
