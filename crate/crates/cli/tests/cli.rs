use std::process::{Command, Output};

use igusa_core::corpus::Verification;
use igusa_core::polyhedra::MonomialIdeal;
use igusa_core::ring::{BiPoly, BiRationalFunction};
use igusa_core::zeta::{igusa_zeta, ZetaResult};
use serde_json::Value;

fn igusa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_igusa")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn zeta_of_maximal_ideal() {
    let o = igusa(&["zeta", "--ideal", "x,y"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("numerator: 1 - P^2\n"), "{s}");
    assert!(s.contains("denominator: [(1,2)]\n"), "{s}");
    assert!(s.contains("poles: [(-2, 1)]"), "{s}");
}

#[test]
fn zeta_specialized_at_two() {
    // (1 - P) / (1 - T^2 P) at P = 1/2
    let o = igusa(&["zeta", "--ideal", "x^2", "--prime", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("at p = 2: (1/2)/(1 - T^2/2)"), "{}", stdout(&o));
}

#[test]
fn unit_ideal_is_rejected() {
    let o = igusa(&["zeta", "--ideal", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("ideal not proper"), "{}", stderr(&o));
}

#[test]
fn non_prime_is_an_input_error() {
    let o = igusa(&["zeta", "--ideal", "x", "--prime", "6"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("6 is not a prime"));
}

#[test]
fn parse_errors_carry_file_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideals.txt");
    std::fs::write(&path, "# two ideals\nx, y\n\nx^2 y\n").unwrap();
    let o = igusa(&["zeta", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 4, column 5"), "{}", stderr(&o));

    std::fs::write(&path, "{\n  \"n\": 2,\n  \"generators\": [[1, 0] [0, 1]]\n}\n").unwrap();
    let o = igusa(&["newton", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&igusa(&["zeta"])), 2);
    assert_eq!(code(&igusa(&["zeta", "--ideal", "x", "--file", "f"])), 2);
    assert_eq!(code(&igusa(&["frobnicate"])), 2);
    assert_eq!(code(&igusa(&["verify", "--ideal", "x", "--bound", "17"])), 2);
    assert_eq!(code(&igusa(&["zeta", "--file", "/nonexistent/ideals.txt"])), 2);
    assert_eq!(code(&igusa(&["zeta", "--ideal", "x,y", "--vars", "x,x"])), 2);
    assert_eq!(code(&igusa(&["corpus", "--max-n", "0"])), 2);
    assert_eq!(code(&igusa(&["--help"])), 0);
}

#[test]
fn verify_examples_pass() {
    for (ideal, bound) in [("x^3, x*y, y^3", "8"), ("x", "3")] {
        let o = igusa(&["verify", "--ideal", ideal, "--bound", bound]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).starts_with("pass "), "{}", stdout(&o));
    }
}

#[test]
fn bsroots_report_shape() {
    let o = igusa(&["bsroots", "--ideal", "x^3, x*y, y^3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    // facets u1 + 2 u2 >= 3 and 2 u1 + u2 >= 3 both give -3/3
    assert_eq!(v["poles"], serde_json::json!(["-1"]));
    assert_eq!(v["facet_roots"], serde_json::json!(["-1"]));
    assert_eq!(v["lct"], "1");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn input_forms_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.jsonl");
    std::fs::write(&path, "{\"n\":2,\"generators\":[[2,1],[0,3]]}\n[[2,1],[0,3]]\n").unwrap();
    let forms = [
        igusa(&["zeta", "--json", "--ideal", "x^2*y, y^3"]),
        igusa(&["zeta", "--json", "--ideal", "[[2,1],[0,3]]"]),
        igusa(&["zeta", "--json", "--ideal", "{\"n\": 2, \"generators\": [[2,1],[0,3]]}"]),
        igusa(&["zeta", "--json", "--ideal", "[[[2,1],[0,3]]]"]),
    ];
    let first = stdout(&forms[0]);
    for o in &forms {
        assert_eq!(code(o), 0);
        assert_eq!(stdout(o), first);
    }
    let o = igusa(&["zeta", "--json", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), format!("{first}{first}"));
}

#[test]
fn zeta_json_round_trips() {
    let o = igusa(&["zeta", "--json", "--ideal", "x^3, x*y, y^3", "--prime", "3", "--latex"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let parsed: ZetaResult = serde_json::from_str(&text).unwrap();
    let ideal = MonomialIdeal::from_rows(2, &[&[3, 0], &[1, 1], &[0, 3]]).unwrap();
    assert_eq!(parsed, igusa_zeta(&ideal).unwrap());
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["specialized"]["prime"], 3);
    assert!(v["latex"].as_str().unwrap().starts_with("\\frac"));
    // identical runs, identical bytes
    assert_eq!(stdout(&igusa(&["zeta", "--json", "--ideal", "x^3, x*y, y^3", "--prime", "3", "--latex"])), text);
}

#[test]
fn fan_open_functions_sum_to_zeta() {
    let o = igusa(&["fan", "--json", "--ideal", "x^2, x*y^2, y^3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gfs: Vec<BiRationalFunction> = serde_json::from_value(v["open_generating_functions"].clone()).unwrap();
    assert_eq!(gfs.len(), v["fan"]["cones"].as_array().unwrap().len());
    let total = BiRationalFunction::sum(&gfs).mul_poly(&BiPoly::binomial(0, 1).pow(2));
    let ideal = MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 2], &[0, 3]]).unwrap();
    assert!(total.same_value(&igusa_zeta(&ideal).unwrap().zeta));
}

#[test]
fn corpus_examples() {
    let o = igusa(&["corpus", "--count", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());

    for limits in [["--max-n", "3", "--max-exponent", "5"], ["--max-n", "3", "--max-exponent", "1"]] {
        let mut args = vec!["corpus", "--seed", "1", "--count", "50", "--json"];
        args.extend(limits);
        let o = igusa(&args);
        assert_eq!(code(&o), 0);
        let report = stdout(&o);
        assert_eq!(report.lines().count(), 50);
        for line in report.lines() {
            let v: Verification = serde_json::from_str(line).unwrap();
            assert!(v.pass);
            assert_eq!(serde_json::to_string(&v).unwrap(), line);
        }
        let summary: Value = serde_json::from_str(&stderr(&o)).unwrap();
        assert_eq!(summary["passed"], 50);
        assert_eq!(stdout(&igusa(&args)), report);
    }
}

#[test]
fn verify_reads_corpus_reports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let o = igusa(&["corpus", "--seed", "3", "--count", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("7/7 pass"), "{}", stdout(&o));
    let o = igusa(&["verify", "--file", path.to_str().unwrap(), "--bound", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("7/7 pass\n"), "{}", stdout(&o));
}
