use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const D1: &str = "field: Q\nd: 1\nbeta: 2\ntheta: 1, -1\ntheta_star: 1, -1\nzeta: 1, 2\n";

const TYPE_ONE: &str = "field: Q\nd: 3\nq: 2\na: 0\nb: 1\nc: 3\na*: 1\nb*: 2\nc*: 5\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn tdpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdpair")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = tdpair(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn d1_example_polynomial() {
    let f = file(D1);
    assert_eq!(ok(&["drinfeld", path(&f)]), "[4, -1]\n");
    assert_eq!(ok(&["validate", path(&f)]), "beta: 2\ntype: II\n");
}

#[test]
fn d1_example_checks_pass() {
    let f = file(D1);
    assert_eq!(ok(&["d4-check", path(&f)]), "PASS\n");
    let specials = ok(&["specials", path(&f)]);
    assert!(specials.starts_with("first: 2\nexpected: 2\n"));
    assert!(specials.ends_with("PASS\n"));
}

#[test]
fn every_relative_gives_the_same_polynomial() {
    let f = file(D1);
    for word in ["", "s", "d", "D", "dD", "ds", "Ds", "dDs"] {
        assert_eq!(ok(&["--relative", word, "drinfeld", path(&f)]), "[4, -1]\n");
    }
}

#[test]
fn field_override_reduces_modulo_p() {
    let f = file(D1);
    assert_eq!(ok(&["--field", "Fp:11", "drinfeld", path(&f)]), "[4, 10]\n");
}

#[test]
fn phi_file_matches_zeta_file() {
    let f = file(&D1.replace("zeta: 1, 2", "phi: 2"));
    assert_eq!(ok(&["drinfeld", path(&f)]), "[4, -1]\n");
}

#[test]
fn input_errors_exit_two() {
    let bad = file(&D1.replace("theta: 1, -1", "theta: 1, 1"));
    let out = tdpair(&["drinfeld", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(tdpair(&["drinfeld", "/nonexistent/array.txt"]).status.code(), Some(2));
    assert_eq!(tdpair(&["bracket", "1", "1", "1", "--type", "V"]).status.code(), Some(2));
}

#[test]
fn bracket_values() {
    // 2!·2!·2! / (1!·1!·1!·3!)
    assert_eq!(ok(&["bracket", "1", "1", "1", "--type", "II"]), "4/3\n");
    assert_eq!(ok(&["bracket", "1", "1", "1", "--type", "III-"]), "0\n");
    assert_eq!(ok(&["bracket", "0", "2", "3", "--type", "I", "--q", "2"]), "1\n");
    assert_eq!(ok(&["bracket", "1", "1", "1", "--type", "IV"]), "0\n");
}

#[test]
fn realize_then_oracle_recovers_zeta() {
    let data = file(TYPE_ONE);
    let args = ["--type", "I", "--data", path(&data), "--t", "7"];
    let phi = ok(&[&["leonard", "phi"][..], &args].concat());
    let zeta_line = phi.lines().find(|l| l.starts_with("zeta:")).unwrap().to_string();
    let matrices = file(&ok(&[&["leonard", "realize"][..], &args].concat()));
    assert_eq!(ok(&["leonard", "oracle", path(&matrices)]), format!("{zeta_line}\n"));
}

#[test]
fn leonard_roots_with_and_without_psi() {
    let data = file(TYPE_ONE);
    let base = ["leonard", "roots", "--type", "I", "--data", path(&data), "--t", "31"];
    // b b* c c* = 30, so ψ ∈ {1, 30} and the roots are ψ q^(4-2i) + 30 ψ^-1 q^(2i-4).
    let given = ok(&[&base[..], &["--psi", "1"]].concat());
    assert_eq!(given, "psi: 1\nroots: 23/2, 31, 481/4\nPASS\n");
    let solved = ok(&base);
    assert!(solved.ends_with("PASS\n"));
    assert_eq!(tdpair(&[&base[..], &["--psi", "2"]].concat()).status.code(), Some(2));
}

#[test]
fn leonard_array_passes_d4_check() {
    let data = file(TYPE_ONE);
    let array = file(&ok(&["leonard", "array", "--type", "I", "--data", path(&data), "--t", "7"]));
    assert_eq!(ok(&["d4-check", path(&array)]), "PASS\n");
    assert!(ok(&["specials", path(&array)]).ends_with("PASS\n"));
}

#[test]
fn inconsistent_matrices_fail() {
    let m = file(
        "field: Q\ntheta: 1, 0, -1\ntheta_star: 1, 0, -1\nA: 1, 0, 0; 1, 0, 0; 0, 1, -1\nA_star: 1, 2, 1; 0, 0, 3; 0, 0, -1\n",
    );
    let out = tdpair(&["leonard", "oracle", path(&m)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("FAIL\n"));
}

#[test]
fn series_commands() {
    // (5-2)_3 / (5)_3 = 60/210
    assert_eq!(ok(&["series", "eval", "--kind", "2F1", "--num", "-3,2", "--den", "5", "--arg", "1"]), "2/7\n");
    for (id, params, q) in [
        ("q-saalschutz", "3,5,7/2", Some("2")),
        ("saalschutz", "1/2,3,-5/3", None),
        ("chu-vandermonde", "2,5", None),
        ("q-chu-vandermonde", "3,1/5", Some("-2")),
        ("q-chu-vandermonde-shifted", "3,1/5", Some("3/2")),
        ("binomial", "3", None),
    ] {
        let mut args = vec!["series", "check", "--identity", id, "--n", "4", "--params", params];
        if let Some(q) = q {
            args.extend(["--q", q]);
        }
        assert_eq!(ok(&args), "PASS\n", "{id}");
    }
    let unknown = tdpair(&["series", "check", "--identity", "gauss", "--n", "2", "--params", "1"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn relation_commands() {
    assert!(ok(&["krawtchouk", "--d", "3", "--zeta", "1,-2,3,5"]).ends_with("PASS\n"));
    assert!(ok(&["qgeometric", "--d", "2", "--q", "2", "--zeta", "-1/2,7"]).ends_with("PASS\n"));
    assert_eq!(tdpair(&["krawtchouk", "--d", "3", "--zeta", "1,2"]).status.code(), Some(2));
}

#[test]
fn seeded_output_is_deterministic() {
    let a = ok(&["--seed", "5", "random", "--type", "I", "--d", "4"]);
    assert_eq!(a, ok(&["--seed", "5", "random", "--type", "I", "--d", "4"]));
    assert_ne!(a, ok(&["--seed", "6", "random", "--type", "I", "--d", "4"]));
    let f = file(&a);
    assert_eq!(ok(&["d4-check", path(&f)]), "PASS\n");
}

#[test]
fn oracle_sweep_passes() {
    let out = ok(&["--seed", "3", "oracle", "--count", "2", "--max-d", "4"]);
    assert_eq!(out.lines().count(), 11);
    assert!(out.ends_with("PASS\n"));
}
