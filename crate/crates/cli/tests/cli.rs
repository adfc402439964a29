use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use invol_core::json::{series_from_json, TableJson};
use invol_core::rational::int;
use invol_core::{Fixtures, LaurentPoly};

fn invol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = invol(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bell_table_first_row() {
    assert_eq!(ok(&["bell-table", "--max-n", "1"]), "B[1,1] = X1\n");
    let t = ok(&["bell-table", "--max-n", "4"]);
    assert!(t.contains("B[4,2] = 3*X2^2 + 4*X1*X3\n"));
    assert_eq!(t.lines().count(), 10);
}

#[test]
fn stirling_table_second_row() {
    let t = ok(&["stirling-table", "--max-n", "2"]);
    assert_eq!(t, "A[1,1] = X1^-1\nA[2,1] = -X1^-3*X2\nA[2,2] = X1^-2\n");
}

#[test]
fn lah_table_matches_reference_polynomials() {
    let json = ok(&["lah-table", "--max-n", "6", "--format", "json"]);
    let table: TableJson = serde_json::from_str(&json).unwrap();
    assert_eq!(table.family, "L");
    assert_eq!(table.entries.len(), 21);
    let polys = table.polys().unwrap();
    let fixtures = Fixtures::builtin();
    for n in 1..=6 {
        let item = fixtures.items.iter().find(|i| i.id == format!("lah{n}")).unwrap();
        let want = LaurentPoly::try_from(item.poly.as_ref().unwrap()).unwrap();
        let got = &polys.iter().find(|(m, k, _)| *m == n && *k == 1).unwrap().2;
        assert_eq!(got, &want, "L[{n},1]");
    }
    let text = ok(&["lah-table", "--max-n", "6"]);
    assert!(text.contains("L[4,1] = 30*X1^-6*X2^3 - 8*X1^-5*X2*X3 + 2*X1^-4*X4\n"), "{text}");
}

#[test]
fn verify_full_run_passes() {
    let text = ok(&["verify", "--max-n", "8", "--trials", "25", "--rng-seed", "7"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 9);
    assert!(text.ends_with("OK: 9 of 9 suites passed\n"));
}

#[test]
fn verify_single_suite_and_json() {
    let text = ok(&["verify", "--suite", "lemma", "--max-n", "6", "--trials", "2"]);
    assert!(text.starts_with("PASS lemma"));
    assert_eq!(text.lines().count(), 2);
    let json = ok(&["verify", "--suite", "ortho,jabotinsky", "--max-n", "5", "--trials", "2", "--numeric-max-n", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], true);
    let names: Vec<_> = v["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["ortho", "jabotinsky"]);
}

#[test]
fn verify_is_byte_identical_for_a_seed() {
    let args = ["verify", "--suite", "dual,faadibruno", "--max-n", "5", "--trials", "3", "--numeric-max-n", "7", "--rng-seed", "99", "--format", "json"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn verify_detects_corrupted_table() {
    let dir = tempfile::tempdir().unwrap();
    let json = ok(&["lah-table", "--max-n", "4", "--format", "json"]);
    let mut table: TableJson = serde_json::from_str(&json).unwrap();
    let entry = table.entries.iter_mut().find(|e| e.n == 4 && e.k == 1).unwrap();
    entry.poly.terms[0].coef = "31/1".into();
    let file = dir.path().join("bad.json");
    fs::write(&file, serde_json::to_string(&table).unwrap()).unwrap();
    let out = invol(&["verify", "--suite", "selfinv", "--max-n", "6", "--trials", "2", "--table-file", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("FAIL selfinv"), "{text}");
    // row 4 of the self-inverse sum cancels the error; row 5 exposes it
    assert!(text.contains("n=5 k=1"), "{text}");
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = invol(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_clean_tree() {
    let text = ok(&["reproduce-paper"]);
    assert!(text.ends_with("19 of 19 items reproduced\n"));
    assert!(text.lines().any(|l| l.starts_with("PASS f9:")));
    let one = ok(&["reproduce-paper", "--item", "f9"]);
    assert_eq!(one.lines().count(), 2);
}

#[test]
fn reproduce_reports_fixture_mismatch_as_diff() {
    let dir = tempfile::tempdir().unwrap();
    let mut fixtures = Fixtures::builtin();
    let item = fixtures.items.iter_mut().find(|i| i.id == "f5").unwrap();
    item.poly.as_mut().unwrap().terms[0].coef = "16".into();
    let file = dir.path().join("fx.json");
    fs::write(&file, serde_json::to_string(&fixtures).unwrap()).unwrap();
    let out = invol(&["reproduce-paper", "--fixtures", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL f5:"));
    assert!(text.contains("--- fixture/f5"));
    assert!(text.contains("+++ computed/f5"));
    assert!(text.contains("\n--15/2*a1*a2 + 16*a1^4\n") && text.contains("\n+-15/2*a1*a2 + 15*a1^4\n"), "{text}");
    assert!(text.ends_with("18 of 19 items reproduced\n"));
}

#[test]
fn series_eval_formats() {
    let json = ok(&["series", "eval", "--expr", "exp(sin(x))-1", "--order", "10", "--format", "json"]);
    let s = series_from_json(&json).unwrap();
    assert_eq!(s.coeff(10), int(-2951));
    let text = ok(&["series", "eval", "--expr", "-x/(1+x)", "--order", "3"]);
    assert_eq!(text, "f[0] = 0\nf[1] = -1\nf[2] = 2\nf[3] = -6\n");
    let ord = ok(&["series", "eval", "--expr", "-x/(1+x)", "--order", "3", "--convention", "ordinary", "--format", "json"]);
    assert!(ord.contains("\"ordinary\""));
    assert_eq!(series_from_json(&ord).unwrap(), series_from_json(&ok(&["series", "eval", "--expr", "-x/(1+x)", "--order", "3", "--format", "json"])).unwrap());
}

#[test]
fn series_eval_errors() {
    let out = invol(&["series", "eval", "--expr", "x +", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 3"));
    let out = invol(&["series", "eval", "--expr", "1/x", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn involution_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let f_file = dir.path().join("f.json");
    let g_file = dir.path().join("g.json");
    ok(&["involution", "gen", "--even-seeds", "2,24,720,40320", "--order", "9", "--format", "json", "--out", path(&f_file)]);
    let f = series_from_json(&fs::read_to_string(&f_file).unwrap()).unwrap();
    let neg = invol_core::expr::series_from_text("-x/(1+x)", 9).unwrap();
    assert_eq!(f, neg);

    assert!(ok(&["involution", "check", "--series-file", path(&f_file)]).starts_with("PASS"));

    ok(&["involution", "decompose", "--series-file", path(&f_file), "--odd-seeds", "1,1,1,1,1", "--format", "json", "--out", path(&g_file)]);
    let g = series_from_json(&fs::read_to_string(&g_file).unwrap()).unwrap();
    assert_eq!(g, invol_core::expr::series_from_text("exp(x)-1", 9).unwrap());

    let back = ok(&["involution", "conjugate", "--g-file", path(&g_file), "--format", "json"]);
    assert_eq!(series_from_json(&back).unwrap(), f);
    let short = ok(&["involution", "conjugate", "--g-file", path(&g_file), "--order", "4"]);
    assert_eq!(short.lines().count(), 5);
}

#[test]
fn involution_rejections() {
    let dir = tempfile::tempdir().unwrap();
    let e_file = dir.path().join("e.json");
    ok(&["series", "eval", "--expr", "exp(x)-1", "--order", "6", "--format", "json", "--out", path(&e_file)]);
    let out = invol(&["involution", "check", "--series-file", path(&e_file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL involution"));
    let out = invol(&["involution", "decompose", "--series-file", path(&e_file)]);
    assert_eq!(out.status.code(), Some(2));

    let id_file = dir.path().join("id.json");
    ok(&["series", "eval", "--expr", "x", "--order", "6", "--format", "json", "--out", path(&id_file)]);
    let out = invol(&["involution", "decompose", "--series-file", path(&id_file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("identity"));
}
