use std::process::{Command, Output};

use stringyk_cli::table::{parse_json, render, Format};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stringyk")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Vec<stringyk_cli::TableDocument> {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    parse_json(&stdout(&a)).expect("valid JSON")
}

const ALPHA: &str = "sq1(x1*x2*x3)";

fn value_of(doc: &stringyk_cli::TableDocument, key: &str) -> String {
    doc.rows.iter().find(|r| r[0].starts_with(key)).unwrap_or_else(|| panic!("no row {key}"))[1].clone()
}

#[test]
fn transgress_sq1_gives_alpha() {
    let docs = json(&["transgress", "--k", "3", "--poly", "x1*x2*x3", "--sq1"]);
    assert_eq!(value_of(&docs[0], "class"), "x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2");
    assert_eq!(value_of(&docs[0], "integral"), "yes");
}

#[test]
fn transgress_of_alpha() {
    let docs = json(&["transgress", "--k", "3", "--poly", ALPHA, "--g", "1,0,0"]);
    assert_eq!(value_of(&docs[0], "tau_g"), "x2^2*x3 + x2*x3^2");
    let docs = json(&["transgress", "--k", "3", "--poly", ALPHA, "--g", "0,0,0"]);
    assert_eq!(value_of(&docs[0], "tau_g"), "0");
    let docs = json(&["transgress", "--k", "3", "--poly", ALPHA, "--g", "1,0,0", "--h", "0,1,0"]);
    assert_eq!(value_of(&docs[0], "tau_h tau_g"), "x3^2");
}

fn grand_total(docs: &[stringyk_cli::TableDocument]) -> String {
    let last = docs.last().unwrap();
    assert_eq!(last.title, "Totals");
    last.total.as_ref().unwrap()[1].clone()
}

#[test]
fn rank_point_twisted() {
    let docs = json(&["rank", "--space", "point", "--class", ALPHA]);
    assert_eq!(grand_total(&docs), "22");
    assert_eq!(docs.len(), 9);
}

#[test]
fn rank_t6_twisted() {
    let docs = json(&["rank", "--space", "t6", "--class", ALPHA]);
    assert_eq!(grand_total(&docs), "1208");
    let sectors: Vec<&str> = docs.last().unwrap().rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(sectors, ["216", "160", "160", "128", "160", "128", "128", "128"]);
}

#[test]
fn rank_point_untwisted() {
    let docs = json(&["rank", "--space", "point", "--class", "0"]);
    assert_eq!(docs[0].title.split(' ').nth(3), Some("0,0,0"));
    assert_eq!(docs[0].total.as_ref().unwrap()[4], "8");
    assert_eq!(grand_total(&docs), "64");
}

#[test]
fn rank_explicit_product_and_sector() {
    let docs = json(&["rank", "--space", "4* * 4* * T2[x3]", "--class", ALPHA, "--sector", "1,1,0"]);
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0].rows.len(), 8);
}

#[test]
fn rank_errors() {
    assert_eq!(run(&["rank", "--space", "point", "--class", "x1"]).status.code(), Some(3));
    assert_eq!(run(&["rank", "--space", "point", "--class", "x1*"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "--space", "klein bottle"]).status.code(), Some(2));
    assert_eq!(run(&["rank"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "--space", "point", "--group", "Z4", "--class", "x1^2"]).status.code(), Some(3));
}

#[test]
fn star_point_rule() {
    let x = r#"{"sector":"1,0,0","components":{"1,0,0":[[1,"1"]]}}"#;
    let docs = json(&["star", "--space", "point", "--class", ALPHA, "--left", x, "--right", x]);
    let product: Vec<&Vec<String>> = docs[0].rows.iter().filter(|r| r[0] == "product").collect();
    assert_eq!(product.len(), 1);
    assert_eq!(product[0][1..], ["0,0,0", "1,0,0", "1", "1"]);
    assert_eq!(docs[1].rows[0][1], r#"{"components":{"1,0,0":[["1","1"]]},"sector":"0,0,0"}"#);
}

#[test]
fn star_unit_is_neutral() {
    let x = r#"{"sector":"1,1,0","components":{"0,0,0":[[1,"e2⊗e3⊗1"]]}}"#;
    let docs = json(&["star", "--space", "t6", "--class", ALPHA, "--left", "unit", "--right", x]);
    let rows = |op: &str| -> Vec<Vec<String>> {
        docs[0].rows.iter().filter(|r| r[0] == op).map(|r| r[1..].to_vec()).collect()
    };
    assert_eq!(rows("product"), rows("right"));
}

#[test]
fn star_errors() {
    let bad_support = r#"{"sector":"1,0,0","components":{"0,1,0":[[1,"1"]]}}"#;
    let out = run(&["star", "--space", "point", "--class", ALPHA, "--left", bad_support, "--right", "unit"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["star", "--space", "point", "--left", "{not json", "--right", "unit"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["star", "--space", "point", "--left", "unit"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn star_wproj_sum_above() {
    let docs = json(&["star", "--wproj", "--p", "3", "--n", "1", "--j", "2", "--k", "2"]);
    let product = docs[0].rows.iter().find(|r| r[0] == "product").unwrap();
    assert_eq!(product[1..], ["g1", "0", "1 - z"]);
    assert!(docs[0].title.ends_with("case j+k>p"));
}

#[test]
fn star_wproj_values() {
    let docs = json(&[
        "star", "--wproj", "--p", "5", "--n", "2", "--j", "0", "--k", "3", "--left", "u^2 + 3; z", "--right", "2; z^2",
    ]);
    let product = docs[0].rows.iter().find(|r| r[0] == "product").unwrap();
    // p(1) = 4, times 2
    assert_eq!(product[1..], ["g3", "8", "z^3"]);
    let out = run(&["star", "--wproj", "--p", "6", "--n", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["star", "--wproj", "--p", "5", "--n", "1", "--j", "1", "--left", "u; 1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn wproj_cases_table() {
    let docs = json(&["wproj", "--p", "5", "--n", "3", "--table", "cases"]);
    let rows = &docs[0].rows;
    assert_eq!(rows.len(), 25);
    let find = |j: &str, k: &str| rows.iter().find(|r| r[0] == j && r[1] == k).unwrap().clone();
    assert_eq!(find("0", "2")[4], "(p(1)s, q(z)w(z), g2)");
    assert_eq!(find("1", "3")[4], "(rs, q(z)w(z), g4)");
    assert_eq!(find("2", "3")[4], "(rs(1-u)^3, q(z)w(z)(1-z)^3, g0)");
    assert_eq!(find("4", "3")[4], "(0, q(z)w(z)(1-z)^3, g2)");
}

#[test]
fn wproj_presentations() {
    let docs = json(&["wproj", "--p", "2", "--n", "1", "--check", "presentations"]);
    assert_eq!(docs.len(), 2);
    for d in &docs {
        assert_eq!(d.total.as_ref().unwrap()[1], "pass", "{}", d.title);
    }
    let docs = json(&["wproj", "--p", "3", "--n", "2", "--check", "presentations"]);
    assert_eq!(docs[0].total.as_ref().unwrap()[1], "pass");
    assert_eq!(value_of(&docs[1], "quotient dimension"), "7");
    assert_eq!(value_of(&docs[1], "table dimension"), "5");
}

#[test]
fn wproj_constants_table() {
    let docs = json(&["wproj", "--p", "3", "--n", "2", "--table", "constants"]);
    assert_eq!(docs[0].headers, ["⋆", "1", "(1-u)", "(1-u)^2", "g1", "g2"]);
    assert_eq!(docs[0].rows[3][5], "(1-u)^2");
    assert!(docs[1].rows.iter().all(|r| r[1] == "yes"));
}

#[test]
fn wproj_composite_p() {
    let out = run(&["wproj", "--p", "4", "--n", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not prime"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["rank", "--space", "t6", "--class", ALPHA],
        vec!["wproj", "--p", "3", "--n", "2", "--table", "products"],
        vec!["star", "--space", "t6", "--class", ALPHA, "--left", "unit", "--right", "unit"],
    ] {
        for f in ["markdown", "csv", "json"] {
            let mut a = args.clone();
            a.extend(["--format", f]);
            assert_eq!(stdout(&a), stdout(&a), "{a:?}");
        }
    }
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["rank", "--space", "point", "--class", ALPHA, "--format", "json"],
        vec!["wproj", "--p", "5", "--n", "1", "--table", "constants", "--check", "presentations", "--format", "json"],
        vec!["transgress", "--k", "3", "--poly", ALPHA, "--g", "1,1,0", "--format", "json"],
    ] {
        let text = stdout(&args);
        let docs = parse_json(&text).unwrap();
        assert_eq!(render(&docs, Format::Json), text);
    }
}
