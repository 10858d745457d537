use std::process::{Command, Output};

use mckay_core::mckay::RestrictionReport;
use serde_json::Value;

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mckay(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn odd_chars_lists_degrees() {
    let six = stdout(&["odd-chars", "6"]);
    let lines: Vec<&str> = six.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "(6) 1");
    assert_eq!(lines[2], "(4,2) 9");
    assert_eq!(stdout(&["odd-chars", "1"]).lines().count(), 1);
    assert_eq!(stdout(&["odd-chars", "4"]).lines().count(), 4);
    let tsv = stdout(&["odd-chars", "4", "--tsv"]);
    assert_eq!(tsv.lines().next(), Some("partition\tdegree"));
    assert_eq!(mckay(&["odd-chars", "x"]).status.code(), Some(2));
    assert_eq!(mckay(&["odd-chars", "0"]).status.code(), Some(2));
}

#[test]
fn bijection_table_for_six() {
    let text = stdout(&["bijection", "6", "--exponent", "--tsv"]);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(
        rows,
        [
            "(6)\t((4),(2))",
            "(5,1)\t((4),(1^2))",
            "(4,2)\t((3,1),(2))",
            "(3^2)\t((3,1),(1^2))",
            "(2^3)\t((2,1^2),(2))",
            "(2^2,1^2)\t((2,1^2),(1^2))",
            "(2,1^4)\t((1^4),(2))",
            "(1^6)\t((1^4),(1^2))",
        ]
    );
    assert_eq!(stdout(&["bijection", "2"]).lines().count(), 2);
    let eight: Value = serde_json::from_str(&stdout(&["bijection", "8", "--json"])).unwrap();
    assert_eq!(eight[1]["hook_tuple"], "((7,1))");
}

#[test]
fn restrict_reports_round_trip() {
    let json = stdout(&["restrict", "3,3", "--full", "--json"]);
    let report: RestrictionReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report.n, 6);
    assert_eq!(report.distinct_linear_count(), 3);
    let full = report.full_decomposition.as_ref().unwrap();
    assert_eq!(full.keys().filter(|l| l.degree() == 2).count(), 1);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);

    let trivial: RestrictionReport = serde_json::from_str(&stdout(&["restrict", "(8)", "--json"])).unwrap();
    assert!(trivial.full_decomposition.is_none());
    let linear: Vec<u64> = trivial
        .linear_multiplicities
        .values()
        .copied()
        .filter(|&m| m > 0)
        .collect();
    assert_eq!(linear, [1]);

    let hook = stdout(&["restrict", "5,1,1,1", "--full"]);
    assert!(hook.contains("full decomposition:"));
    assert!(hook.contains("total linear constituents: 1"));
    assert!(stdout(&["restrict", "3,3", "--distinct"]).contains("distinct linear constituents: 3"));
    assert_eq!(mckay(&["restrict", "3,2,a"]).status.code(), Some(2));
    assert_eq!(mckay(&["restrict", "32"]).status.code(), Some(2));
}

#[test]
fn thin_wrappers() {
    assert_eq!(stdout(&["lr", "3,2,1", "2,1", "2,1"]), "2\n");
    assert_eq!(stdout(&["mn", "2,2", "4"]), "0\n");
    assert_eq!(stdout(&["mn", "3,1", "1^4"]), "3\n");
    let v: Value = serde_json::from_str(&stdout(&["mn", "2,1", "3", "--json"])).unwrap();
    assert_eq!(v["value"], -1);
    assert_eq!(mckay(&["mn", "2,1", "4"]).status.code(), Some(2));
    assert_eq!(stdout(&["phi", "1", "1"]), "-\n");
    assert_eq!(stdout(&["phi", "2", "0"]), "++\n");
    assert_eq!(mckay(&["phi", "2", "4"]).status.code(), Some(2));

    let delta = stdout(&["delta", "(7^3,6,5,4,3^2,1^2)"]);
    assert_eq!(
        delta,
        "delta: (4,4,3,3,2,2,2,1,1)\nskew row lengths: (3,3,4,3,3,2,1,2,0,1)\n"
    );
    assert_eq!(mckay(&["delta", "3,2"]).status.code(), Some(2));
    let filling: Value = serde_json::from_str(&stdout(&["filling", "(7^3,6,5,4,3^2,1^2)", "--json"])).unwrap();
    assert_eq!(filling["rows"][2], serde_json::json!([1, 3, 3, 3]));
    assert_eq!(filling["rows"][8], serde_json::json!([]));
}

#[test]
fn verifiers_exit_codes() {
    for theorem in ["A2", "B", "prop2m1", "lr-hooks", "young-reduc"] {
        let out = mckay(&["verify", "--theorem", theorem, "--max-n", "8"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{theorem}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let json: Value = serde_json::from_str(&stdout(&["verify", "--theorem", "A2", "--max-n", "4", "--json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
    assert_eq!(mckay(&["verify", "--theorem", "C"]).status.code(), Some(2));
    assert_eq!(
        mckay(&["verify", "--theorem", "A2", "--max-n", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["verify", "--theorem", "B", "--max-n", "7", "--json"]);
    let b = stdout(&["verify", "--theorem", "B", "--max-n", "7", "--json"]);
    assert_eq!(a, b);
}
