use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chern-bounds"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_json_matches_golden_file() {
    let golden = include_str!("golden/analyze_cp2x2_rp2_s1.json");
    let (code, stdout, _) = run(&["analyze", "CP2^2 x RP2 x S1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden);
}

#[test]
fn analyze_cp2_json() {
    let (code, stdout, _) = run(&["analyze", "CP2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["tri"]["min_n"], 6);
    assert_eq!(v["tri"]["exist_n"], 6);
    assert_eq!(v["tri"]["optimal"], true);
    assert_eq!(v["manifold"]["expression"], "CP2");
}

#[test]
fn error_exit_codes() {
    let (code, stdout, stderr) = run(&["analyze", "CP2 ^"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("offset 5"));
    assert_eq!(run(&["analyze", "RP4"]).0, 3);
    assert_eq!(run(&["chern", "RP3"]).0, 3);
    assert_eq!(run(&["analyze", "CP2", "--format", "yaml"]).0, 1);
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["table", "M4k", "--k", "0..1"]).0, 1);
}

#[test]
fn chern_prints_class_and_inverse() {
    let (code, stdout, _) = run(&["chern", "CP2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("c(C(x)TM)       1 - 3*a1^2\n"));
    assert!(stdout.contains("c(Q)            1 + 3*a1^2\n"));
    let (_, json, _) = run(&["chern", "CP2", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert!(v.get("tri").is_none());
    assert_eq!(v["inverse_class"][1]["coefficient"], 3);
}

#[test]
fn table_examples() {
    let (code, stdout, _) = run(&["table", "M4k2", "--k", "1..3", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = serde_json::from_str(&stdout).unwrap();
    let mins: Vec<_> = rows.iter().map(|r| r["tri_min_n"].as_u64().unwrap()).collect();
    assert_eq!(mins, [9, 15, 21]);

    let (_, stdout, _) = run(&["table", "OrientS2", "--k", "1..2", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_str(&stdout).unwrap();
    for (row, n) in rows.iter().zip([8, 14]) {
        assert_eq!(row["tri_min_n"], n);
        assert_eq!(row["tri_exist_n"], n);
    }

    let (_, stdout, _) = run(&["table", "m4k", "--k", "1..1", "--format", "json"]);
    let rows: Vec<Value> = serde_json::from_str(&stdout).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0]["dimension"].as_u64(), rows[0]["tri_min_n"].as_u64()), (Some(4), Some(6)));
}

/// Every integer in the JSON output also appears in the text output.
fn assert_same_numbers(args: &[&str]) {
    let (_, text, _) = run(args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (_, json, _) = run(&json_args);
    fn numbers(v: &Value, out: &mut Vec<i64>) {
        match v {
            Value::Number(n) => out.push(n.as_i64().unwrap()),
            Value::Array(items) => items.iter().for_each(|i| numbers(i, out)),
            Value::Object(map) => map
                .iter()
                .filter(|(k, _)| *k != "degree" && *k != "mod")
                .for_each(|(_, v)| numbers(v, out)),
            _ => {}
        }
    }
    let mut expected = Vec::new();
    numbers(&serde_json::from_str(&json).unwrap(), &mut expected);
    let tokens: Vec<i64> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().unwrap())
        .collect();
    for n in expected {
        assert!(tokens.contains(&n.abs()), "{n} missing from text output of {args:?}:\n{text}");
    }
}

#[test]
fn text_and_json_agree() {
    assert_same_numbers(&["analyze", "CP2^2 x RP2 x S1"]);
    assert_same_numbers(&["analyze", "CP3 x S4"]);
    assert_same_numbers(&["chern", "CP2 x RP2"]);
    assert_same_numbers(&["table", "M4k3", "--k", "1..4"]);
}
