use std::process::{Command, Output};

use serde_json::Value;

fn grsod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grsod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = grsod(&full);
    let value = serde_json::from_slice(&out.stdout).expect("valid json");
    (value, out.status.code().unwrap())
}

#[test]
fn verify_gr24_passes() {
    let out = grsod(&["verify", "2", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: pass"));
    assert!(text.contains("Gr(2,4): 6 blocks"));

    let (report, code) = json(&["verify", "2", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["blocks"].as_array().unwrap().len(), 6);
    assert_eq!(report["matrix"].as_array().unwrap().len(), 30);
    assert_eq!(report["violations"], Value::Array(vec![]));
}

#[test]
fn increasing_order_on_projective_line_fails() {
    let out = grsod(&["verify", "1", "2", "--order", "asc"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("violations: (1) -> (0)"));

    let (report, code) = json(&["verify", "1", "2", "--order", "asc"]);
    assert_eq!(code, 1);
    assert_eq!(
        report["violations"],
        serde_json::json!([{ "source": [1], "target": [0] }])
    );

    // relabelled convention gives back a pass
    let out = grsod(&["verify", "1", "2", "--order", "asc", "--reverse-hom"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn lr_prints_the_coefficient() {
    let out = grsod(&["lr", "2,1", "2,1", "3,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n");
    let (value, _) = json(&["lr", "2,1", "2,1", "3,2,1"]);
    assert_eq!(value["coefficient"], 2);
}

#[test]
fn malformed_input_is_a_usage_error() {
    for args in [
        vec!["lr", "2,x", "1", "1"],
        vec!["lr", "1,2", "1", "1"],
        vec!["hom", "1,-1", "0", "2", "4"],
        vec!["hom", "3,0", "0,0", "2", "4"],
        vec!["verify", "2", "2"],
        vec!["verify", "1", "2", "--period", "0"],
        vec!["flag-blocks", "2,1", "4"],
        vec!["bbw", "--delta", "0", "--gamma", "0,0", "--n", "2"],
        vec!["frobnicate"],
    ] {
        let out = grsod(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.starts_with("grsod: "));
    }
}

#[test]
fn bbw_accepts_negative_weights() {
    let (value, code) = json(&["bbw", "--delta", "0,0", "--gamma", "0,-1", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(value["result"]["degree"], 0);
    assert_eq!(value["result"]["dim"], 4);
    assert_eq!(value["result"]["output"], serde_json::json!([0, 0, 0, -1]));

    let (value, _) = json(&["bbw", "--delta", "0", "--gamma", "1", "--n", "2"]);
    assert_eq!(value["result"]["acyclic"], true);
}

#[test]
fn hom_json_matches_the_report_schema() {
    let (value, code) = json(&["hom", "1,0", "0,0", "2", "4"]);
    assert_eq!(code, 0);
    assert_eq!(
        value,
        serde_json::json!({
            "alpha": [1, 0],
            "alpha_prime": [0, 0],
            "acyclic": false,
            "summands": [{ "beta": [0, -1], "mult": 1, "degree": 0, "dim": 4 }]
        })
    );
}

#[test]
fn json_output_is_deterministic_with_sorted_keys() {
    let first = grsod(&["--format", "json", "verify", "2", "5"]);
    let second = grsod(&["--format", "json", "verify", "2", "5"]);
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let top_keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top_keys.clone();
    sorted.sort_unstable();
    assert_eq!(top_keys, sorted);
}

#[test]
fn table_and_json_agree_on_counts() {
    let (value, code) = json(&["rank-audit", "3", "6"]);
    assert_eq!(code, 0);
    assert_eq!(
        (value["block_count"].as_u64(), value["expected"].as_u64()),
        (Some(20), Some(20))
    );
    let text = String::from_utf8(grsod(&["rank-audit", "3", "6"]).stdout).unwrap();
    assert!(text.contains("20 blocks, expected C(6,3) = 20"));

    let (value, _) = json(&["cauchy", "2", "2", "2"]);
    assert_eq!(
        (value["lhs"].as_u64(), value["rhs"].as_u64()),
        (Some(6), Some(6))
    );
    assert_eq!(value["equal"], true);
    let text = String::from_utf8(grsod(&["cauchy", "2", "2", "2"]).stdout).unwrap();
    assert!(text.contains("= 6, Σ") && text.ends_with("= 6: equal\n"));
}

#[test]
fn koszul_and_flags() {
    let (value, code) = json(&["koszul", "2", "4"]);
    assert_eq!(code, 0);
    let sizes: Vec<usize> = value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["pairs"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, vec![1, 1, 2, 1, 1]);
    assert_eq!(
        value["terms"][2]["pairs"][0],
        serde_json::json!({ "alpha": [2, 0], "conj": [1, 1] })
    );

    let (value, code) = json(&["flag-verify", "1,2", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value["blocks"].as_array().unwrap().len(), 6);
    assert_eq!(value["levels"].as_array().unwrap().len(), 2);
    assert_eq!(
        value["blocks"][0]["alphas"],
        serde_json::json!([[1], [1, 1]])
    );

    let (value, _) = json(&["blocks", "2", "4", "--period", "2"]);
    let twists: Vec<u64> = value["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["twist"].as_u64().unwrap())
        .collect();
    assert_eq!(twists, vec![0, 1, 0, 0, 1, 0]);
}
