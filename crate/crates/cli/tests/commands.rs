use std::process::{Command, Output};

use ramsey_trees::{from_graph6, TreeFamily};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey-trees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not one JSON document ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn ex_tstar_closed_form() {
    let out = run(&["ex", "--family", "tstar", "-n", "8", "-p", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    // 8^2 - 6*8 + 11
    assert_eq!(doc["edges"], 27);
    assert!(doc["branch"].is_string());
    assert!(doc["citation"].is_string());
}

#[test]
fn ex_without_closed_form_uses_generic_bounds() {
    let out = run(&["ex", "--family", "tstar", "-n", "5", "-p", "10"]);
    let doc = json(&out);
    // 2 K_4 ∪ K_2 below, 3 * 9 / 2 above; they meet, so the value is exact
    assert_eq!(doc["lower"], 13);
    assert_eq!(doc["upper"], 13);
    assert_eq!(doc["exact"], true);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ramsey_star_against_tstar_is_exact() {
    let out = run(&["ramsey", "--left", "star:7", "--right", "tstar:11"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["lower"], 14);
    assert_eq!(doc["upper"], 14);
    assert_eq!(doc["exact"], true);
    let provenance = doc["provenance"].as_array().unwrap();
    assert!(!provenance.is_empty());
    for c in provenance {
        assert!(c["id"].is_string() && c["quote"].is_string() && c["params"].is_object());
    }
}

#[test]
fn ramsey_interval_exits_two() {
    let out = run(&["ramsey", "--left", "tstar:7", "--right", "tstar:11"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["exact"], false);
}

#[test]
fn ramsey_general_graph_with_certificate() {
    // P6 as an explicit graph; ex(7; P6) = 11, so 7:15 is loose but true and 7:10 is false
    let path6 = ramsey_trees::to_graph6(&TreeFamily::Path(6).realize().unwrap());
    let left = format!("graph:{path6}");
    let out = run(&["ramsey", "--left", &left, "--right", "tstar:9", "--cert", "7:15"]);
    assert!(matches!(out.status.code(), Some(0 | 2)));
    let doc = json(&out);
    assert!(doc["provenance"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["id"] == "certified-turan"));

    let bad = run(&["ramsey", "--left", &left, "--right", "tstar:9", "--cert", "7:10"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_ex_sweep_passes() {
    let out = run(&["verify", "ex", "--n-max", "6", "--p-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["mismatches"], 0);
    assert!(doc["checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_frobenius_and_witnesses_pass() {
    for what in ["frobenius", "witnesses"] {
        let out = run(&["verify", what]);
        assert_eq!(out.status.code(), Some(0), "{what}");
        assert_eq!(json(&out)["mismatches"], 0);
    }
}

#[test]
fn witness_validates() {
    let out = run(&[
        "witness",
        "--construction",
        "two-cliques-below-order",
        "--params",
        r#"{"n":9}"#,
        "--left",
        "path:9",
        "--right",
        "tstar:9",
        "--validate",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["order"], 12);
    assert_eq!(doc["implied_lower"], 13);
    assert_eq!(doc["validated"], true);
    assert_eq!(doc["validation"]["passed"], true);
}

#[test]
fn witness_for_wrong_pair_exits_two() {
    // 2K_6 contains a star on 6 vertices
    let out = run(&[
        "witness",
        "--construction",
        "two-cliques-below-order",
        "--params",
        r#"{"n":9}"#,
        "--left",
        "star:6",
        "--right",
        "tstar:9",
        "--validate",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["validated"], false);
}

#[test]
fn infeasible_recipe_is_an_error() {
    let out = run(&[
        "export",
        "--construction",
        "equal-cliques",
        "--params",
        r#"{"m":7,"n":10}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn graph6_export_round_trips() {
    for tag in ["path:8", "star:7", "tprime:6", "tstar:9"] {
        let out = run(&["export", tag, "--graph6"]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        let g = from_graph6(text.trim()).unwrap();
        let expected = tag.parse::<TreeFamily>().unwrap().realize().unwrap();
        assert_eq!(g, expected, "{tag}");
    }
    let out = run(&[
        "export",
        "--construction",
        "clique-union",
        "--params",
        r#"{"m":6,"n":8,"x":1,"y":1}"#,
    ]);
    let doc = json(&out);
    let g = from_graph6(doc["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(g.order() as u64, doc["order"].as_u64().unwrap());
    assert_eq!(g.edge_count() as u64, doc["edge_count"].as_u64().unwrap());
    // K5 ∪ K4
    assert_eq!(g.edge_count(), 10 + 6);
}

#[test]
fn dot_export() {
    let out = run(&["export", "star:4", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("--").count(), 3);
}

#[test]
fn oracle_commands() {
    let out = run(&["oracle", "ramsey", "--left", "path:4", "--right", "path:4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], 5);

    let out = run(&["oracle", "ex", "--tree", "path:5", "-p", "7", "--max-order", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["complete"], false);
}

#[test]
fn scan_jsonl_ends_with_summary() {
    let out = run(&["scan", "tstar-maximizes-ex", "-n", "6", "--p-max", "7", "--jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["failures"], 0);
    assert_eq!(summary["checked"].as_u64().unwrap() as usize, lines.len() - 1);
}

#[test]
fn bad_input_exits_one() {
    for args in [
        &["ex", "--family", "spider", "-n", "5", "-p", "6"][..],
        &["ramsey", "--left", "path:x", "--right", "star:4"],
        &["scan", "no-such-conjecture", "-n", "6"],
        &["ramsey", "--left", "star:5", "--right", "star:5", "--dot"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
