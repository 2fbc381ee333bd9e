use std::fs;
use std::path::Path;

use globcoal_cli::{run, RunRecord};
use jsonschema::JSONSchema;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("globcoal").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = call(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

fn assert_schema(name: &str, v: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    let compiled = JSONSchema::compile(&schema).unwrap();
    let msgs: Vec<String> = match compiled.validate(v) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name} schema: {msgs:?}\n{v}");
}

#[test]
fn compute_cycle_seven() {
    let (code, v) = json(&["compute", "--kind", "gc", "--family", "cycle:7", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 5);
    assert_eq!(v["exact"], true);
    assert_schema("compute", &v);
}

#[test]
fn verify_exit_codes() {
    let (code, v) = json(&["verify", "--kind", "gc", "--graph", "path:3", "--partition", "[[0],[1],[2]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_schema("verify", &v);

    let (code, v) = json(&["verify", "--kind", "gc", "--graph", "cycle:3", "--partition", "[[0],[1],[2]]"]);
    assert_eq!(code, 2);
    assert_eq!(v["valid"], false);
    let reasons: Vec<&str> =
        v["violations"].as_array().unwrap().iter().map(|x| x["reason"].as_str().unwrap()).collect();
    assert_eq!(reasons, ["NoPartner"; 3]);
    assert_schema("verify", &v);
}

#[test]
fn malformed_input_gives_error_json() {
    for args in [
        &["compute", "--graph", "g6:~~"][..],
        &["compute", "--graph", "nosuch:3"],
        &["verify", "--graph", "path:3", "--partition", "[[0,1]]"],
        &["verify", "--graph", "path:3", "--partition", "not json"],
        &["compute", "--graph", "file:/nonexistent/graph.txt"],
        &["check", "--theorem", "no_such_theorem"],
        &["construct", "--family", "path:5", "--method", "center"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 1, "{args:?}");
        assert_schema("error", &v);
    }
}

#[test]
fn usage_errors_print_usage() {
    for args in [
        &["compute", "--family", "cycle:5", "--seed", "1"][..],
        &["compute", "--family", "cycle:5", "--bogus"],
        &["compute"],
        &["compute", "--family", "cycle:5", "--graph", "path:3"],
        &["compute", "--family", "cycle:5", "--budget", "0"],
    ] {
        let (code, out) = call(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.starts_with("error:"), "{out}");
    }
    let (_, out) = call(&["compute", "--family", "cycle:5", "--seed", "1"]);
    assert!(out.contains("Usage: globcoal compute"), "{out}");
}

#[test]
fn budget_exhaustion_exits_three() {
    let (code, v) = json(&["compute", "--family", "cycle:12", "--budget", "5"]);
    assert_eq!(code, 3);
    assert_eq!(v["exact"], false);
    assert_schema("compute", &v);
}

#[test]
fn family_dot_and_json() {
    let (code, dot) = call(&["family", "--spec", "gk:4", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph \"gk:4\" {"));
    assert!(dot.trim_end().ends_with('}'));
    for spec in ["gk:4", "wheel:6", "u3_14:1,2", "path:5"] {
        let (code, v) = json(&["family", "--spec", spec]);
        assert_eq!(code, 0);
        assert_schema("family", &v);
    }
}

#[test]
fn gcg_of_p4_singletons_is_a_matching() {
    let (code, dot) = call(&["gcg", "--graph", "path:4", "--partition", "singletons", "--format", "dot"]);
    assert_eq!(code, 0);
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).map(str::trim).collect();
    assert_eq!(edges, ["0 -- 3;", "1 -- 2;"]);
    let (_, v) = json(&["gcg", "--graph", "path:4", "--partition", "singletons"]);
    assert_schema("gcg", &v);
}

#[test]
fn construct_methods() {
    let (code, v) = json(&["construct", "--family", "cycle:6", "--method", "domatic"]);
    assert_eq!(code, 0);
    assert_schema("construct", &v);
    let (code, v) = json(&["construct", "--family", "wheel:6", "--method", "proof"]);
    assert_eq!(code, 0);
    assert_eq!(v["classes"], 5);
    assert_schema("construct", &v);
    let (code, v) = json(&["construct", "--graph", "cycle:5", "--method", "center", "--vertex", "0"]);
    assert_eq!(code, 0);
    assert_schema("construct", &v);
}

#[test]
fn check_csv_and_json() {
    let (code, csv) = call(&["check", "--theorem", "gc_eq_c_rad3", "--max-n", "7"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("theorem,key,instance,n,status,expected,actual,detail,graph6,partition"));
    assert!(lines.all(|l| l.starts_with("gc_eq_c_rad3,") && l.contains(",pass,")));

    let (code, v) = json(&["check", "--theorem", "gc_cycles", "--max-n", "8", "--format", "json"]);
    assert_eq!(code, 0);
    assert_schema("check", &v);
}

#[test]
fn check_all_at_seven_fails_only_on_small_fans() {
    let (code, csv) = call(&["check", "--all", "--max-n", "7"]);
    assert_eq!(code, 2);
    let failing: Vec<&str> = csv.lines().filter(|l| !l.contains(",pass,")).skip(1).collect();
    assert_eq!(failing.len(), 2, "{failing:?}");
    assert!(failing.iter().all(|l| l.starts_with("gc_fans,")));
}

#[test]
fn tiny_budget_check_is_inconclusive() {
    let (code, v) = json(&["check", "--theorem", "gc_cycles", "--max-n", "12", "--budget", "1", "--format", "json"]);
    assert_eq!(code, 3);
    assert!(v["reports"][0]["summary"]["inconclusive"].as_u64().unwrap() > 0);
}

#[test]
fn enumerate_corpora() {
    let (code, v) = json(&["enumerate", "--class", "trees", "--n", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 23);
    assert_schema("enumerate", &v);
    let (_, v) = json(&["enumerate", "--class", "unicyclic", "--cycle", "5", "--n", "6"]);
    assert_eq!(v["count"], 2);
    let (code, _) = json(&["enumerate", "--class", "connected", "--n", "11"]);
    assert_eq!(code, 1);
}

#[test]
fn graph_sources_agree() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c5.txt");
    fs::write(&edges, "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let part = dir.path().join("p.json");
    fs::write(&part, "[[0,1,2,3],[4]]").unwrap();
    let file_arg = format!("file:{}", edges.display());
    let (_, a) = json(&["compute", "--graph", &file_arg]);
    let (_, b) = json(&["compute", "--graph", "g6:Dhc"]);
    let (_, c) = json(&["compute", "--graph", "cycle:5"]);
    assert_eq!(a["value"], 4);
    assert_eq!(a["witness"], b["witness"]);
    assert_eq!(b["witness"], c["witness"]);
    let part_arg = format!("file:{}", part.display());
    let (code, _) = json(&["verify", "--graph", "cycle:5", "--partition", &part_arg]);
    assert_eq!(code, 2);
}

#[test]
fn timing_and_record() {
    let (_, v) = json(&["compute", "--family", "path:5", "--timing"]);
    assert!(v["elapsed_ms"].is_u64());
    assert_schema("compute", &v);

    let (code, v) = json(&["compute", "--family", "path:5", "--record"]);
    assert_eq!(code, 0);
    assert_schema("record", &v);
    assert_schema("compute", &v["result"]);
    let rec: RunRecord = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(rec.command, ["compute", "--family", "path:5", "--record"]);
    assert_eq!(serde_json::to_value(&rec).unwrap(), v);

    let (code, v) = json(&["compute", "--family", "path:5", "--timing", "--format", "text"]);
    assert_eq!(code, 1);
    assert_schema("error", &v);
}

#[test]
fn outputs_are_deterministic() {
    let a = call(&["compute", "--family", "cycle:9", "--kind", "c"]);
    let b = call(&["compute", "--family", "cycle:9", "--kind", "c", "--threads", "4"]);
    assert_eq!(a, b);
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("compute"));
    let (code, _) = call(&["--version"]);
    assert_eq!(code, 0);
}
