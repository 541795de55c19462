use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn tlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlkit")).args(args).env_remove("TLKIT_CACHE_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let o = tlkit(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json_map(s: &str) -> serde_json::Map<String, Value> {
    match serde_json::from_str(s).unwrap() {
        Value::Object(m) => m,
        v => panic!("not an object: {v}"),
    }
}

#[test]
fn projector_two() {
    let m = json_map(&ok(&["projector", "2"]));
    assert_eq!(m.len(), 2);
    assert_eq!(m["[[1,4],[2,3]]"], "1");
    assert_eq!(m["[[1,2],[3,4]]"], "1/[2]");
}

#[test]
fn projector_three_closed_form() {
    let m = json_map(&ok(&["projector", "3", "--method", "closed-form"]));
    assert_eq!(m.len(), 5);
    let mut vals: Vec<&str> = m.values().map(|v| v.as_str().unwrap()).collect();
    vals.sort();
    assert_eq!(vals, ["1", "1/[3]", "1/[3]", "[2]/[3]", "[2]/[3]"]);
}

#[test]
fn methods_agree() {
    for n in ["1", "3", "4"] {
        let r = ok(&["projector", n, "--method", "recursion", "--format", "json"]);
        assert_eq!(r, ok(&["projector", n, "--method", "closed-form", "--format", "json"]));
        assert_eq!(r, ok(&["projector", n, "--method", "meander", "--format", "json"]));
    }
}

#[test]
fn obstruction_exit_code() {
    let o = tlkit(&["projector", "5", "--q-root", "5/1"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "RootOfUnityObstruction");
    // the meander method needs n + 1 < p̄
    assert_eq!(tlkit(&["projector", "4", "--q-root", "5/1", "--method", "meander"]).status.code(), Some(2));
    ok(&["projector", "4", "--q-root", "5/1"]);
}

#[test]
fn bad_inputs_exit_two() {
    assert_eq!(tlkit(&["projector", "2", "--q-root", "4/2"]).status.code(), Some(2));
    assert_eq!(tlkit(&["projector", "4", "--max-n", "3"]).status.code(), Some(2));
    assert_eq!(tlkit(&["theta", "1", "1", "1"]).status.code(), Some(2));
    assert_eq!(tlkit(&["gram", "1,1", "1"]).status.code(), Some(2));
    assert_ne!(tlkit(&["projector", "2", "--format", "yaml"]).status.code(), Some(0));
}

#[test]
fn scalars() {
    assert_eq!(ok(&["theta", "1", "1", "2"]), "[3]");
    assert_eq!(ok(&["theta", "1", "1", "0"]), "-[2]");
    assert_eq!(ok(&["dim", "1,2,1"]), "6");
    assert_eq!(ok(&["dim", "1,1,1,1"]), "14");
    let d: Value = serde_json::from_str(&ok(&["dim", "1,1,1", "--format", "json"])).unwrap();
    assert_eq!(d["dimension"], 5);
    assert_eq!(d["by_defect"]["1"], 2);
    assert_eq!(ok(&["theta", "1", "1", "2", "--format", "latex"]), "[3]");
}

#[test]
fn checks() {
    let out = ok(&["check", "relations", "--multiindex", "1,3,1"]);
    assert!(out.lines().last().unwrap().starts_with("pass"), "{out}");
    ok(&["check", "cellular", "--multiindex", "1,2,1"]);
    ok(&["check", "projector", "--max-n", "4"]);
    ok(&["check", "meander", "--max-n", "3"]);
    ok(&["check", "networks", "--max-n", "2"]);
    ok(&["check", "projector", "--q-root", "5/1"]);
    // the two-box power relation fails once both boxes exceed one strand
    let o = tlkit(&["check", "relations", "--multiindex", "2,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL relations: (2,2): U^(min+1) = cU^min"));
    let j: Value = serde_json::from_str(&ok(&["check", "relations", "--multiindex", "1,2", "--format", "json"])).unwrap();
    assert_eq!(j["passed"], true);
}

#[test]
fn json_schema_is_num_den() {
    let m = json_map(&ok(&["projector", "3", "--format", "json"]));
    for v in m.values() {
        for key in ["num", "den"] {
            for term in v[key].as_array().unwrap() {
                let t = term.as_array().unwrap();
                assert_eq!(t.len(), 2);
                assert!(t[0].is_i64());
                assert!(t[1].is_string());
            }
        }
    }
    let g: Value = serde_json::from_str(&ok(&["gram", "1,1", "0", "--q-root", "3/1", "--format", "json"])).unwrap();
    assert!(g["matrix"][0][0]["num"].is_array());
}

#[test]
fn latex_and_tikz() {
    let l = ok(&["projector", "3", "--format", "latex"]);
    assert!(l.contains("\\frac{[2]}{[3]}"), "{l}");
    let t = ok(&["projector", "2", "--format", "tikz"]);
    assert!(t.starts_with("\\begin{tikzpicture}") && t.ends_with("\\end{tikzpicture}"));
    assert!(t.contains("$P_{2}$"));
    assert_eq!(t.matches("circle (1.5pt)").count(), 8);
}

#[test]
fn meander_rows_agree() {
    for n in ["2", "3"] {
        assert_eq!(ok(&["meander-inverse-row", n]), ok(&["meander-inverse-row", n, "--method", "recipe"]));
    }
    let m = json_map(&ok(&["meander-inverse-row", "2"]));
    assert_eq!(m["[[1,4],[2,3]]|[]"], "1/[3]");
}

#[test]
fn span_reports() {
    let s: Value = serde_json::from_str(&ok(&["span", "1,2,1", "--format", "json"])).unwrap();
    assert_eq!(s["rank"], s["dim"]);
    let v: Value = serde_json::from_str(&ok(&["span", "2,2", "--family", "v", "--format", "json"])).unwrap();
    assert_eq!(v["rank"], 3);
}

#[test]
fn output_is_deterministic() {
    for args in [&["projector", "5"][..], &["projector", "4", "--format", "json"], &["check", "cellular", "--multiindex", "2,1"]] {
        assert_eq!(tlkit(args).stdout, tlkit(args).stdout);
    }
}

#[test]
fn cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = ok(&["projector", "5", "--cache-dir", d]);
    let path = dir.path().join("projectors.tlc");
    let saved = fs::read_to_string(&path).unwrap();
    assert!(saved.starts_with("tlkit-projector-cache v1\n"));
    assert_eq!(saved.lines().count(), 1 + 5);
    // a warm cache reproduces both the output and the file byte for byte
    assert_eq!(ok(&["projector", "5", "--cache-dir", d]), first);
    assert_eq!(fs::read_to_string(&path).unwrap(), saved);
    let o = Command::new(env!("CARGO_BIN_EXE_tlkit")).args(["projector", "3"]).env("TLKIT_CACHE_DIR", d).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap(), saved);
    // an unknown version header is refused
    fs::write(&path, "tlkit-projector-cache v0\n").unwrap();
    assert_eq!(tlkit(&["projector", "2", "--cache-dir", d]).status.code(), Some(2));
}
