use std::process::{Command, Output};

use serde_json::Value;

fn gptau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gptau"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--emit", "json"]);
    let o = gptau(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn check_summaries() {
    let o = gptau(&["check", "examples/3d.alg"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("dim 7, 1-Gorenstein (id=1 both sides), not self-injective\n"));
    assert!(stdout(&gptau(&["check", "examples/3e.alg"])).starts_with("dim 6, rad²=0, self-injective\n"));
    assert!(stdout(&gptau(&["check", "61"])).contains("1-Gorenstein"));
    let (v, _) = json(&["check", "3d"]);
    assert_eq!(v["injective_dimension"]["left"], 1);
    assert_eq!(v["basis_by_length"], serde_json::json!([3, 3, 1]));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "vertices: 1 2\narrow a: 1 -> 2\nrelation: a*zz\n").unwrap();
    let o = gptau(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(gptau(&["check", "no-such-algebra"]).status.code(), Some(1));
    assert_eq!(gptau(&["check", "3d", "--field", "Fp:17"]).status.code(), Some(1));
    assert!(!gptau(&["check", "3d", "--field", "Fp:4"]).status.success());
}

#[test]
fn enumerate_counts_and_exit_status() {
    let (v, code) = json(&["enumerate", "examples/36.alg"]);
    assert_eq!((v["node_count"].as_u64(), v["edge_count"].as_u64(), code), (Some(24), Some(36), 0));
    let (v, code) = json(&["enumerate", "examples/kronecker.alg", "--budget", "50"]);
    assert_eq!((v["complete"].as_bool(), v["node_count"].as_u64(), code), (Some(false), Some(50), 2));
    let (v, _) = json(&["enumerate", "semisimple2"]);
    assert_eq!(v["node_count"], 4);
    let (f5, code) = json(&["enumerate", "3e", "--field", "Fp:5"]);
    assert_eq!((f5["field"].as_str(), f5["node_count"].as_u64(), code), (Some("F_5"), Some(14), 0));
    let dot = stdout(&gptau(&["enumerate", "3e", "--emit", "dot"]));
    assert!(dot.starts_with("digraph exchange {") && dot.contains("fillcolor"));
    assert_eq!(gptau(&["check", "3e", "--emit", "dot"]).status.code(), Some(1));
}

#[test]
fn json_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let a = gptau(&["gp-report", "61", "--emit", "json"]).stdout;
    let b = gptau(&["gp-report", "61", "--emit", "json", "--cache", cache]).stdout;
    let c = gptau(&["gp-report", "61", "--emit", "json", "--cache", cache]).stdout;
    assert_eq!(a, b);
    assert_eq!(b, c);
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let cached = entries[0].as_ref().unwrap().path().join("graph.json");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(cached).unwrap()).unwrap();
    assert_eq!(v["graph"]["node_count"], 50);
    assert!(v["graph"]["nodes"][0]["gp"].is_object());
}

#[test]
fn gp_reports() {
    let (v, code) = json(&["gp-report", "examples/36.alg"]);
    assert_eq!(code, 0);
    assert_eq!(v["gp_tau_tilting_projective_free"].as_array().unwrap().len(), 2);
    let (v, _) = json(&["gp-report", "examples/3d.alg"]);
    let gp = strings(&v["gp_support_tau_tilting"]);
    for entry in ["[1/2/3|2/(1 3)|3]", "[2/(1 3)|2/3|3]", "[2/3|3| ]", "[3| | ]", "[ | | ]"] {
        assert!(gp.contains(&entry.to_string()), "{entry} missing from {gp:?}");
    }
    let (v, _) = json(&["gp-report", "examples/a2.alg"]);
    for t in v["torsion"].as_array().unwrap() {
        assert!(t["dual_side_agrees"].as_bool().unwrap());
        if t["gorenstein"] == true {
            assert_eq!(t["trivial"], true, "{t}");
        }
    }
    let (v, code) = json(&["gp-report", "kronecker", "--budget", "20"]);
    assert_eq!((code, v["complete"].as_bool()), (2, Some(false)));
}

#[test]
fn dagger_matchings() {
    for (alg, n) in [("examples/3e.alg", 14), ("examples/36.alg", 24), ("local", 2)] {
        let (v, code) = json(&["dagger", alg]);
        assert_eq!(code, 0, "{alg}");
        assert_eq!(v["matching"].as_array().unwrap().len(), n, "{alg}");
        assert_eq!(v["gp_count"], v["op_gp_count"]);
        let mut seen: Vec<u64> = v["matching"].as_array().unwrap().iter().map(|r| r["op_node"].as_u64().unwrap()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), n);
    }
}

#[test]
fn bongartz_completions() {
    let (v, code) = json(&["bongartz", "examples/61.alg", "S1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "CertifiedNotGP");
    let mut failing = strings(&v["verdict"]["failing_summands"]);
    failing.sort();
    assert_eq!(failing, ["1/2", "1/3"]);
    for m in ["S1", "S2", "S3", "P1", "P2", "P3", "S1+P3"] {
        let (v, code) = json(&["bongartz", "examples/3e.alg", m]);
        assert_eq!(code, 0, "{m}");
        assert_eq!(v["verdict"]["status"], "CertifiedGP", "{m}");
    }
    for alg in ["3d", "61", "36"] {
        let (v, _) = json(&["bongartz", alg, "Lambda"]);
        assert_eq!(v["node"], 0);
        assert!(v["completion"]["p"].as_array().unwrap().is_empty());
    }
    let o = gptau(&["bongartz", "3e", "S1+S2"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not tau-rigid"));
}

#[test]
fn bongartz_from_json_module() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, r#"{"dims":[0,1,1],"arrows":{"b2":[["1"]]}}"#).unwrap();
    let (v, code) = json(&["bongartz", "3d", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(strings(&v["summands"]).contains(&"2/3".to_string()));
}

#[test]
fn cm_finiteness() {
    let (v, code) = json(&["cm-finite", "kronecker"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["route"], "finite-global-dimension");
    let (v, _) = json(&["cm-finite", "3e"]);
    assert_eq!(v["verdict"]["route"], "radical-square-zero-dichotomy");
    assert_eq!(v["verdict"], v["opposite"]);
}

#[test]
fn paper_examples_pass_and_fail_loudly() {
    let (v, code) = json(&["paper-examples", "--random-cases", "200"]);
    assert_eq!((code, v["passed"].as_u64()), (0, Some(9)), "{v}");
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("3e.alg"), "vertices: 1 2 3\narrow a1: 1 -> 2\narrow a2: 2 -> 3\narrow a3: 3 -> 1\nrelation: a1*a2\n").unwrap();
    let o = gptau(&["paper-examples", "--random-cases", "50", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("criterion 3 FAIL") && text.contains("3e: self-injectivity certificate"), "{text}");
}
