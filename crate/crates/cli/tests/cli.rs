use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn whitney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitney"))
        .args(args)
        .output()
        .expect("spawn whitney")
}

fn instance(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../instances");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {text}"))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn chromatic_of_triangle() {
    let out = whitney(&[
        "compute",
        "graph-chromatic",
        &instance("k3.json"),
        "--method",
        "broken_circuit",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        v["polynomial"]["coeffs"],
        serde_json::json!(["0", "2", "-3", "1"])
    );
    assert_eq!(v["b"], serde_json::json!([1, 3, 2]));
}

#[test]
fn methods_agree_on_k4() {
    let mut seen = Vec::new();
    for method in ["full", "broken_circuit"] {
        let out = whitney(&[
            "compute",
            "graph-chromatic",
            &instance("k4.json"),
            "--method",
            method,
            "--json",
        ]);
        assert_eq!(code(&out), 0, "{method}");
        seen.push(json(&out)["polynomial"].clone());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn mobius_of_boolean_lattice() {
    let out = whitney(&["compute", "lattice-mobius", &instance("b3.json"), "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["mobius"], serde_json::json!(-1));
}

#[test]
fn zeta_reciprocal() {
    let out = whitney(&[
        "compute",
        "number-zeta",
        "--s",
        "2",
        "--prime-bound",
        "13",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let text = v.to_string();
    assert!(text.contains("0.618078425071"), "{text}");
}

#[test]
fn shorthand_matches_compute() {
    let a = whitney(&["graph", "chromatic", &instance("k3.json"), "--json"]);
    let b = whitney(&["compute", "graph-chromatic", &instance("k3.json"), "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn graphic_matroid_resolves_relative_path() {
    let out = whitney(&[
        "compute",
        "matroid-characteristic",
        &instance("k4-graphic.json"),
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let graph = whitney(&["compute", "graph-chromatic", &instance("k4.json"), "--json"]);
    let p = json(&out);
    assert_eq!(p["polynomial"]["coeffs"].as_array().unwrap().len(), 4);
    assert_eq!(json(&graph)["polynomial"]["coeffs"][0], "0");
}

#[test]
fn ground_set_cancels() {
    let out = whitney(&["compute", "core-sum", &instance("ground-set.json"), "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["condition"], "verified");
    assert_eq!(v["full"], v["pruned"]);
}

#[test]
fn permuting_edges_keeps_the_polynomial() {
    let a = whitney(&[
        "compute",
        "graph-chromatic",
        &instance("k3.json"),
        "--method",
        "full",
        "--json",
    ]);
    let b = whitney(&[
        "compute",
        "graph-chromatic",
        &instance("k3.json"),
        "--method",
        "full",
        "--permute-order",
        "a-c,a-b,b-c",
        "--json",
    ]);
    assert_eq!(code(&b), 0);
    assert_eq!(json(&a)["polynomial"], json(&b)["polynomial"]);
}

#[test]
fn generated_grid_has_one_circuit() {
    let out = whitney(&["generate", "grid", "--m", "2", "--n", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["kind"], "hypergraph");
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["circuits"], serde_json::json!([[0, 1, 2]]));
}

#[test]
fn generated_uniform_matroid_and_boolean_lattice() {
    let out = whitney(&["generate", "uniform-matroid", "--r", "2", "--n", "3", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["uniform"], serde_json::json!([2, 3]));
    let out = whitney(&["generate", "boolean-lattice", "--n", "3", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["kind"], "lattice");
}

#[test]
fn generated_instance_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str], &str)] = &[
        ("connected-graph", &["--n", "5", "--seed", "3"], "graph-chromatic"),
        ("ground-set", &["--n", "5", "--seed", "3"], "core-sum"),
        ("divisor-lattice", &["--n", "60"], "lattice-mobius"),
        ("geometry", &["--n", "4", "--seed", "3"], "geometry-verify"),
    ];
    for (kind, params, target) in cases {
        let mut args = vec!["generate", kind];
        args.extend_from_slice(params);
        let gen = whitney(&args);
        assert_eq!(code(&gen), 0, "{kind}: {}", String::from_utf8_lossy(&gen.stderr));
        let path = dir.path().join(format!("{kind}.json"));
        std::fs::write(&path, &gen.stdout).unwrap();
        let a = whitney(&["compute", target, path.to_str().unwrap(), "--json"]);
        let b = whitney(&["compute", target, path.to_str().unwrap(), "--json"]);
        assert_eq!(code(&a), 0, "{kind}: {}", String::from_utf8_lossy(&a.stderr));
        json(&a);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn generation_is_seeded() {
    let a = whitney(&["generate", "graph", "--n", "6", "--seed", "11", "--json"]);
    let b = whitney(&["generate", "graph", "--n", "6", "--seed", "11", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 11);
}

#[test]
fn verify_suites_pass() {
    for suite in ["whitney-core", "lattice", "cli"] {
        let out = whitney(&["verify", suite, "--seed", "7", "--json"]);
        assert_eq!(code(&out), 0, "{suite}: {}", String::from_utf8_lossy(&out.stdout));
        let v = json(&out);
        assert_eq!(v["failed"], 0);
        assert!(v["passed"].as_u64().unwrap() > 0);
    }
}

#[test]
fn injected_mutant_is_caught() {
    let out = whitney(&[
        "verify",
        "whitney-core",
        "--seed",
        "7",
        "--inject-mutant",
        "--json",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    let failed: Vec<_> = checks.iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| !c["witness"].is_null()));
}

#[test]
fn schema_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        r#"{"kind":"graph","vertices":[1,2],"edges":[[1,2]],"colour":3}"#,
        r#"{"kind":"graf","vertices":[1,2],"edges":[]}"#,
        r#"{"kind":"graph","vertices":[1,2],"edges":[[1,3]]}"#,
        "not json",
    ];
    for (i, text) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.json"));
        std::fs::write(&path, text).unwrap();
        let out = whitney(&["compute", "graph-chromatic", path.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{text}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(
        code(&whitney(&["compute", "graph-chromatic", "/nonexistent/x.json"])),
        2
    );
    assert_eq!(code(&whitney(&["compute", "nonsense"])), 2);
}

#[test]
fn cap_exits_3() {
    let out = whitney(&[
        "compute",
        "graph-chromatic",
        &instance("k4.json"),
        "--cap-elements",
        "3",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn precondition_exits_4() {
    let out = whitney(&["compute", "graph-scp", &instance("k4.json"), "--method", "eq5"]);
    assert_eq!(code(&out), 4);
    let out = whitney(&["compute", "number-gcd", "--n", "7"]);
    assert_eq!(code(&out), 4);
    let out = whitney(&["compute", "number-gcd", "--n", "7", "--modified-domain", "--json"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn violated_hypothesis_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    std::fs::write(
        &path,
        r#"{"kind":"ground-set","elements":["a","b","c"],"circuits":[["a","b"]],
            "function":{"kind":"table","values":[{"set":["a"],"value":1}]}}"#,
    )
    .unwrap();
    let out = whitney(&["compute", "core-sum", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 4);
    let v = json(&out);
    assert_eq!(v["condition"], "violated");
    assert_eq!(v["violation"]["circuit"], serde_json::json!(["a", "b"]));
}

#[test]
fn invalid_geometry_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(
        &path,
        r#"{"kind":"geometry","elements":["a","b","c"],"closed":[["a","b"],["b","c"],["a","b","c"]]}"#,
    )
    .unwrap();
    let out = whitney(&["compute", "geometry-verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["witness"]["intersection"], serde_json::json!(["b"]));
}

#[test]
fn every_shipped_instance_computes() {
    let cases = [
        ("core-broken", "ground-set.json"),
        ("core-avoiding", "ground-set.json"),
        ("core-maxmin", "maxmin.json"),
        ("core-union", "set-family.json"),
        ("graph-scp", "k3.json"),
        ("graph-domination", "k4.json"),
        ("hypergraph-chromatic", "grid-2x3.json"),
        ("hypergraph-chromatic", "hypergraph.json"),
        ("matroid-beta", "u23.json"),
        ("lattice-crosscut", "b3-crosscut.json"),
        ("lattice-blass-sagan", "b3-crosscut.json"),
        ("number-mobius", "d30.json"),
        ("number-complex", "d30.json"),
        ("geometry-verify", "geometry.json"),
        ("geometry-reduce", "geometry.json"),
    ];
    for (target, file) in cases {
        let out = whitney(&["compute", target, &instance(file), "--json"]);
        assert_eq!(
            code(&out),
            0,
            "{target} {file}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(&out)["target"], target);
    }
}
