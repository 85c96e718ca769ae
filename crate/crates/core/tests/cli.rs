use std::path::PathBuf;
use std::process::{Command, Output};

fn knotcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(args)
        .env("KNOTCERT_THREADS", "1")
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> i32 {
    knotcert(args).status.code().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("knotcert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn construct_writes_g7() {
    let out = scratch("g7.json");
    assert_eq!(code(&["construct", "--out", out.to_str().unwrap()]), 0);
    let g = knotcert::graph::Graph::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g, knotcert::graph::construct_g7());

    let o = knotcert(&["construct", "--intermediates"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["intermediates"].as_array().unwrap().len(), 7);
}

#[test]
fn construct_empty_and_bad_scripts() {
    let empty = scratch("empty.json");
    std::fs::write(&empty, r#"{"steps": []}"#).unwrap();
    let o = knotcert(&["construct", "--script", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g = knotcert::graph::Graph::from_json(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!(g, knotcert::graph::k7());

    let bad = scratch("bad.json");
    std::fs::write(
        &bad,
        r#"{"steps": [{"op": "deltaY", "triangle": ["a", "b", "c"], "center": "h"}, {"op": "yDelta", "center": "a"}]}"#,
    )
    .unwrap();
    let o = knotcert(&["construct", "--script", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("step 1"));
}

#[test]
fn validate_exit_codes() {
    let g7 = scratch("expect.json");
    std::fs::write(&g7, knotcert::graph::construct_g7().to_json()).unwrap();
    assert_eq!(
        code(&[
            "validate",
            &fixture("g7_figure2.json"),
            "--expect-graph",
            g7.to_str().unwrap()
        ]),
        0
    );
    let k7 = scratch("k7.json");
    std::fs::write(&k7, knotcert::graph::k7().to_json()).unwrap();
    assert_eq!(
        code(&[
            "validate",
            "builtin:g7_figure2",
            "--expect-graph",
            k7.to_str().unwrap()
        ]),
        1
    );

    let mut d = knotcert::diagram::Diagram::parse(knotcert::fixtures::G7_FIGURE2).unwrap();
    d.vertices.get_mut("h").unwrap().swap(0, 2);
    let broken = scratch("broken.json");
    std::fs::write(&broken, d.serialize()).unwrap();
    let o = knotcert(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("not planar"));

    assert_eq!(code(&["validate", "/nonexistent/diagram.json"]), 2);
}

#[test]
fn certify_exit_codes_and_report() {
    let report = scratch("g7-report.json");
    assert_eq!(
        code(&[
            "certify",
            "builtin:g7_figure2",
            "--report",
            report.to_str().unwrap()
        ]),
        0
    );
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["summary"], "KNOTLESS");
    assert_eq!(v["max_crossings"], 16);
    assert_eq!(code(&["certify", "builtin:k7_control"]), 1);
    assert_eq!(code(&["certify", &fixture("trefoil.json")]), 1);
    assert_eq!(code(&["certify", "builtin:nothing"]), 2);
    assert_eq!(
        code(&["certify", "builtin:g7_figure2", "--max-crossings", "many"]),
        2
    );
}

#[test]
fn certify_output_is_byte_stable() {
    let a = knotcert(&["certify", "builtin:g7_figure2", "--report", "-"]).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(["certify", "builtin:g7_figure2", "--report", "-"])
        .env("KNOTCERT_THREADS", "3")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn bad_thread_setting_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_knotcert"))
        .args(["certify", "builtin:trefoil"])
        .env("KNOTCERT_THREADS", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn links_exit_codes() {
    assert_eq!(code(&["links", "builtin:g7_figure2"]), 0);
    assert_eq!(code(&["links", &data("split_triangles.json")]), 1);
    let o = knotcert(&["links", "builtin:hopf", "--report", "-"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][0]["linking_number"].as_i64().unwrap().abs(), 1);
}

#[test]
fn symmetry_exit_codes() {
    let map = scratch("map.txt");
    std::fs::write(&map, "(c h)(e i)(f j)(d l)(g k)\n").unwrap();
    let o = knotcert(&[
        "symmetry",
        "builtin:g7_figure2",
        "--map",
        map.to_str().unwrap(),
        "--reflect",
        "--flip",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("(1 2)(6 7)"));
    let json = scratch("map.json");
    std::fs::write(
        &json,
        r#"{"e": "f", "f": "e", "i": "j", "j": "i", "d": "g", "g": "d", "k": "l", "l": "k"}"#,
    )
    .unwrap();
    let o = knotcert(&[
        "symmetry",
        "builtin:g7_figure2",
        "--map",
        json.to_str().unwrap(),
        "--reflect",
        "--flip",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("(1 7)(2 6)(3 5)"));
    assert_eq!(code(&["symmetry", "builtin:g7_figure2"]), 0);
    assert_eq!(code(&["symmetry", "builtin:g7_figure2", "--cycles", "(c d)"]), 1);
    assert_eq!(code(&["symmetry", "builtin:g7_figure2", "--cycles", "(c z)"]), 2);
}

#[test]
fn iso_exit_codes() {
    let g = knotcert::graph::construct_g7();
    let a = scratch("iso-a.json");
    std::fs::write(&a, g.to_json()).unwrap();
    let rename = g.vertices().map(|v| (v.to_string(), format!("{v}{v}"))).collect();
    let b = scratch("iso-b.json");
    std::fs::write(&b, g.relabel(&rename).unwrap().to_json()).unwrap();
    let k = scratch("iso-k.json");
    std::fs::write(&k, knotcert::graph::k7().to_json()).unwrap();
    let bad = scratch("iso-bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let (a, b, k, bad) = (
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        k.to_str().unwrap(),
        bad.to_str().unwrap(),
    );
    assert_eq!(code(&["iso", a, b]), 0);
    assert_eq!(code(&["iso", a, k]), 1);
    assert_eq!(code(&["iso", a, bad]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}
