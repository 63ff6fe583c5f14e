use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn toughlab(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_toughlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn toughlab");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_without_timing(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    strip_elapsed(&mut v);
    v
}

fn strip_elapsed(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.retain(|k, _| k != "elapsed_ms");
            map.values_mut().for_each(strip_elapsed);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

#[test]
fn family_output_formats() {
    let out = toughlab(&["family", "--kind", "4reg", "--k", "5"], None);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "JlSggUDOlA_\n");

    let out = toughlab(&["family", "--kind", "6reg", "--k", "3", "--format", "edgelist"], None);
    assert!(out.status.success());
    let lines: Vec<_> = stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 30);
    assert_eq!(lines[0], "1 2");

    let out = toughlab(&["family", "--kind", "4reg", "--k", "3", "--format", "dot"], None);
    assert!(stdout(&out).starts_with("graph"));
}

#[test]
fn family_rejects_small_k() {
    let out = toughlab(&["family", "--kind", "4reg", "--k", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('3'));
}

#[test]
fn family_round_trips_through_a_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.txt");
    let p = path.to_str().unwrap();
    let out = toughlab(
        &["family", "--kind", "4reg", "--k", "4", "--format", "edgelist", "-o", p],
        None,
    );
    assert!(out.status.success());
    let out = toughlab(&["toughness", p], None);
    assert_eq!(json_without_timing(&stdout(&out))["tau"], "5/3");
}

#[test]
fn toughness_golden_outputs() {
    let k5 = "1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";
    let cases = [
        (k5, r#"{"tau":"inf"}"#),
        ("Fltlg\n", r#"{"tau":"2/1","witness":[1,2,4,6],"components":2}"#),
        ("4\n1 2\n3 4\n", r#"{"tau":"0/1","witness":[],"components":2}"#),
    ];
    for (input, want) in cases {
        let out = toughlab(&["toughness", "-"], Some(input));
        assert!(out.status.success(), "{input:?}");
        assert_eq!(
            json_without_timing(&stdout(&out)),
            serde_json::from_str::<Value>(want).unwrap()
        );
    }
}

#[test]
fn malformed_input_exits_with_usage_status() {
    let out = toughlab(&["toughness"], Some("garbage!!\n"));
    assert_eq!(out.status.code(), Some(2));
    let out = toughlab(&["toughness"], Some("1 70\n"));
    assert_eq!(out.status.code(), Some(2));
    let out = toughlab(&["toughness", "/nonexistent/graph.g6"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn alpha_kappa_minimal() {
    let out = toughlab(&["alpha"], Some("Fltlg\n"));
    assert_eq!(json_without_timing(&stdout(&out))["alpha"], 2);
    let out = toughlab(&["kappa"], Some("Fltlg\n"));
    assert_eq!(json_without_timing(&stdout(&out))["kappa"], 4);
    let out = toughlab(&["minimal"], Some("Fltlg\n"));
    let v = json_without_timing(&stdout(&out));
    assert_eq!(v["minimally_tough"], true);
    assert_eq!(v["edges"].as_array().unwrap().len(), 14);
}

fn verify(args: &[&str], dir: &TempDir, name: &str) -> (Output, String) {
    let path = dir.path().join(name);
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--report", path.to_str().unwrap()]);
    let out = toughlab(&full, None);
    let report = std::fs::read_to_string(&path).unwrap_or_default();
    (out, report)
}

fn table_rows(out: &Output) -> Vec<Vec<String>> {
    stdout(out)
        .lines()
        .filter(|l| l.starts_with("4reg") || l.starts_with("6reg"))
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect()
}

#[test]
fn verify_four_regular_range() {
    let dir = TempDir::new().unwrap();
    let (out, _) = verify(&["--kind", "4reg", "--k-range", "3..8"], &dir, "r.json");
    assert_eq!(out.status.code(), Some(0));
    let rows = table_rows(&out);
    let taus: Vec<_> = rows.iter().map(|r| r[3].as_str()).collect();
    assert_eq!(taus, ["2", "5/3", "3/2", "7/5", "4/3", "9/7"]);
    assert!(rows.iter().all(|r| r.last().unwrap() == "PASS"));

    let (out, _) = verify(&["--kind", "4reg", "--k", "5"], &dir, "k5.json");
    assert!(stdout(&out).contains("3 < 4 VIOLATED"));
}

#[test]
fn verify_six_regular_range() {
    let dir = TempDir::new().unwrap();
    let (out, _) = verify(&["--kind", "6reg", "--k-range", "3..6"], &dir, "r.json");
    assert_eq!(out.status.code(), Some(0));
    let taus: Vec<_> = table_rows(&out).into_iter().map(|r| r[3].clone()).collect();
    assert_eq!(taus, ["3", "8/3", "5/2", "12/5"]);
}

#[test]
fn verify_requires_a_k() {
    let dir = TempDir::new().unwrap();
    let (out, _) = verify(&["--kind", "4reg"], &dir, "r.json");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_accepts_sound_and_rejects_tampered_reports() {
    let dir = TempDir::new().unwrap();
    let (out, text) = verify(&["--kind", "4reg", "--k-range", "3..5"], &dir, "r.json");
    assert!(out.status.success());
    let good = dir.path().join("r.json");
    assert_eq!(
        toughlab(&["certify", good.to_str().unwrap()], None).status.code(),
        Some(0)
    );

    let write = |name: &str, v: &Value| {
        let p = dir.path().join(name);
        std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
        p
    };

    // Flip one vertex of the first edge witness.
    let mut v: Value = serde_json::from_str(&text).unwrap();
    let cut = v["reports"][0]["witnesses"]["edges"][0]["witness"]["cut"]
        .as_array_mut()
        .unwrap();
    let first = cut[0].as_u64().unwrap();
    cut[0] = Value::from(if first == 1 { 2 } else { 1 });
    let p = write("flipped.json", &v);
    assert_eq!(toughlab(&["certify", p.to_str().unwrap()], None).status.code(), Some(1));

    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["reports"][0]["family"]["k"] = Value::from(4);
    let p = write("wrong_k.json", &v);
    assert_eq!(toughlab(&["certify", p.to_str().unwrap()], None).status.code(), Some(1));

    let p = dir.path().join("junk.json");
    std::fs::write(&p, "{ not json").unwrap();
    assert_eq!(toughlab(&["certify", p.to_str().unwrap()], None).status.code(), Some(2));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let dir = TempDir::new().unwrap();
    let (_, one) = verify(&["--jobs", "1", "--kind", "6reg", "--k-range", "3..5"], &dir, "a.json");
    let (_, four) = verify(&["--jobs", "4", "--kind", "6reg", "--k-range", "3..5"], &dir, "b.json");
    assert_eq!(json_without_timing(&one), json_without_timing(&four));
}

#[test]
fn report_field_names_are_stable() {
    let dir = TempDir::new().unwrap();
    let (_, text) = verify(&["--kind", "4reg", "--k", "3"], &dir, "r.json");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["format"], "toughlab-theorem-report");
    assert_eq!(v["version"], 1);
    let r = &v["reports"][0];
    let mut keys: Vec<_> = r.as_object().unwrap().keys().cloned().collect();
    keys.sort();
    let mut want = vec![
        "alpha",
        "canonical_witnesses",
        "computed_tau",
        "elapsed_ms",
        "expected_tau",
        "family",
        "graph6",
        "kappa",
        "kriesell",
        "minimally_tough",
        "order",
        "status",
        "tau_matches",
        "witnesses",
    ];
    want.sort();
    assert_eq!(keys, want);
    assert_eq!(r["family"], serde_json::json!({"kind": "4reg", "k": 3}));
    assert_eq!(r["graph6"], "Fltlg");
    let edge = &r["witnesses"]["edges"][0];
    assert_eq!(edge["edge"], serde_json::json!([1, 2]));
    assert_eq!(edge["dropped"], true);
    assert_eq!(edge["source"], "canonical");
}
