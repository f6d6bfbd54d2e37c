use std::io::Write as _;
use std::path::{Path, PathBuf};

use tempfile::TempDir;

struct Out {
    code: i32,
    out: String,
    err: String,
}

fn bei(args: &[&str]) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bei").chain(args.iter().copied());
    let code = bei::cli::run(argv, &mut out, &mut err);
    Out { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_output_feeds_other_commands() {
    let dir = TempDir::new().unwrap();
    let r = bei(&["gen", "cnk", "4", "1"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let g = file(&dir, "c41.json", &r.out);
    let lt = bei(&["lintype", "--graph", s(&g)]);
    assert_eq!(lt.code, 1);
    assert!(lt.out.contains("linear type: false"));
    assert!(lt.out.contains("certificate bidegree: (4, 2)"));
    let rt = bei(&["reltype", "--graph", s(&g), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&rt.out).unwrap();
    assert_eq!(v["relation_type"], 2);
}

#[test]
fn path_graph_commands() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "p4.txt", "4\n1 2\n2 3\n3 4\n");
    let p = bei(&["pseq", "--graph", s(&g), "--order", "tree"]);
    assert_eq!(p.code, 0, "{}", p.err);
    let c = bei(&["colon", "--graph", s(&g), "--edge", "1,4", "--check"]);
    assert_eq!(c.code, 0, "{}", c.err);
    assert!(c.out.contains("true"));
    let o = bei(&["order", "--graph", s(&g), "--order", "tree", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["order"], serde_json::json!([[1, 2], [2, 3], [3, 4]]));
    let sym = bei(&["sym", "--graph", s(&g), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&sym.out).unwrap();
    assert_eq!(v["sym"].as_array().unwrap().len(), 3);
    for field in ["q", "p32003"] {
        let i = bei(&["ideal", "--graph", s(&g), "--field", field]);
        assert_eq!(i.code, 0);
        assert_eq!(i.out.lines().count(), 3);
    }
}

#[test]
fn monomial_sequence_commands() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.txt", "x1*x3*x4*x5\nx1^2*x2*x6\nx1^2*x2^2*x3*x5\n");
    assert_eq!(bei(&["dseq", "--seq", s(&m)]).code, 0);
    let scan = bei(&["permscan", "--seq", s(&m), "--property", "p"]);
    assert_eq!(scan.code, 1);
    assert!(scan.out.contains("orderings: 6 (0 true)"));
    let crit = bei(&["monocrit", "--seq", s(&m), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&crit.out).unwrap();
    assert_eq!(v["verdict"], false);
    let eq = bei(&["eq23", "--seq", s(&m), "--index", "2", "--power", "2"]);
    assert!(eq.out.contains("witness:"));
}

#[test]
fn errors_exit_with_two() {
    let missing = bei(&["pseq", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(missing.code, 2);
    assert!(missing.err.starts_with("error:"));
    assert_eq!(bei(&["bogus"]).code, 2);
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.txt", "1 1\n");
    assert_eq!(bei(&["ideal", "--graph", s(&bad)]).code, 2);
    assert_eq!(bei(&["--help"]).code, 0);
}

#[test]
fn repro_without_timing_is_deterministic() {
    let a = bei(&["repro", "--no-timing"]);
    let b = bei(&["repro", "--no-timing"]);
    assert_eq!(a.code, 0, "{}", a.out);
    assert_eq!(a.out, b.out);
    assert_eq!(a.out.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    let j = bei(&["repro", "--no-timing", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&j.out).unwrap();
    assert!(v["items"].as_array().unwrap().iter().all(|i| i["pass"] == true));
}
