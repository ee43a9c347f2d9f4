//! Command-line behavior: outputs, round trips, determinism and exit codes.

use std::path::PathBuf;

use nevgraph::cli::run;
use nevgraph::graph::ColoredGraph;
use nevgraph::nevanlinna::root_function;
use nevgraph::ratfun::RatFunJson;
use nevgraph::RatFun;
use serde_json::Value;

const SINGLE_Z: &str = r#"{"vertices":[{"id":1,"color":"z"}],"edges":[],"root":1}"#;
const CONTACT: &str = r#"{"vertices":[{"id":1,"color":"z"},{"id":2,"color":"w"},{"id":3,"color":"z"},{"id":4,"color":"z"},{"id":5,"color":"z"}],"edges":[[1,3],[1,4],[2,3],[4,5],[5,2]],"root":1}"#;
const REDUCTION: &str = r#"{"vertices":[{"id":1,"color":"z"},{"id":2,"color":"w"},{"id":3,"color":"z"},{"id":4,"color":"z"},{"id":5,"color":"z"},{"id":6,"color":"w"}],"edges":[[1,2],[1,3],[2,4],[3,4],[4,5],[4,6],[5,6]],"root":1}"#;
const SQUARE: &str = r#"{"vertices":[{"id":1,"color":"z"},{"id":2,"color":"w"},{"id":3,"color":"w"},{"id":4,"color":"w"}],"edges":[[1,2],[2,3],[3,4],[1,4]],"root":1}"#;
const TRIANGLE: &str = r#"{"vertices":[{"id":1,"color":"z"},{"id":2,"color":"z"},{"id":3,"color":"w"}],"edges":[[1,2],[2,3],[1,3]],"root":1}"#;
const W_ROOT: &str = r#"{"vertices":[{"id":1,"color":"w"},{"id":2,"color":"z"}],"edges":[[1,2]],"root":1}"#;

fn file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("nevgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn nevgraph(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nevgraph").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn repfun_formats() {
    let g = file("single.json", SINGLE_Z);
    assert_eq!(nevgraph(&["repfun", &g]), (0, "(-1)/(z)\n".into(), String::new()));
    let (code, out, _) = nevgraph(&["repfun", &g, "--format", "latex"]);
    assert_eq!((code, out.as_str()), (0, "\\frac{-1}{z}\n"));

    let r = file("reduction.json", REDUCTION);
    for vertex in ["1", "4", "6"] {
        let (code, text, _) = nevgraph(&["repfun", &r, "--vertex", vertex]);
        let (_, js, _) = nevgraph(&["repfun", &r, "--vertex", vertex, "--format", "json"]);
        assert_eq!(code, 0);
        let parsed: RatFunJson = serde_json::from_str(&js).unwrap();
        assert_eq!(RatFun::from_json(&parsed).unwrap(), text.trim().parse::<RatFun>().unwrap());
    }
}

#[test]
fn reciprocal_of_root_function() {
    let g = file("single-recip.json", SINGLE_Z);
    assert_eq!(nevgraph(&["reciprocal", &g]).1, "(-z)/(1)\n");
}

#[test]
fn contact_report() {
    let g = file("contact.json", CONTACT);
    assert_eq!(nevgraph(&["contact", &g]).1, "{\"order\":4,\"distance\":2,\"consistent\":true}\n");
    let w = file("w-root.json", W_ROOT);
    assert_eq!(nevgraph(&["contact", &w]).1, "{\"order\":0,\"distance\":0,\"consistent\":true}\n");
}

#[test]
fn sticks_table() {
    assert_eq!(nevgraph(&["sticks", "--max", "2"]), (0, "0,1\n1,-z\n2,z^2 - 1\n".into(), String::new()));
    let (_, out, _) = nevgraph(&["sticks", "--max", "20"]);
    assert_eq!(out.lines().count(), 21);
    assert!(out.ends_with("20,z^20 - 19*z^18 + 153*z^16 - 680*z^14 + 1820*z^12 - 3003*z^10 + 3003*z^8 - 1716*z^6 + 495*z^4 - 55*z^2 + 1\n"));
}

#[test]
fn star_with_verification() {
    let (g, h) = (file("square.json", SQUARE), file("triangle.json", TRIANGLE));
    let (code, out, _) = nevgraph(&["star", &g, &h, "--verify"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["report"]["equal"], Value::Bool(true));
    let product = ColoredGraph::from_json_value(&v["graph"]).unwrap();
    assert_eq!(product.len(), 6);

    let (code, plain, _) = nevgraph(&["star", &g, &h]);
    assert_eq!(code, 0);
    assert_eq!(ColoredGraph::from_json_str(&plain).unwrap(), product);

    let w = file("w-root-star.json", W_ROOT);
    let (code, _, err) = nevgraph(&["star", &g, &w]);
    assert_eq!(code, 1);
    assert!(err.contains("incompatible roots"), "{err}");
}

#[test]
fn zcomb_with_verification() {
    let (g, h) = (file("comb-g.json", SQUARE), file("comb-h.json", TRIANGLE));
    let (code, out, _) = nevgraph(&["zcomb", &g, &h, "--verify"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["report"]["equal"], Value::Bool(true));
    assert_eq!(ColoredGraph::from_json_value(&v["graph"]).unwrap().len(), 6);
    let w = file("comb-w.json", W_ROOT);
    let (code, _, err) = nevgraph(&["zcomb", &g, &w]);
    assert_eq!(code, 1);
    assert!(err.contains("incompatible comb root"), "{err}");
}

#[test]
fn retract_six_vertex_graph() {
    let g = file("retract.json", REDUCTION);
    let (code, out, _) = nevgraph(&["retract", &g, "--cut", "4", "--subgraph", "5,6"]);
    assert_eq!(code, 0);
    let reduced = ColoredGraph::from_json_str(&out).unwrap();
    assert_eq!(reduced.len(), 4);
    let original = ColoredGraph::from_json_str(REDUCTION).unwrap();
    assert_eq!(root_function(&reduced).unwrap(), root_function(&original).unwrap());
    let (code, out, _) = nevgraph(&["retract", &g, "--cut", "4", "--subgraph", "5,6", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["report"]["equal"], Value::Bool(true));
    let (code, _, _) = nevgraph(&["retract", &g, "--cut", "4", "--subgraph", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn walk_series_outputs() {
    let g = file("walk.json", CONTACT);
    let (code, out, _) = nevgraph(&["walkgen", &g, "--from", "1", "--to", "1", "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(-1)*z^-1 + (-2)*z^-3 + O(z^-4)\n");
    let (_, out, _) = nevgraph(&["walkgen", &g, "--from", "1", "--to", "2", "--order", "4", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["start_order"], 3);
    assert_eq!(v["coeffs"][0]["num"], "-1");
}

#[test]
fn verify_and_sample_are_deterministic() {
    let g = file("verify.json", REDUCTION);
    let first = nevgraph(&["verify", &g, "--suite", "all", "--seed", "3"]);
    assert_eq!(first.0, 0);
    assert_eq!(json(&first.1)["pass"], Value::Bool(true));
    assert_eq!(first, nevgraph(&["verify", &g, "--suite", "all", "--seed", "3"]));
    let schur_only = json(&nevgraph(&["verify", &g, "--suite", "schur"]).1);
    assert!(schur_only.get("relabel").is_none());

    let a = nevgraph(&["sample", &g, "--count", "500", "--seed", "11"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, nevgraph(&["sample", &g, "--count", "500", "--seed", "11"]));
    let v = json(&a.1);
    assert_eq!(v["samples"], 500);
    assert_eq!(v["seed"], 11);
    assert_eq!(v["pass"], Value::Bool(true));
}

#[test]
fn exit_codes() {
    let frac = file("frac.json", r#"{"vertices":[{"id":1,"color":0.5}],"edges":[],"root":1}"#);
    let (code, _, err) = nevgraph(&["repfun", &frac]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported: fractional coloring"), "{err}");

    let bad = file("bad.json", r#"{"vertices":[{"id":1,"color":"z"}],"edges":[[1,2]],"root":1}"#);
    let (code, _, err) = nevgraph(&["repfun", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("edges[0]"), "{err}");

    assert_eq!(nevgraph(&["repfun", &file("garbage.json", "not json")]).0, 2);
    assert_eq!(nevgraph(&["repfun", "/nonexistent/graph.json"]).0, 2);
    assert_eq!(nevgraph(&["bogus"]).0, 2);
    assert_eq!(nevgraph(&[]).0, 2);
    assert_eq!(nevgraph(&["repfun", &file("v.json", SINGLE_Z), "--vertex", "7"]).0, 2);

    let two_w = file("two-w.json", REDUCTION);
    let (code, _, err) = nevgraph(&["contact", &two_w]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: "), "{err}");

    let singular = file(
        "singular.json",
        r#"{"vertices":[{"id":1,"color":{"num":"1","den":"1"}},{"id":2,"color":{"num":"1","den":"1"}}],"edges":[[1,2]],"root":1}"#,
    );
    let (code, _, err) = nevgraph(&["repfun", &singular]);
    assert_eq!(code, 1);
    assert!(err.contains("singular colored matrix"), "{err}");
    assert_eq!(nevgraph(&["sample", &singular]).0, 1);

    let (code, out, _) = nevgraph(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("repfun"));
}
