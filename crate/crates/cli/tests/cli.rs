use std::path::PathBuf;
use std::process::{Command, Output};

fn satlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("satlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn expect_controls_exit_status() {
    let s = scratch("s.json", r#"{"type":"sequence","values":["2","1","4","3"]}"#);
    let s = s.to_str().unwrap();
    let base = ["verify", "--family", "sequence", "--k", "3", "--l", "3", "--mode", "sat", "--input", s];
    let ok = satlab(&[&base[..], &["--expect", "saturated"]].concat());
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("\"SATURATED\""));
    let bad = satlab(&[&base[..], &["--expect", "not-semisaturated"]].concat());
    assert_eq!(bad.status.code(), Some(1));
    let nonsense = satlab(&[&base[..], &["--expect", "maybe"]].concat());
    assert_eq!(nonsense.status.code(), Some(2));
}

#[test]
fn bound_prints_value() {
    let o = satlab(&["bound", "--family", "convex", "--n", "10", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "13");
    assert_eq!(satlab(&["bound", "--n", "1", "--d", "1"]).status.code(), Some(2));
}

#[test]
fn tower_poset_size() {
    let o = satlab(&["construct", "--family", "poset", "--k", "6", "--l", "5", "--variant", "tower"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "poset");
    assert_eq!(v["n"], 12);
}

#[test]
fn construct_then_verify() {
    let cases: [(&[&str], &[&str], &str); 7] = [
        (&["--family", "graph", "--k", "3,3"], &["--mode", "sat"], "saturated"),
        (&["--family", "poset", "--k", "4", "--l", "4", "--variant", "tower"], &[], "semisaturated"),
        (&["--family", "poset", "--k", "4", "--l", "4", "--variant", "double"], &[], "semisaturated"),
        (&["--family", "poset", "--k", "3", "--l", "4"], &["--mode", "sat"], "saturated"),
        (&["--family", "sequence", "--k", "4", "--l", "3"], &[], "semisaturated"),
        (&["--family", "cupcap", "--k", "5", "--l", "4"], &[], "semisaturated"),
        (&["--family", "convex", "--n", "5"], &[], "semisaturated"),
    ];
    for (i, (params, extra, verdict)) in cases.iter().enumerate() {
        let built = satlab(&[&["construct"], *params].concat());
        assert_eq!(built.status.code(), Some(0), "construct {params:?}");
        let path = scratch(&format!("c{i}.json"), &stdout(&built));
        let verify_params: Vec<&str> = params.iter().copied().filter(|a| !["--variant", "tower", "double"].contains(a)).collect();
        let args = [&["verify"], &verify_params[..], *extra, &["--input", path.to_str().unwrap(), "--expect", verdict]].concat();
        let o = satlab(&args);
        assert_eq!(o.status.code(), Some(0), "verify {args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn sampler_needs_seed_and_is_reproducible() {
    let missing = satlab(&["sample", "--family", "graph", "--k", "3", "--n", "6"]);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&missing.stderr).lines().count(), 1);
    let a = satlab(&["sample", "--family", "graph", "--k", "3", "--n", "8", "--seed", "42"]);
    let b = satlab(&["sample", "--family", "graph", "--k", "3", "--n", "8", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let capped = Command::new(env!("CARGO_BIN_EXE_satlab"))
        .args(["sample", "--family", "graph", "--k", "3", "--seed", "1"])
        .env("SATLAB_VERTEX_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("1198"));
}

#[test]
fn jobs_do_not_change_output() {
    let built = satlab(&["construct", "--family", "cupcap", "--k", "4", "--l", "5"]);
    let shifted = stdout(&built).replace("\"-5\"", "\"-50\"");
    let path = scratch("moved.json", &shifted);
    let run = |jobs: &str| {
        satlab(&["--jobs", jobs, "verify", "--family", "cupcap", "--k", "4", "--l", "5", "--input", path.to_str().unwrap()])
    };
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, run("3").stdout);
}

#[test]
fn render_is_deterministic_svg() {
    let a = satlab(&["render", "--family", "cupcap", "--k", "5", "--l", "5"]);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<circle").count(), 10);
    assert_eq!(a.stdout, satlab(&["render", "--family", "cupcap", "--k", "5", "--l", "5"]).stdout);
    let empty = scratch("empty.json", r#"{"type":"points","mode":"convex","points":[]}"#);
    let e = satlab(&["render", "--input", empty.to_str().unwrap()]);
    assert_eq!(e.status.code(), Some(0));
    assert!(stdout(&e).contains("</svg>"));
}

#[test]
fn search_reports_minimum() {
    let o = satlab(&["search", "--family", "poset", "--k", "3", "--l", "3", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["minimum_size"], 4);
    let all = satlab(&["search", "--family", "sequence", "--k", "3", "--l", "3", "--variant", "all-saturated"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&all)).unwrap();
    assert_eq!(v["count"], 4);
}

#[test]
fn bad_input_is_a_usage_error() {
    let junk = scratch("junk.json", "{not json");
    let o = satlab(&["verify", "--family", "poset", "--k", "3", "--l", "3", "--input", junk.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let wrong = scratch("wrong.json", r#"{"type":"sequence","values":["1"]}"#);
    let o = satlab(&["verify", "--family", "poset", "--k", "3", "--l", "3", "--input", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = satlab(&["construct", "--family", "graph", "--k", "3", "--variant", "tower"]);
    assert_eq!(o.status.code(), Some(2));
    let o = satlab(&["construct", "--family", "cupcap", "--k", "2", "--l", "5"]);
    assert_eq!(o.status.code(), Some(2));
}
