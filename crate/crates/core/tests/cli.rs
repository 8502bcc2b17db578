use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pappus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pappus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pappus-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_pappus_passes() {
    let o = pappus(&["verify", "--theorem", "pappus", "--a", "3", "--b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["theorems"][0]["name"], "pappus");
}

#[test]
fn verify_symbolic_round_trip_reports_m_lines() {
    let o = pappus(&["verify", "--field", "symbolic", "--theorem", "roundtrip"]);
    assert_eq!(o.status.code(), Some(0));
    let w = &json(&o)["theorems"][0]["witnesses"];
    assert!(w["M1"].is_string() && w["M2"].is_string());
}

#[test]
fn verify_super_at_a_generic_pair() {
    let o = pappus(&["verify", "--theorem", "super", "--a", "3", "--b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let w = &json(&o)["theorems"][0]["witnesses"];
    for clause in ["i: super", "ii: pair of lines through S", "iii: harmonic"] {
        assert_eq!(w[clause], "false");
    }
}

#[test]
fn failed_clause_exits_with_one() {
    // At b = w the three even second-stage lines coincide.
    let o = pappus(&[
        "verify",
        "--field",
        "quadext",
        "--theorem",
        "roundtrip",
        "--a",
        "3",
        "--b",
        "w",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["pass"], false);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(pappus(&["verify", "--a", "1", "--b", "3"]).status.code(), Some(2));
    assert_eq!(pappus(&["verify", "--a", "3"]).status.code(), Some(2));
    assert_eq!(pappus(&["verify", "--a", "x/", "--b", "3"]).status.code(), Some(2));
    assert_eq!(pappus(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pappus(&["render", "--field", "symbolic"]).status.code(), Some(2));
    assert_eq!(pappus(&["scan"]).status.code(), Some(2));
    let o = pappus(&["verify", "--a", "0", "--b", "3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("a = 0"));
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout(&pappus(&["verify", "--a", "3", "--b", "5"]));
    assert!(!plain.contains("elapsed_ms"));
    let timed = stdout(&pappus(&["verify", "--a", "3", "--b", "5", "--timing"]));
    assert!(timed.contains("elapsed_ms"));
}

#[test]
fn report_is_byte_identical_for_a_seed() {
    let args = ["report", "--a", "-1", "--b", "2", "--seed", "42", "--samples", "8"];
    let x = pappus(&args);
    let y = pappus(&args);
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
    let z = pappus(&["report", "--a", "-1", "--b", "2", "--seed", "43", "--samples", "8"]);
    assert_ne!(x.stdout, z.stdout);
}

#[test]
fn scan_reproduces_the_harmonic_grid() {
    let o = pappus(&["scan", "--values=-1,1/2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,status,glue,is_super,t2,t3"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.contains(&"-1,-1,ok,id t2t3,true,12,8"));
    assert!(rows.iter().all(|r| r.ends_with(",true,12,8")));
}

#[test]
fn scan_marks_degenerate_rows() {
    let text = stdout(&pappus(&["scan", "--values", "1,3"]));
    assert!(text.lines().any(|l| l.starts_with("1,3,degenerate")));
    assert!(text.lines().any(|l| l == "3,3,ok,t2t3,false,15,7"));
}

#[test]
fn random_scan_flags_only_harmonic_super_rows() {
    let text = stdout(&pappus(&["scan", "--random", "100", "--seed", "5"]));
    assert_eq!(text.lines().count(), 101);
    let harmonic = ["-1", "1/2", "2"];
    for row in text.lines().skip(1) {
        let f: Vec<&str> = row.split(',').collect();
        if f[4] == "true" {
            assert!(harmonic.contains(&f[0]) && harmonic.contains(&f[1]), "{row}");
        }
    }
}

#[test]
fn render_writes_svg_to_a_file() {
    let out = temp("scene.svg");
    let o = pappus(&["render", "--a", "3", "--b", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line ").count(), 9);
    assert_eq!(svg.matches("<circle class=\"point\"").count(), 9);
}

#[test]
fn render_with_s_at_infinity_warns() {
    let o = pappus(&["render", "--a=-1", "--b=-1", "--chart=1,-1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("S is at infinity"));
    let o = pappus(&["render", "--a", "3", "--b", "5", "--chart", "0,0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scene_files_drive_every_command() {
    let path = temp("scene.json");
    fs::write(
        &path,
        r#"{"field": "rational", "a": "2", "b": "-1", "render": {"size": 400.0, "labels": false}}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let v = json(&pappus(&["verify", "--scene", p]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["a"], "2");
    let svg = stdout(&pappus(&["render", "--scene", p]));
    assert!(!svg.contains("<text"));
    let d = json(&pappus(&["dual", "--scene", p]));
    assert_eq!(d["on_la"].as_array().unwrap().len(), 3);
    let csv = stdout(&pappus(&["lattice", "--scene", p, "--csv"]));
    assert!(csv.starts_with("line,A1,A2,A3,B1,B2,B3,C1,C2,C3"));
    let lat = json(&pappus(&["lattice", "--scene", p, "--which", "configuration"]));
    // Two Pappus lines pass through S here, so the generic (9, 9) does not apply.
    let t = |k: &str| lat["t"][k].as_u64().unwrap_or(0);
    assert_eq!(t("2") + 3 * t("3"), 36);
    assert_ne!((t("2"), t("3")), (9, 9));

    fs::write(&path, r#"{"field": "rational", "a": "2", "b": "-1", "colour": "red"}"#).unwrap();
    assert_eq!(pappus(&["verify", "--scene", p]).status.code(), Some(2));
}
