use std::path::PathBuf;
use std::process::{Command, Output};

fn spinor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = spinor(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spinor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_examples() {
    let out = stdout(&["check", "--group", "PGL2", "--weight", "3"]);
    assert!(out.contains(": spinorial"), "{out}");
    assert!(out.contains("q(1) = 14"), "{out}");
    assert!(stdout(&["check", "--group", "SO4", "--weight", "1,1"]).contains("aspinorial"));
    assert!(stdout(&["check", "--group", "SO4", "--weight", "1,1", "--labels"]).contains("aspinorial"));
    assert!(stdout(&["check", "--group", "Spin8", "--weight", "0,0,0,0"]).contains(": spinorial"));
}

#[test]
fn check_sum_and_hyperbolic() {
    // S(σ_{(1,0)}) has q = 1; two copies are spinorial
    let one = stdout(&["check", "--group", "GL2", "--weight", "S:1,0"]);
    assert!(one.contains("aspinorial") && one.contains("= 1)"), "{one}");
    let two = stdout(&["check", "--group", "GL2", "--weight", "S:1,0", "--weight", "S:1,0", "--sum"]);
    assert!(two.contains(": spinorial") && two.contains("= 2)"), "{two}");
}

#[test]
fn l_oracle_method_agrees() {
    let a = stdout(&["check", "--group", "SO7", "--weight", "1,0,0", "--weight", "1,1,0", "--format", "json"]);
    let b = stdout(&["check", "--group", "SO7", "--weight", "1,0,0", "--weight", "1,1,0", "--method", "l-oracle", "--format", "json"]);
    let pick = |s: &str| -> Vec<bool> {
        let v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["results"].as_array().unwrap().iter().map(|r| r["spinorial"].as_bool().unwrap()).collect()
    };
    // standard rep q = 1, adjoint q = 5
    assert_eq!(pick(&a), vec![false, false]);
    assert_eq!(pick(&a), pick(&b));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["check", "--group", "PSO8", "--weight", "1,1,0,0", "--weight", "2,0,0,0", "--format", "json"],
        vec!["table", "--group", "SO8", "--format", "json"],
        vec!["oracle", "--group", "SO5", "--box", "2", "--format", "json"],
        vec!["atlas", "--group", "PGL2", "--box", "16", "--k", "2", "--format", "json"],
        vec!["summary", "--group", "E7ad", "--format", "json"],
    ] {
        let out = stdout(&args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(out, again, "{args:?}");
    }
}

#[test]
fn certificates_are_exact_decimal_strings() {
    let out = stdout(&["check", "--group", "E7ad", "--weight", "2,2,3,4,3,2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cert = &v["results"][0]["certificate"][0]["value"];
    assert!(cert.is_string());
    assert!(cert.as_str().unwrap().chars().all(|c| c.is_ascii_digit() || c == '-'));
    assert_eq!(v["results"][0]["spinorial"], serde_json::Value::Bool(false));
}

#[test]
fn table_examples() {
    let pso = stdout(&["table", "--group", "PSO12"]);
    assert!(pso.contains("p PSO12 = 5 (tabulated 5)"), "{pso}");
    let so8 = stdout(&["table", "--group", "SO8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&so8).unwrap();
    let rows = v["weights"].as_array().unwrap();
    let find = |label: &str| rows.iter().find(|r| r["weight"] == label).unwrap().clone();
    assert_eq!(find("w2")["dim"], "28");
    assert_eq!(find("w2")["chi"], "1");
    assert_eq!(find("0")["dim"], "1");
    assert_eq!(find("0")["chi"], "0");
    // the tabulated dimension of ϖ_− differs from the computed one
    assert_eq!(find("w_-")["dim"], "35");
    assert_eq!(find("w_-")["tabulated"]["dim"], "315");
}

#[test]
fn oracle_examples() {
    assert!(stdout(&["oracle", "--group", "PGL2", "--box", "20"]).contains("PGL2: 21/21 agree"));
    let so4 = stdout(&["oracle", "--group", "SO4", "--box", "6"]);
    let last = so4.lines().last().unwrap();
    let (agree, total) = last.split_once(": ").unwrap().1.split_once(" agree").unwrap().0.split_once('/').unwrap();
    assert_eq!(agree, total, "{last}");
    let empty = stdout(&["oracle", "--group", "SO5", "--guard", "0"]);
    assert!(empty.contains("vacuous pass"), "{empty}");
}

#[test]
fn atlas_examples() {
    let plot = scratch("pgl2.csv");
    let out = stdout(&["atlas", "--group", "PGL2", "--k", "2", "--box", "64", "--plot", plot.to_str().unwrap()]);
    assert!(out.contains("violations: 0"), "{out}");
    assert!(out.contains("1/2 (cell"), "{out}");
    let csv = std::fs::read_to_string(&plot).unwrap();
    assert_eq!(csv.lines().count(), 66);
    assert_eq!(csv.lines().nth(4), Some("3,1"));
    let so4 = stdout(&["atlas", "--group", "SO4", "--k", "3", "--box", "16"]);
    assert!(so4.contains("violations: 0"), "{so4}");
    assert!(stdout(&["atlas", "--group", "PGL2", "--k", "7", "--box", "64"]).contains("vacuous pass"));
}

#[test]
fn summary_examples() {
    for g in ["Sp16/2", "SL8/4", "G+16", "SO9", "PSO12", "E6ad", "E7ad", "GL3", "SL12/6"] {
        let out = stdout(&["summary", "--group", g]);
        assert!(out.trim_end().ends_with("PASS"), "{out}");
    }
}

#[test]
fn group_files() {
    let cat = scratch("sl84.json");
    std::fs::write(&cat, r#"{"catalog": {"family": "SL_quot", "n": 8, "d": 4}}"#).unwrap();
    let out = stdout(&["summary", "--group", cat.to_str().unwrap()]);
    assert!(out.starts_with("SL8/4"), "{out}");

    // PGL2 in the coroot basis: the cocharacter ½ generates X_*
    let rd = scratch("pgl2.json");
    std::fs::write(&rd, r#"{"rootDatum": {"cartan": [[2]], "cocharGenerators": [[1]], "denominator": 2}}"#).unwrap();
    let out = stdout(&["check", "--group", rd.to_str().unwrap(), "--weight", "6", "--weight", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].contains(": spinorial") && lines[0].contains("= 14)"), "{out}");
    assert!(lines[1].contains("aspinorial"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(spinor(&["check", "--group", "XY7", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(spinor(&["check", "--group", "SO4", "--weight", "1/2,1/2"]).status.code(), Some(2));
    assert_eq!(spinor(&["check", "--group", "Sp4", "--weight", "1,0"]).status.code(), Some(2));
    assert_eq!(spinor(&["check", "--group", "SO5"]).status.code(), Some(2));
    assert_eq!(spinor(&["bogus"]).status.code(), Some(2));
    let guarded = spinor(&["check", "--group", "SO7", "--weight", "2,1,0", "--method", "l-oracle", "--guard", "5"]);
    assert_eq!(guarded.status.code(), Some(4));
    let env = Command::new(env!("CARGO_BIN_EXE_spinor"))
        .args(["check", "--group", "SO7", "--weight", "2,1,0", "--method", "l-oracle"])
        .env("SPINOR_GUARD", "5")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(4));
    // an aspinorial verdict is still a successful computation
    assert_eq!(spinor(&["check", "--group", "SO5", "--weight", "1,0"]).status.code(), Some(0));
}
