use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_motspc");
const SCHEMA: &str = include_str!("../schemas/envelope.v1.schema.json");

/// One invocation of every command, with its expected exit code.
const INVOCATIONS: &[(&[&str], i32)] = &[
    (&["kmw", "table", "--q", "3", "--range", "-3..2"], 0),
    (&["kmw", "table", "--q", "9", "--range", "-6..6"], 0),
    (&["kmw", "reduce", "--q", "5", "--word", "[w][-1] + eta^2 h"], 0),
    (&["kmw", "closure", "--p", "7", "--range", "-2..2"], 0),
    (&["witt", "classify", "--q", "5", "--form", "1,1"], 0),
    (&["witt", "classify", "--q", "7", "--form", "1,1"], 0),
    (&["witt", "ring", "--q", "11"], 0),
    (&["gw", "--q", "7"], 0),
    (&["milnor", "--q", "9", "--n", "-2"], 0),
    (&["milnor", "--q", "3", "--n", "1"], 0),
    (&["spech", "--q", "5", "--prime-bound", "13"], 0),
    (&["motive", "decompose", "--space", "P2xP1"], 0),
    (&["motive", "hom", "--space", "P2"], 0),
    (&["motive", "dual", "--space", "P1xP1"], 0),
    (&["motive", "pairing", "--space", "P2xP1"], 0),
    (&["spc", "tate"], 0),
    (&["spc", "sh-top", "--prime-bound", "3", "--height-bound", "3"], 0),
    (&["spc", "equivariant", "--n", "2", "--relation", "C1:P(2,inf)>C2:P(2,1)"], 0),
    (&["verify", "--suite", "ses"], 0),
];

fn motspc(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("MOTSPC_KMW_WINDOW").env_remove("MOTSPC_UNIVERSE").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_args<'a>(args: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    v
}

#[test]
fn table_for_f3() {
    let o = motspc(&["kmw", "table", "--q", "3", "--range", "-3..2"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(2)
        .map(|l| l.split("  ").map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect())
        .collect();
    let groups: Vec<(&str, &str)> = rows.iter().map(|r| (r[0].as_str(), r[1].as_str())).collect();
    assert_eq!(groups, [("-3", "Z/4"), ("-2", "Z/4"), ("-1", "Z/4"), ("0", "Z + Z/2"), ("1", "Z/2"), ("2", "0")]);
}

#[test]
fn witt_classify_example() {
    let o = motspc(&["witt", "classify", "--q", "5", "--form", "1,1"]);
    assert!(stdout(&o).starts_with("isotropic, Witt class 0"));
}

#[test]
fn exit_codes() {
    for (args, code) in INVOCATIONS {
        assert_eq!(motspc(args).status.code(), Some(*code), "{args:?}");
    }
    let usage: &[&[&str]] = &[
        &["frobnicate"],
        &["kmw", "table", "--q", "4", "--range", "0..1"],
        &["kmw", "table", "--q", "3", "--range", "2..1"],
        &["kmw", "reduce", "--q", "5", "--word", "[0]"],
        &["kmw", "reduce", "--q", "5", "--word", "eta +"],
        &["witt", "classify", "--q", "5", "--form", "1,x"],
        &["witt", "classify", "--q", "5", "--form", "0"],
        &["motive", "decompose", "--space", "P9"],
        &["spc", "sh-top", "--prime-bound", "1000", "--height-bound", "100"],
        &["verify", "--suite", "nope"],
    ];
    for args in usage {
        let o = motspc(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(motspc(&["--help"]).status.code(), Some(0));
}

#[test]
fn outputs_are_byte_reproducible() {
    for (args, _) in INVOCATIONS {
        for a in [args.to_vec(), json_args(args)] {
            let first = motspc(&a);
            let second = motspc(&a);
            assert_eq!(first.stdout, second.stdout, "{a:?}");
            assert_eq!(first.stderr, second.stderr, "{a:?}");
        }
    }
}

#[test]
fn json_matches_schema() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for (args, _) in INVOCATIONS {
        let out = stdout(&motspc(&json_args(args)));
        let v: Value = serde_json::from_str(&out).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(v["schema_version"], 1);
        assert!(v["verdicts"].as_array().unwrap().iter().all(|d| d["passed"] == true), "{args:?}");
    }
}

#[test]
fn schema_rejects_malformed_envelopes() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut v: Value = serde_json::from_str(&stdout(&motspc(&["--json", "gw", "--q", "3"]))).unwrap();
    assert!(validator.is_valid(&v));
    v["schema_version"] = 2.into();
    assert!(!validator.is_valid(&v));
    v["schema_version"] = 1.into();
    v["result"].as_object_mut().unwrap().remove("relations");
    assert!(!validator.is_valid(&v));
}

#[test]
fn text_and_json_agree_on_verdicts() {
    let text = stdout(&motspc(&["verify", "--suite", "ses"]));
    let v: Value = serde_json::from_str(&stdout(&motspc(&["--json", "verify", "--suite", "ses"]))).unwrap();
    assert!(text.contains("pass"));
    assert_eq!(v["verdicts"][0]["name"], "ses");
    assert_eq!(v["verdicts"][0]["passed"], true);
}

#[test]
fn window_override() {
    let narrow = Command::new(BIN)
        .args(["--json", "kmw", "table", "--q", "3", "--range", "-2..2"])
        .env("MOTSPC_KMW_WINDOW", "-2..2")
        .output()
        .unwrap();
    assert_eq!(narrow.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&narrow.stdout).unwrap();
    assert_eq!(v["truncation"]["degree_window"], serde_json::json!([-2, 2]));
    let outside = Command::new(BIN)
        .args(["kmw", "table", "--q", "3", "--range", "-3..2"])
        .env("MOTSPC_KMW_WINDOW", "-2..2")
        .output()
        .unwrap();
    assert_eq!(outside.status.code(), Some(1));
    let bad = Command::new(BIN).args(["gw", "--q", "3"]).env("MOTSPC_KMW_WINDOW", "1..3").output().unwrap();
    assert_eq!(bad.status.code(), Some(0), "gw does not read the window");
    let bad =
        Command::new(BIN).args(["milnor", "--q", "3", "--n", "1"]).env("MOTSPC_KMW_WINDOW", "1..3").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn universe_override() {
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["--json", "spc", "tate"];
        args.extend_from_slice(extra);
        let o = Command::new(BIN).args(&args).env("MOTSPC_UNIVERSE", env).output().unwrap();
        (o.status.code(), serde_json::from_slice::<Value>(&o.stdout).ok())
    };
    let (code, v) = run("2,1", &[]);
    assert_eq!(code, Some(0));
    let v = v.unwrap();
    assert_eq!(v["truncation"]["twist_radius"], 2);
    assert_eq!(v["truncation"]["shift_radius"], 1);
    let (_, v) = run("2,1", &["--twist-radius", "3"]);
    assert_eq!(v.unwrap()["truncation"]["twist_radius"], 3);
    assert_eq!(run("nonsense", &[]).0, Some(1));
}

#[test]
fn dot_output() {
    let out = stdout(&motspc(&["spc", "sh-top", "--prime-bound", "2", "--height-bound", "1", "--dot"]));
    assert!(out.starts_with("digraph"));
    assert!(out.trim_end().ends_with('}'));
}
