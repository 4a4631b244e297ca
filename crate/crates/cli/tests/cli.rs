use serde_json::{json, Value};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairdepth")).args(args).output().unwrap()
}

fn doc(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap()
}

/// The schema narrowed to one of its definitions.
fn validator(def: &str) -> jsonschema::JSONSchema {
    let mut s = schema();
    s.as_object_mut().unwrap().remove("anyOf");
    s["$ref"] = json!(format!("#/$defs/{def}"));
    jsonschema::JSONSchema::compile(&s).unwrap()
}

fn assert_valid(def: &str, v: &Value) {
    let check = validator(def);
    if let Err(errors) = check.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{def}: {msgs:?}\n{v:#}");
    };
}

#[test]
fn depth_of_the_maximal_ideal_modulo_x() {
    let d = doc(&["Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)"]);
    assert_eq!(d["depth"], 1);
    assert_eq!(d["witness_prime"], json!(["y"]));
    assert_eq!(d["dim_mod_JM"], 1);
    assert_eq!(d["is_cm"], true);
    assert_eq!(d["w_minimal"], json!([["y"]]));
    assert_valid("depth", &d);
}

#[test]
fn square_of_x_against_x_is_not_cohen_macaulay() {
    let d = doc(&["Q[x,y]; cm I=(x^2) J=(x) M=(1)/(0)"]);
    assert_eq!(d, json!({"depth": 0, "dim_mod_JM": 1, "is_cm": false}));
    assert_valid("cm", &d);
    let t = doc(&["Q[x,y]; torsion I=(x^2) J=(x) M=(1)/(0)"]);
    assert_eq!(t["torsion"], true);
    assert_valid("torsion", &t);
}

#[test]
fn scope_flag_switches_the_infimum() {
    let req = "Q[x,y]; depth I=(x,y) J=(x*y) M=(1)/(0)";
    assert_eq!(doc(&[req])["depth"], 1);
    let m = doc(&["--scope", "monomial", req]);
    assert_eq!(m["depth"], 2);
    assert_eq!(m["scope"], "monomial");
}

#[test]
fn every_command_matches_the_schema() {
    let cases = [
        ("wset", "Q[x,y]; wset I=(x,y) J=(x^2)"),
        ("certified", "Q[x,y,z]; grade a=(x,y,z) M=(1)/(x*y)"),
        ("certified", "F5[x,y]; depthp p=(x) M=(1)/(x*y)"),
        ("ext", "Q[x,y]; ext a=(x,y) M=(1)/(x*y) i=1"),
        ("ass", "Q[x,y]; ass M=(1)/(x^2,x*y)"),
        ("decomp", "Q[x,y,z]; decomp I=(x^2,x*y,y*z)"),
        ("dim", "Q[x,y]; dim I=(x*y)"),
        ("dim", "Q[x,y]; dim M=(x)/(x^2)"),
        ("regseq_check", "Q[x,y]; regseq M=(1)/(x*y) k=0 seq=[x,y]"),
        ("regseq_construct", "Q[x,y]; regseq a=(x,y) M=(1)/(0) construct=2"),
        ("regseq_construct", "Q[x,y]; regseq a=(x*y) M=(1)/(x*y) construct=1"),
        ("verify", "verify n=1 exp=1 laws=all"),
        ("depth", "Q[x]; depth I=(x) J=(x) M=(x)/(x)"),
    ];
    let whole = jsonschema::JSONSchema::compile(&schema()).unwrap();
    for (def, req) in cases {
        let d = doc(&[req]);
        assert_valid(def, &d);
        assert!(whole.is_valid(&d), "{req}");
    }
}

#[test]
fn worked_values_of_the_other_commands() {
    assert_eq!(doc(&["Q[x,y]; grade a=(x,y) M=(1)/(0)"])["value"], 2);
    assert_eq!(doc(&["Q[x,y]; grade a=(x,y) M=(1)/(x*y)"])["value"], 1);
    let d = doc(&["Q[x,y,z]; decomp I=(x^2,x*y,y*z)"]);
    assert_eq!(d["components"], json!(["(x, z)", "(x^2, y)"]));
    assert_eq!(d["minimal_primes"], json!([["x", "y"], ["x", "z"]]));
    assert_eq!(doc(&["Q[x,y]; dim I=(x*y)"])["dim"], 1);
    assert_eq!(doc(&["Q[x,y]; dim M=(x)/(x)"])["dim"], "-inf");
    let d = doc(&["Q[x,y]; ass M=(1)/(x^2,x*y)"]);
    assert_eq!(d["associated_primes"], json!([["x"], ["x", "y"]]));
    // H^1_m(R/(xy)) ≠ 0, H^0 = 0
    assert_eq!(doc(&["Q[x,y]; ext a=(x,y) M=(1)/(x*y) i=1"])["value"], true);
    assert_eq!(doc(&["Q[x,y]; ext a=(x,y) M=(1)/(x*y) i=0"])["value"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["Q[x,y]; depth I=(x) J=(x) M=(1)/(0)"]).status.code(), Some(0));
    let parse = run(&["Q[x,y]; depth I=(x,z) J=(x) M=(1)/(0)"]);
    assert_eq!(parse.status.code(), Some(2));
    let err = String::from_utf8_lossy(&parse.stderr);
    assert!(err.contains("at 19") && err.contains('^'), "{err}");
    // not a prime
    assert_eq!(run(&["Q[x,y]; depthp p=(x*y) M=(1)/(0)"]).status.code(), Some(1));
    // a sequence comparison whose consequence fails under its hypothesis
    let cmp = run(&["--json", "Q[x,y]; regseq I=(y) J=(x^2) M=(1)/(0) k=-1 seq=[x*y]"]);
    assert_eq!(cmp.status.code(), Some(3));
    let d: Value = serde_json::from_slice(&cmp.stdout).unwrap();
    assert_eq!((d["hypothesis_holds"].clone(), d["consequence_holds"].clone()), (json!(true), json!(false)));
    assert_valid("regseq_compare", &d);
}

#[test]
fn field_override_and_file_input() {
    let d = doc(&["--field", "F2", "Q[x,y]; grade a=(x,y) M=(1)/(x^2)"]);
    assert_eq!(d["value"], 1);
    assert_eq!(run(&["--field", "F4", "Q[x]; dim I=(x)"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("pairdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("req.txt");
    let out = dir.join("out.json");
    std::fs::write(&input, "Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)\n").unwrap();
    let r = run(&["--file", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(r.status.success());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written["depth"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "--seed", "5", "--threads", "3", "verify n=1 exp=2 samples=3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn plain_output_is_aligned() {
    let out = run(&["Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("depth "), "{text}");
    let columns: Vec<usize> = text
        .lines()
        .map(|l| {
            let key_end = l.find(' ').unwrap();
            l.len() - l[key_end..].trim_start().len()
        })
        .collect();
    assert!(columns.windows(2).all(|w| w[0] == w[1]), "{text}");
}

#[test]
fn verify_flags_set_the_census() {
    let dir = std::env::temp_dir().join(format!("pairdepth-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report = dir.join("report.json");
    let r = run(&[
        "verify",
        "--census",
        "n=1,exp=2",
        "--laws",
        "cm-descends,upper-bound-dim",
        "--seed",
        "42",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let d: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(d["census"]["n"], 1);
    assert_eq!(d["census"]["seed"], 42);
    assert_eq!(d["failures"], 0);
    assert_eq!(d["laws"].as_array().unwrap().len(), 2);
    assert_valid("verify", &d);
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(run(&["verify", "--laws", "no-such-law"]).status.code(), Some(2));
    assert_eq!(run(&["Q[x]; dim I=(x)", "--laws", "all"]).status.code(), Some(2));
}

#[test]
fn monomial_scope_census_reports_failures() {
    // (m, (xy), R): depth 2 through monomial primes, dim R/(xy) = 1
    let r = run(&["--json", "--scope", "monomial", "verify n=2 exp=1 laws=upper-bound-dim"]);
    assert_eq!(r.status.code(), Some(3));
    let d: Value = serde_json::from_slice(&r.stdout).unwrap();
    assert!(d["failures"].as_u64().unwrap() > 0);
    assert_eq!(d["artifacts"][0]["scope"], "monomial");
}
