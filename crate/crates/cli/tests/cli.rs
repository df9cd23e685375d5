use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn kanlim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kanlim")).args(args).env_remove("KANLIM_SEED").output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kanlim-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn complex(modules: &[(usize, &[u32])], diffs: Vec<Value>) -> Value {
    let ms: Vec<Value> = modules.iter().map(|(r, t)| json!({ "rank": r, "torsion": t })).collect();
    json!({ "p": 3, "N": 4, "modules": ms, "differentials": diffs })
}

fn moore() -> Value {
    complex(&[(1, &[]), (1, &[]), (0, &[]), (0, &[])], vec![json!({"entries": [[3, 1]]}), json!({"entries": []}), json!({"entries": []}), json!({"entries": []})])
}

fn unit() -> Value {
    let e = || json!({"entries": []});
    complex(&[(1, &[]), (0, &[]), (0, &[]), (0, &[])], vec![e(), e(), e(), e()])
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, v.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

/// Short names: `0`, `Z/3`, anything else spelled out.
fn table(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|m| match (m["rank"].as_u64().unwrap(), m["torsion"].as_array().unwrap().as_slice()) {
            (0, []) => "0".to_string(),
            (0, [e]) => format!("Z/{}", 3u64.pow(e.as_u64().unwrap() as u32)),
            _ => m.to_string(),
        })
        .collect()
}

#[test]
fn reconstruct_moore() {
    let dir = scratch("reconstruct");
    let out = kanlim(&["reconstruct", &write(&dir, "m.json", &moore())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "roundtrip: exact");
}

#[test]
fn smash_moore_moore() {
    let dir = scratch("smash");
    let m = write(&dir, "m.json", &moore());
    let out = kanlim(&["smash", &m, &m]);
    // the membership check fails for Moore ⊗ Moore; everything else passes
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table(&r["q_cohomology"]), ["0", "Z/3", "Z/3", "0"]);
    assert_eq!(r["q_cohomology"], r["oracle_cohomology"]);
    for c in r["checks"].as_array().unwrap() {
        let expect = if c["anchor"] == "lobject-membership" { "fail" } else { "pass" };
        assert_eq!(c["status"], expect, "{}", c["anchor"]);
    }
}

#[test]
fn smash_unit_and_zero() {
    let dir = scratch("unit");
    let (m, u) = (write(&dir, "m.json", &moore()), write(&dir, "u.json", &unit()));
    let out = kanlim(&["smash", &u, &m]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table(&r["q_cohomology"]), ["0", "Z/3", "0", "0"]);
    let e = || json!({"entries": []});
    let z = write(&dir, "z.json", &complex(&[(0, &[]), (0, &[]), (0, &[]), (0, &[])], vec![e(), e(), e(), e()]));
    let out = kanlim(&["smash", &z, &m]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(table(&r["q_cohomology"]).iter().all(|h| h == "0"));
}

#[test]
fn exit_codes() {
    let dir = scratch("codes");
    let one = || json!({"entries": [[1, 1]]});
    let bad = complex(&[(1, &[]), (1, &[]), (1, &[]), (0, &[])], vec![one(), one(), json!({"entries": []}), json!({"entries": []})]);
    let out = kanlim(&["reconstruct", &write(&dir, "bad.json", &bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid complex"));
    assert_eq!(kanlim(&["reconstruct", "/nonexistent/c.json"]).status.code(), Some(2));
    assert_eq!(kanlim(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(kanlim(&["verify", "--p", "4"]).status.code(), Some(2));
    assert_eq!(kanlim(&["--help"]).status.code(), Some(0));
}

#[test]
fn poset_dot() {
    let out = kanlim(&["poset", "D_4", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let nodes = text.lines().filter(|l| l.trim_start().starts_with('"') && !l.contains("->")).count();
    assert_eq!(nodes, 12);
    let out = kanlim(&["poset", "C_4"]);
    let p: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(p["elements"].as_array().unwrap().len(), 8);
}

#[test]
fn sseq_single_vertex() {
    let dir = scratch("sseq");
    let d = json!({
        "poset": { "elements": ["*"], "hasse": [] },
        "objects": { "*": moore() },
        "maps": []
    });
    let out = kanlim(&["sseq", &write(&dir, "d.json", &d), "--map", "identity"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let cells = r["vertices"][0]["pages"][0]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["s"], 0);
    assert_eq!(cells[0]["t"], 1);
    assert_eq!(cells[0]["module"], json!({ "rank": 0, "torsion": [1] }));
}

#[test]
fn randomgen_is_reproducible() {
    let a = kanlim(&["randomgen", "--seed", "1", "--cases", "5"]);
    let b = kanlim(&["randomgen", "--seed", "1", "--cases", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let out = kanlim(&["randomgen", "--seed", "1", "--cases", "20", "--flat", "--max-exp", "2"]);
    let cs: Value = serde_json::from_slice(&out.stdout).unwrap();
    for c in cs.as_array().unwrap() {
        for m in c["modules"].as_array().unwrap() {
            assert!(m["torsion"].as_array().unwrap().is_empty());
            assert!(m["rank"].as_u64().unwrap() <= 3);
        }
    }
    let out = kanlim(&["randomgen", "--seed", "2", "--cases", "20", "--max-exp", "2"]);
    let cs: Value = serde_json::from_slice(&out.stdout).unwrap();
    for c in cs.as_array().unwrap() {
        for m in c["modules"].as_array().unwrap() {
            let t = m["torsion"].as_array().unwrap();
            assert!(t.iter().all(|e| e.as_u64().unwrap() <= 2));
            assert!(m["rank"].as_u64().unwrap() as usize + t.len() <= 3);
        }
    }
    let dir = scratch("files");
    let out = kanlim(&["randomgen", "--seed", "3", "--cases", "2", "--out", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("complex-001.json").exists());
}

#[test]
fn verify_is_deterministic() {
    let a = kanlim(&["verify", "--cases", "3"]);
    let b = kanlim(&["verify", "--cases", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let r: Value = serde_json::from_slice(&a.stdout).unwrap();
    let suites = r["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 8);
    for s in suites {
        if s["id"] != "A4" {
            assert_eq!(s["status"], "pass", "{s}");
        }
    }
    let seeded = Command::new(env!("CARGO_BIN_EXE_kanlim")).args(["verify", "--cases", "1"]).env("KANLIM_SEED", "7").output().unwrap();
    let r: Value = serde_json::from_slice(&seeded.stdout).unwrap();
    assert_eq!(r["seed"], 7);
}
