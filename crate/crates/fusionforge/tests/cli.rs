use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fusionforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fusionforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn golden(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn ring_matches_printed_r6() {
    let o = run(&["ring", "--q", "6", "--family", "psl2", "--method", "verlinde"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["N"], golden("r6.json")["matrices"]);
    assert_eq!(v["rank"], 7);
    let again = run(&["ring", "--q", "6", "--family", "psl2", "--method", "verlinde"]);
    assert_eq!(o.stdout, again.stdout);
    let closed = run(&["ring", "--q", "6", "--method", "closed"]);
    assert_eq!(o.stdout, closed.stdout);
}

#[test]
fn crosscheck_exit_codes() {
    let o = run(&["crosscheck", "--q", "21", "--family", "psl2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["equal"], true);
    assert_eq!(code(&run(&["crosscheck", "--q", "12", "--family", "etingof"])), 0);
    assert_eq!(code(&run(&["crosscheck", "--q", "1"])), 2);
}

#[test]
fn ring_verify_round_trip() {
    for family in ["psl2", "etingof"] {
        for q in 2..=50 {
            let p = scratch(&format!("{family}-{q}.json"));
            let o = run(&["ring", "--q", &q.to_string(), "--family", family, "--out", p.to_str().unwrap()]);
            assert_eq!(code(&o), 0, "{family} {q}");
            let v = run(&["verify", "--ring", p.to_str().unwrap()]);
            assert_eq!(code(&v), 0, "{family} {q}: {}", String::from_utf8_lossy(&v.stdout));
        }
    }
}

#[test]
fn verify_against_table() {
    let rp = scratch("r15.json");
    let tp = scratch("t15.json");
    assert_eq!(code(&run(&["ring", "--q", "15", "--out", rp.to_str().unwrap()])), 0);
    let t = run(&["table", "--q", "15"]);
    std::fs::write(&tp, &t.stdout).unwrap();
    let o = run(&["verify", "--ring", rp.to_str().unwrap(), "--table", tp.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["table_match"], true);

    let t6 = scratch("t6.json");
    std::fs::write(&t6, run(&["table", "--q", "6"]).stdout).unwrap();
    let r7 = scratch("r7-for-6.json");
    assert_eq!(code(&run(&["ring", "--q", "8", "--out", r7.to_str().unwrap()])), 0);
    let o = run(&["verify", "--ring", r7.to_str().unwrap(), "--table", t6.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn corrupted_ring_reports_associativity() {
    let mut v = json(&run(&["ring", "--q", "6"]));
    // x_{5,1}·x_{5,1} gains an extra x_{6,1}, symmetric in the two factors
    let n = &mut v["N"][1][1][4];
    *n = Value::from(n.as_u64().unwrap() + 1);
    let p = scratch("corrupted.json");
    std::fs::write(&p, serde_json::to_string(&v).unwrap()).unwrap();
    let o = run(&["verify", "--ring", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let rep = json(&o);
    assert_eq!(rep["axioms_ok"], false);
    assert!(rep["violations"].as_array().unwrap().iter().any(|w| w["axiom"] == "associativity"), "{rep}");
}

#[test]
fn input_errors_exit_2() {
    let p = scratch("garbage.json");
    std::fs::write(&p, "{not json").unwrap();
    assert_eq!(code(&run(&["verify", "--ring", p.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify", "--ring", "/nonexistent/ring.json"])), 2);
    assert_eq!(code(&run(&["table", "--q", "1"])), 2);
    assert_eq!(code(&run(&["ring", "--q", "6", "--out", "/nonexistent/dir/out.json"])), 2);
    assert_eq!(code(&run(&["criteria", "--q", "6", "--only", "nonsense"])), 2);
    assert_eq!(code(&run(&["table", "--q", "6", "--family", "sl3"])), 2);
    assert_eq!(code(&run(&["scan", "--q-from", "5", "--q-to", "3"])), 2);
}

#[test]
fn criteria_command() {
    let o = run(&["criteria", "--q", "6", "--family", "psl2"]);
    assert_eq!(code(&o), 0);
    let reps = json(&o);
    let reps = reps.as_array().unwrap();
    assert_eq!(reps.len(), 8);
    assert!(reps.iter().all(|r| r["verdict"] == "pass"));
    let o = run(&["criteria", "--q", "6", "--only", "modular_divisibility"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)[0]["witness"]["values"][0], "210");
    let o = run(&["criteria", "--q", "9", "--only", "zero_spectrum,one_spectrum", "--exhaustive-spectrum"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)[0]["method"], "exhaustive_search");
}

#[test]
fn scan_is_independent_of_jobs() {
    let a = run(&["scan", "--q-from", "2", "--q-to", "14", "--jobs", "1", "--no-timings"]);
    let b = run(&["scan", "--q-from", "2", "--q-to", "14", "--jobs", "8", "--no-timings"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<Value> =
        String::from_utf8(a.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 13 * 2 * 8);
    let p = scratch("scan.jsonl");
    let c = run(&["scan", "--q-from", "6", "--q-to", "6", "--families", "psl2", "--jobs", "2", "--out", p.to_str().unwrap()]);
    assert_eq!(code(&c), 0);
    assert_eq!(std::fs::read_to_string(&p).unwrap().lines().count(), 8);
}

#[test]
fn modsearch_command() {
    let cert = scratch("cert4.json");
    let o = run(&["modsearch", "--max-rank", "4", "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["candidates"], Value::Array(vec![]));
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["complete"], true);
    assert_eq!(c["options"]["max_rank"], 4);
    assert_eq!(code(&run(&["modsearch", "--max-rank", "12"])), 2);
}

#[test]
fn table_formats() {
    let o = run(&["table", "--q", "6", "--format", "text"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("# psl2 q=6 rank=7 fpdim=210\n"));
    let j = json(&run(&["table", "--q", "6"]));
    assert_eq!(j["codegrees"][0], "210");
}
