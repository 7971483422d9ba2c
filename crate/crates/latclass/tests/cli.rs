use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn latclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latclass"))
        .args(args)
        .env_remove("LATTICE_CENSUS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = latclass(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn area_census_table() {
    let csv = stdout(&["census", "--mode", "area", "--min", "1", "--max", "7"]);
    assert_eq!(csv, "param,count\n1,1\n2,2\n3,3\n4,7\n5,6\n6,13\n7,13\n");
}

#[test]
fn cardinality_census_table() {
    let csv = stdout(&["census", "--mode", "cardinality", "--min", "3", "--max", "7"]);
    assert_eq!(csv, "param,count\n3,1\n4,3\n5,6\n6,13\n7,21\n");
}

#[test]
fn symmetric_census_vanishes_at_odd_areas() {
    let csv = stdout(&["census", "--mode", "area", "--min", "2", "--max", "8", "--symmetric"]);
    for line in csv.lines().skip(1) {
        let (m, count) = line.split_once(',').unwrap();
        if m.parse::<i64>().unwrap() % 2 == 1 {
            assert_eq!(count, "0", "m = {m}");
        }
    }
}

#[test]
fn census_writes_files_and_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let cat = dir.path().join("c.jsonl");
    let out = latclass(&[
        "census", "--mode", "cardinality", "--min", "3", "--max", "6",
        "--out", csv.to_str().unwrap(), "--catalog", cat.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("classes"));
    assert_eq!(fs::read_to_string(&csv).unwrap(), "param,count\n3,1\n4,3\n5,6\n6,13\n");
    let lines: Vec<serde_json::Value> = fs::read_to_string(&cat)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 23);
    for l in &lines {
        let w = l["param"].as_i64().unwrap();
        assert_eq!(l["invariants"]["total"].as_i64().unwrap(), w);
        assert_eq!(l["mode"], "cardinality");
    }
}

#[test]
fn lemma2_area() {
    let v = json(&["construct", "--family", "lemma2", "--ell", "3", "--k", "5"]);
    assert_eq!(v["polygons"][0]["invariants"]["area2"], 14);
}

#[test]
fn pdwk_volume_and_count() {
    let v = json(&["construct", "--family", "pdwk", "--d", "3", "--w", "5", "--k", "3"]);
    assert_eq!(v["volume"], serde_json::json!({"num": 2, "den": 3}));
    assert_eq!(v["count"], 5);
    assert_eq!(v["dim"], 3);
}

#[test]
fn symmetric_assembly_all_choices() {
    let v = json(&["construct", "--family", "assemble-sym", "--tau2", "4", "--m", "128", "--all"]);
    let polys = v["polygons"].as_array().unwrap();
    assert_eq!(polys.len(), 4);
    assert_eq!(v["classes"], 4);
    for p in polys {
        assert_eq!(p["invariants"]["area2"], 128);
        assert_eq!(p["invariants"]["lattice_symmetric"], true);
        assert!(p["trace"]["j"].is_i64() && p["trace"]["mu2"].is_i64());
    }
}

#[test]
fn single_choice_and_theorem4() {
    let v = json(&["construct", "--family", "assemble-card", "--tau2", "4", "--w", "20", "--choice", "2,1"]);
    assert_eq!(v["polygons"].as_array().unwrap().len(), 1);
    assert_eq!(v["polygons"][0]["invariants"]["total"], 20);

    let csv = stdout(&["construct", "--family", "theorem4", "--d", "3", "--w", "5", "--n", "3"]);
    assert_eq!(
        csv,
        "d,w,k,volume_num,volume_den,count\n3,5,1,1,3,5\n3,5,2,1,2,5\n3,5,3,2,3,5\n"
    );
}

#[test]
fn growth_report() {
    let csv = stdout(&["growth", "--mode", "area", "--max", "7"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "param,count,log2_count,log2_count_over_cuberoot");
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[1], "1,1,0.000000,0.000000");
    assert!(lines[5].starts_with("5,6,2.584963,"));
}

#[test]
fn catalog_single_parameter() {
    let text = stdout(&["catalog", "--mode", "area", "--m", "4"]);
    assert_eq!(text.lines().count(), 7);
    let keys: Vec<String> = text
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            serde_json::to_string(&v["canonical"]).unwrap()
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| latclass(args).status.code().unwrap();
    assert_eq!(code(&["census", "--mode", "area", "--min", "0", "--max", "3"]), 2);
    assert_eq!(code(&["census", "--mode", "area", "--min", "5", "--max", "3"]), 2);
    assert_eq!(code(&["construct", "--family", "lemma2", "--ell", "3"]), 2);
    assert_eq!(code(&["construct", "--family", "assemble-sym", "--tau2", "4", "--m", "126"]), 3);
    assert_eq!(code(&["construct", "--family", "pdwk", "--d", "4", "--w", "8", "--k", "1"]), 3);
    assert_eq!(code(&["census", "--mode", "cardinality", "--min", "3", "--max", "9", "--budget", "10"]), 4);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_latclass"))
        .args(["census", "--mode", "cardinality", "--min", "3", "--max", "9"])
        .env("LATTICE_CENSUS_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn failure_leaves_no_partial_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let out = latclass(&[
        "census", "--mode", "area", "--min", "1", "--max", "9", "--budget", "5",
        "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(!Path::new(&csv).exists());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}
