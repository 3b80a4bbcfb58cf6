use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hf"))
        .args(args)
        .env_remove("HF_SEED")
        .output()
        .expect("spawn hf")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_sc_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.g6", "Dhc\n");
    let out = hf(&["verify-sc", &c5]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["sigma"].as_array().unwrap().len(), 5);

    let k5 = write(dir.path(), "k5.g6", "D~{\n");
    assert_eq!(hf(&["verify-sc", &k5]).status.code(), Some(1));

    let p4 = write(
        dir.path(),
        "p4.json",
        r#"{"n": 4, "edges": [[0,1],[1,2],[2,3]]}"#,
    );
    assert_eq!(hf(&["verify-sc", &p4]).status.code(), Some(0));

    let bad = write(dir.path(), "bad.g6", "Dhd\n");
    assert_eq!(hf(&["verify-sc", &bad]).status.code(), Some(1));
}

#[test]
fn enumerate_writes_one_pair_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = hf(&[
        "enumerate-sc",
        "--n",
        "8",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let g6 = fs::read_dir(dir.path()).unwrap().filter(|e| {
        e.as_ref()
            .unwrap()
            .path()
            .extension()
            .is_some_and(|x| x == "g6")
    });
    assert_eq!(g6.count(), 10);
    assert!(!hf(&[
        "enumerate-sc",
        "--n",
        "12",
        "--out",
        dir.path().to_str().unwrap()
    ])
    .status
    .success());
}

#[test]
fn construct_and_check_witness() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("fc");
    let out = hf(&[
        "construct",
        "--family",
        "five-cycle",
        "--r",
        "1",
        "--q",
        "3",
        "--out",
        prefix.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let g6 = prefix.with_extension("g6");
    assert_eq!(
        hf(&["verify-sc", g6.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let side: Value =
        serde_json::from_str(&fs::read_to_string(prefix.with_extension("json")).unwrap()).unwrap();
    assert_eq!(side["blocks"]["x"], serde_json::json!([0]));

    let h = hf(&["hadwiger", g6.to_str().unwrap()]);
    assert_eq!(h.status.code(), Some(0));
    let h = json(&h);
    assert_eq!(h["h"], 7);
    let w = write(dir.path(), "w.json", &h["witness"].to_string());
    assert_eq!(
        hf(&["witness", "check", g6.to_str().unwrap(), &w])
            .status
            .code(),
        Some(0)
    );

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"h": 2, "branch_sets": [[0], [4]]}"#,
    );
    let check = hf(&["witness", "check", g6.to_str().unwrap(), &bad]);
    assert_eq!(check.status.code(), Some(1));
    assert_eq!(json(&check)["valid"], false);
}

#[test]
fn vertex_added_and_extend() {
    let dir = tempfile::tempdir().unwrap();
    let out = hf(&["construct", "--family", "vertex-added", "--s", "0"]);
    assert!(out.status.success());
    let first = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string();
    let g = write(dir.path(), "va.g6", &first);
    let h = json(&hf(&["hadwiger", "--bounds", &g]));
    assert!(h["lo"].as_u64().unwrap() >= 9);

    let c5 = write(dir.path(), "c5.g6", "Dhc\n");
    let prefix = dir.path().join("ext");
    assert!(hf(&[
        "extend",
        "--in",
        &c5,
        "--times",
        "2",
        "--out",
        prefix.to_str().unwrap()
    ])
    .status
    .success());
    let text = fs::read_to_string(prefix.with_extension("g6")).unwrap();
    let g = sc_graph_order(&text);
    assert_eq!(g, 13);
    let h = json(&hf(&[
        "hadwiger",
        "--exact",
        prefix.with_extension("g6").to_str().unwrap(),
    ]));
    assert_eq!(h["h"], 7);
}

fn sc_graph_order(g6: &str) -> usize {
    (g6.as_bytes()[0] - 63) as usize
}

#[test]
fn report_flags() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.g6", "Dhc\n");
    let r = json(&hf(&["report", &c5]));
    assert_eq!(r["chi"]["lo"], 3);
    for flag in [
        "lower_ok",
        "upper_ok",
        "stiebitz_ok",
        "ng_ok",
        "hadwiger_conj_ok",
    ] {
        assert_eq!(r["flags"][flag], true, "{flag}");
    }
}

#[test]
fn search_found_and_absent() {
    let out = hf(&["search", "--n", "5", "--target-h", "3", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["target_h"], 3);
    let out = hf(&["search", "--n", "8", "--target-h", "5", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hf(&["search", "--n", "8", "--target-h", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn theorem1_is_complete_and_byte_stable() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = hf(&[
            "theorem1",
            "--n",
            "4",
            "--max-n",
            "13",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let mut names: Vec<_> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    // h-sets {2},{3},{4},{5},{6,7},{7}: seven entries, two files each, two summaries
    assert_eq!(names.len(), 7 * 2 + 2);
    for name in names {
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap()
        );
    }
    let summary: Value =
        serde_json::from_str(&fs::read_to_string(a.path().join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["complete"], true);
}

#[test]
fn seed_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_hf"))
        .args([
            "construct",
            "--family",
            "five-cycle",
            "--r",
            "4",
            "--q",
            "1",
        ])
        .env("HF_SEED", "5")
        .output()
        .unwrap();
    let with_flag = hf(&[
        "construct",
        "--family",
        "five-cycle",
        "--r",
        "4",
        "--q",
        "1",
        "--seed",
        "5",
    ]);
    assert!(with_env.status.success());
    assert_eq!(with_env.stdout, with_flag.stdout);
}
