use std::path::PathBuf;
use std::process::{Command, Output};

fn graphs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../graphs")
}

fn raag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raag"))
        .current_dir(graphs())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const WORKED_U: &str = "a2 a4^-1 a3 a1 a2 a1^-1 a2 a2";
const WORKED_V: &str = "a4^-1 a3 a1 a2 a1^-1 a2";

#[test]
fn cp_answers_yes() {
    let o = raag(&["cp", "--graph", "example4.json", "a1 a2", "a2 a1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "YES\n");
    let o = raag(&["cp", "--graph", "example4.json", "a1", "a1^-1"]);
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn normalize_and_wp() {
    let o = raag(&["normalize", "--graph", "example4.json", "a1 a4 a2 a2^-1"]);
    assert_eq!(stdout(&o), "a4 a1\n");
    let o = raag(&[
        "wp",
        "--graph",
        "example4.json",
        "a1 a4",
        "a4 a1",
        "--certify",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["answer"], true);
    assert_eq!(v["stats"]["certified"], true);
    let o = raag(&["wp", "--graph", "example4.json", "a1 a2", "a2 a1"]);
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn tcp_on_the_worked_pair() {
    let o = raag(&[
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-inversion.json",
        WORKED_U,
        WORKED_V,
    ]);
    assert_eq!(stdout(&o), "YES\n");
    let o = raag(&[
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-inversion.json",
        "--certify",
        "--json",
        WORKED_U,
        WORKED_V,
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["answer"], true);
    assert_eq!(v["witness"], "a2^-1");
    assert_eq!(v["stats"]["method"], "inversions");
    // an even power of the swap is the identity
    let o = raag(&[
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-swap.json",
        "--power",
        "2",
        "a1",
        "a3",
    ]);
    assert_eq!(stdout(&o), "NO\n");
    let o = raag(&[
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-swap.json",
        "a1",
        "a3",
    ]);
    assert_eq!(stdout(&o), "YES\n");
}

#[test]
fn ext_cp() {
    let args = ["ext-cp", "--graph", "z.json", "--aut", "z-inversion.json"];
    let run = |g: &str, h: &str| stdout(&raag(&[&args[..], &[g, h]].concat()));
    assert_eq!(run("a", "a^-1"), "YES\n");
    assert_eq!(run("; t", "a ; t^1"), "NO\n");
    assert_eq!(run("; t", "a a ; t"), "YES\n");
    assert_eq!(run("a", "a ; t"), "NO\n");
}

#[test]
fn growth_table() {
    let o = raag(&["growth", "--graph", "free2.json", "--max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0,1\n1,4\n2,8\n");
    assert!(stderr(&o).starts_with("# conjugacy growth"));

    let o = raag(&[
        "growth",
        "--graph",
        "z.json",
        "--max",
        "3",
        "--ext",
        "--aut",
        "z-inversion.json",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["answer"][0], 1);
    assert_eq!(v["answer"][1], 2);

    let dir = tempfile::tempdir().unwrap();
    let plot = dir.path().join("z2.dat");
    let o = raag(&[
        "growth",
        "--graph",
        "z2.json",
        "--max",
        "3",
        "--gnuplot",
        plot.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "0,1\n1,4\n2,8\n3,12\n");
    assert!(std::fs::read_to_string(plot).unwrap().ends_with("3 12\n"));
}

#[test]
fn errors_and_exit_codes() {
    let o = raag(&["normalize", "--graph", "example4.json", "a1 a4 a1^-1 bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"bogus\""));
    assert!(stderr(&o).contains("byte 12"));
    let o = raag(&["cp", "--graph", "missing.json", "a1", "a1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = raag(&[
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-swap.json",
        "--budget",
        "2",
        "a1 a2 a3 a4",
        "a3 a4 a1 a2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = raag(&[
        "growth",
        "--graph",
        "free2.json",
        "--max",
        "6",
        "--budget",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = raag(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "tcp",
        "--graph",
        "example4.json",
        "--aut",
        "example4-swap.json",
        "--json",
        "--certify",
        "a1 a2 a3",
        "a3 a4 a1",
    ];
    let first = raag(&args);
    for _ in 0..3 {
        assert_eq!(raag(&args).stdout, first.stdout);
    }
}
