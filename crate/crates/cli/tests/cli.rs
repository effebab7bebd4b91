use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spiderlc"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spiderlc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn claw_file() -> String {
    write_tmp("claw.txt", "4 3\n0 1\n0 2\n0 3\n")
        .display()
        .to_string()
}

#[test]
fn indep_on_files() {
    let o = run(&["indep", &claw_file()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 + 4t + 3t^2 + t^3, SLC: yes"));
    let k3 = write_tmp("k3.json", r#"{"n": 3, "edges": [[0,1],[1,2],[0,2]]}"#);
    let o = run(&["indep", k3.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("1 + 3t,"));
    let bad = write_tmp("bad.txt", "3 1\n0 x\n");
    assert_eq!(
        run(&["indep", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["indep", "/nonexistent/graph"]).status.code(), Some(2));
}

#[test]
fn schur2_profiles() {
    let o = run(&["schur2", &claw_file()]);
    assert!(stdout(&o).starts_with("s(3,1) - s(2,2)\n"));
    let e2 = write_tmp("e2.txt", "2 0\n");
    assert!(stdout(&run(&["schur2", e2.to_str().unwrap()])).starts_with("s(2) + s(1,1)\n"));
    let p4 = write_tmp("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    assert!(stdout(&run(&["schur2", p4.to_str().unwrap()])).starts_with("2 s(2,2)\n"));
    let o = run(&["schur2", "spider", "1,1,1", "--alpha", "1,1,1,1"]);
    assert!(stdout(&o).starts_with("s(3,1) - s(2,2)"));
    assert_eq!(run(&["schur2", "spider 30,30,10"]).status.code(), Some(3));
    assert_eq!(
        run(&["schur2", "spider", "1,1,1", "--alpha", "1,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn y_equivalence_and_oracle() {
    let o = run(&["y", &claw_file(), "--oracle", "5"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(text.contains("LC <=> 2s-positive: consistent"));
    assert!(text.contains("oracle degree 5: agrees"));
    assert!(text.contains("2-s-positive: yes"));
    let o = run(&["y", "--poly", "1,10,3,1"]);
    assert!(stdout(&o).contains("negative entry: s(2,2): -1"));
    assert!(stdout(&o).contains("consistent"));
    let o = run(&["--format", "json", "y", "spider", "2,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["consistent"], true);
    assert_eq!(run(&["y", "--poly", "2,1"]).status.code(), Some(2));
}

#[test]
fn verify_instances() {
    let o = run(&["verify", "spider", "1,1,1", "--audit-phi"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("spider 1,1,1: PASS"));
    let row = text
        .lines()
        .find(|l| l.starts_with("1,1,1"))
        .expect("elimination row");
    let fields: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(fields[5], "1", "critical coefficient in {row}");
    let o = run(&["verify", "spider", "3,2,2,1", "--audit-phi"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--format", "json", "verify", "pineapple", "6", "3,2,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["instance"], "pineapple 6 3,2,2,1");
    assert_eq!(run(&["verify", "spider", "2,3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", &claw_file()]).status.code(), Some(2));
}

#[test]
fn scans() {
    let o = run(&["scan", "--trees", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("unimodal: 201/201"));
    let o = run(&["scan", "--clawfree", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x 2-s-positive: 264/264"));
    let o = run(&["scan", "--random", "9", "300", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("LC <=> 2s-positive: consistent in all cases"));
    assert_eq!(
        run(&["scan", "--trees", "5", "--clawfree", "5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_is_reproducible_across_workers() {
    let args = |w: &'static str| {
        [
            "--format",
            "json",
            "--workers",
            w,
            "--seed",
            "7",
            "scan",
            "--random",
            "8",
            "60",
        ]
    };
    let one = run(&args("1"));
    let four = run(&args("4"));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run(&args("1")).stdout, one.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["model"], "G(n, 1/2), n uniform in 1..=8, ChaCha8 seed 7");
    let a = run(&[
        "--format",
        "json",
        "--workers",
        "1",
        "verify",
        "spider",
        "3,2,1",
        "--audit-phi",
    ]);
    let b = run(&[
        "--format",
        "json",
        "--workers",
        "3",
        "verify",
        "spider",
        "3,2,1",
        "--audit-phi",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
