//! CLI surface: output formats, exit codes, file handling.

use std::io::Write;
use std::process::{Command, Output};

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_ksum")
}

fn fixture() -> String {
    format!(
        "{}/tests/data/n16_m6_s137.txt",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn run(args: &[&str]) -> Output {
    Command::new(exe()).args(args).output().expect("spawn ksum")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_instance(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

#[test]
fn solve_prints_one_based_solutions() {
    let out = run(&["solve", &fixture()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 2 4 14 15 16 = 137"), "{text}");
    for line in text.lines() {
        assert!(line.ends_with("= 137"));
        assert_eq!(line.split_whitespace().count(), 8);
    }
    let errs = stderr(&out);
    assert!(errs.contains("status: found"));
    assert!(errs.contains("entries_built: 560"));
    assert!(errs.contains("algorithm: mitm"));
    for key in ["probes:", "exclusions_tried:", "tasks_run:", "wall_ms:"] {
        assert!(errs.contains(key), "missing {key} in stats block");
    }
}

#[test]
fn zero_based_flag_shifts_output() {
    let out = run(&["solve", &fixture(), "--zero-based"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 1 3 13 14 15 = 137"));
}

#[test]
fn limit_caps_output_lines() {
    let out = run(&["solve", &fixture(), "--limit", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn all_algorithms_print_the_same_listing() {
    let mitm = run(&["solve", &fixture(), "--algorithm", "mitm"]);
    let enumerate = run(&["solve", &fixture(), "--algorithm", "enumerate"]);
    let partition = run(&["solve", &fixture(), "--algorithm", "partition"]);
    let pair = run(&[
        "solve",
        &fixture(),
        "--algorithm",
        "partition",
        "--partition-mode",
        "pair",
        "--k1",
        "3",
        "--k2",
        "3",
    ]);
    assert_eq!(stdout(&mitm), stdout(&enumerate));
    assert_eq!(stdout(&mitm), stdout(&partition));
    // pair mode only sees 3+3 splits across the two blocks
    assert!(!stdout(&pair).is_empty());
    assert!(stdout(&mitm).contains(&stdout(&pair).lines().next().unwrap().to_string()));
}

#[test]
fn infeasible_target_exits_one() {
    let file = temp_instance("16 6 178\n17 2 3 23 19 1 14 20 6 10 4 25 7 49 41 5\n");
    let out = run(&["solve", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("status: infeasible-by-range"));
    assert!(stderr(&out).contains("entries_built: 0"));
}

#[test]
fn no_solution_exits_one() {
    let file = temp_instance("4 2 6\n1 2 10 20\n");
    let out = run(&["solve", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("status: none"));
}

#[test]
fn parse_error_exits_two() {
    let file = temp_instance("3 2 7\n1 2 x\n");
    let out = run(&["solve", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column 5"));
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["solve", "/nonexistent/instance.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_cap_exits_two() {
    let out = run(&["solve", &fixture(), "--memory-cap-entries", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("capacity"));
}

#[test]
fn generate_is_deterministic_and_solvable() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.txt");
    let path_b = dir.path().join("b.txt");
    for path in [&path_a, &path_b] {
        let out = run(&[
            "generate",
            path.to_str().unwrap(),
            "--n",
            "12",
            "--m",
            "5",
            "--seed",
            "9",
            "--planted",
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b);
    assert!(String::from_utf8(a).unwrap().starts_with("# seed=9\n12 5 "));

    let solved = run(&[
        "solve",
        path_a.to_str().unwrap(),
        "--algorithm",
        "enumerate",
    ]);
    assert!(solved.status.success(), "planted instances are solvable");
}

#[test]
fn generate_seeds_produce_distinct_files() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for seed in ["1", "2"] {
        let path = dir.path().join(format!("s{seed}.txt"));
        let out = run(&[
            "generate",
            path.to_str().unwrap(),
            "--n",
            "10",
            "--m",
            "3",
            "--seed",
            seed,
            "--planted",
        ]);
        assert!(out.status.success());
        bodies.push(std::fs::read(path).unwrap());
    }
    assert_ne!(bodies[0], bodies[1]);
}

#[test]
fn bench_emits_exact_csv() {
    let out = run(&["bench", "--n", "16", "--m", "6", "--reps", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algorithm,n,m,k,entries_built,probes,wall_ms,solutions")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("enumerate,16,6,6,8008,"));
    assert!(rows[1].starts_with("mitm,16,6,3,560,"));
}

#[test]
fn verify_subcommand_passes() {
    let out = run(&[
        "verify",
        "--trials",
        "5",
        "--n-min",
        "4",
        "--n-max",
        "8",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("trials: 5"));
    assert!(text.contains("result: pass"));
}

#[test]
fn verify_guard_exits_two() {
    let out = run(&["verify", "--trials", "1", "--n-max", "40"]);
    assert_eq!(out.status.code(), Some(2));
}
