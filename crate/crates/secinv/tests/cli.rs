//! End-to-end tests of the command-line interface: output shapes and
//! exit codes.

use std::io::Write;
use std::process::Command;

fn secinv() -> Command {
    Command::new(env!("CARGO_BIN_EXE_secinv"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = secinv().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn list_shows_all_examples() {
    let (code, stdout, _) = run(&["list"]);
    assert_eq!(code, 0);
    for i in 1..=9 {
        assert!(stdout.contains(&format!("{i}. ")), "example {i} listed");
    }
    assert!(stdout.contains("[matrices only]"));
    assert!(stdout.contains("[stretch]"));
}

#[test]
fn molien_example_1() {
    let (code, stdout, _) = run(&["molien", "--example", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("group order: 2"));
    assert!(stdout.contains("1, 0, 15, 0, 15, 0, 1"));
    assert!(stdout.contains("total secondary invariants: 32"));
}

#[test]
fn secondary_text_report() {
    let (code, stdout, _) = run(&["secondary", "--example", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total: 12 secondary invariants (max degree 9)"));
    assert!(stdout.contains("4 irreducible (max degree 3)"));
}

#[test]
fn secondary_json_schema() {
    let (code, stdout, _) = run(&["secondary", "--example", "2", "--out", "json"]);
    assert_eq!(code, 0);
    let mut meta = 0;
    let mut totals = 0;
    let mut invariants = 0;
    for line in stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("each line is JSON");
        match v["record"].as_str().unwrap() {
            "meta" => {
                meta += 1;
                assert_eq!(v["schema"], 1);
                assert_eq!(v["group_order"], 6);
            }
            "totals" => {
                totals += 1;
                assert_eq!(v["secondaries"], 12);
                assert_eq!(v["irreducibles"], 4);
            }
            "invariant" => invariants += 1,
            "degree" => {}
            other => panic!("unknown record kind {other}"),
        }
    }
    assert_eq!(meta, 1);
    assert_eq!(totals, 1);
    assert_eq!(invariants, 12);
}

#[test]
fn verify_problem_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("secinv_cli_swap.prob");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(
        f,
        "variables: x, y\norder: degrevlex\ngenerators:\n0, 1; 1, 0\nprimaries:\nx + y\nx * y"
    )
    .unwrap();
    let (code, stdout, _) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("order 2"));
    assert!(stdout.contains("valid homogeneous system of parameters"));
    let (code, stdout, _) = run(&["secondary", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total: 1 secondary invariants"));
}

#[test]
fn exit_code_2_on_parse_errors() {
    let dir = std::env::temp_dir();
    let path = dir.join("secinv_cli_bad.prob");
    std::fs::write(&path, "variables x, y\n").unwrap();
    let (code, _, stderr) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2, "stderr: {stderr}");

    let (code, _, _) = run(&["verify", "/nonexistent/file.prob"]);
    assert_eq!(code, 2);

    let (code, _, _) = run(&["secondary", "--example", "99"]);
    assert_eq!(code, 2);
}

#[test]
fn exit_code_3_on_validation_errors() {
    // example 9 ships matrices only
    let (code, _, stderr) = run(&["secondary", "--example", "9"]);
    assert_eq!(code, 3, "stderr: {stderr}");
    assert!(stderr.contains("never published"));
    let (code, _, _) = run(&["bench", "--example", "9"]);
    assert_eq!(code, 3);

    // inconsistent primaries: not invariant
    let dir = std::env::temp_dir();
    let path = dir.join("secinv_cli_badprim.prob");
    std::fs::write(
        &path,
        "variables: x, y\ngenerators:\n0, 1; 1, 0\nprimaries:\nx\ny^2",
    )
    .unwrap();
    let (code, _, _) = run(&["secondary", path.to_str().unwrap()]);
    assert_eq!(code, 3);
}

#[test]
fn exit_code_4_on_degree_cap() {
    let (code, _, stderr) = run(&["secondary", "--example", "2", "--max-degree", "3"]);
    assert_eq!(code, 4, "stderr: {stderr}");
    assert!(stderr.contains("degree cap"));
}

#[test]
fn bench_reports_published_counts() {
    let (code, stdout, stderr) = run(&["bench", "--example", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total: 12 secondary invariants"));
    assert!(stderr.contains("published counts: 12 secondaries"));
}

#[test]
fn molien_without_primaries_uses_max_degree() {
    let (code, stdout, _) = run(&["molien", "--example", "9", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("group order: 120"));
    assert!(stdout.contains("molien coefficients a_0..a_4"));
}
