use std::process::Command;

use syllogistic::cli::{parse_json, render_json};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_syllogistic"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn solve_reports_moods_and_bounds() {
    let (code, out, _) = run(&["solve", "2", "e", "i"]);
    assert_eq!(code, 0);
    assert!(out.contains("Classical (AsC): o"), "{out}");
    assert!(out.contains("eio-2 (Festino)"), "{out}");
    assert!(out.contains("Complementary (As~C): (none)"), "{out}");
    assert!(out.contains("α2 = 1/100 (≈0.01)"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(" α") && l.contains(" β")).count(), 4, "{out}");

    let (_, out, _) = run(&["solve", "1", "a", "a"]);
    assert!(out.contains("aaa-1 (Barbara)"), "{out}");
    let (_, out, _) = run(&["solve", "1", "i", "e"]);
    assert!(out.contains("Classical (AsC): (none)") && out.contains("iei-~1"), "{out}");
}

#[test]
fn solve_machine_formats() {
    let (code, out, _) = run(&["--format", "csv", "solve", "1", "e", "a+"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "figure,kind,major,minor,deductions\n1,classical,e,á,\"é;e;o\"\n1,complementary,e,á,\"\"\n"
    );
    let (_, out, _) = run(&["solve", "2", "e", "i", "--format", "json"]);
    let records = parse_json(&out).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].classical, vec!["o"]);
    assert_eq!(records[0].alpha, vec!["0", "1/100", "0", "0"]);
}

#[test]
fn usage_errors() {
    for args in [
        &["solve", "5", "a", "a"][..],
        &["solve", "1", "q", "a"],
        &["solve", "1", "a"],
        &["--epsilon", "0", "enumerate"],
        &["--format", "xml", "enumerate"],
        &["deduce", "-p", "A?B", "-q", "A?B"],
        &["deduce", "-p", "AaB", "-q", "AaB"],
        &["nonsense"],
        &[],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("selftest"));
}

#[test]
fn deduce_general_premises() {
    let (code, out, _) = run(&["deduce", "-p", "BeA", "-p", "BiC", "-q", "A?C"]);
    assert_eq!(code, 0);
    assert!(out.contains("Classical: AoC"), "{out}");

    let (code, out, _) = run(&["deduce", "-p", "AoA", "-q", "A?B"]);
    assert_eq!(code, 2);
    assert!(out.contains("INFEASIBLE"), "{out}");

    let (code, out, _) = run(&["deduce", "-q", "A?C"]);
    assert_eq!(code, 0);
    assert!(out.contains("Classical: (none)") && out.contains("Complementary: (none)"), "{out}");

    // four terms, negated literals, declared term order
    let (code, out, _) = run(&[
        "deduce", "-p", "AaB", "-p", "BaC", "-p", "Ca+D", "-q", "A?D", "--terms", "D,C,B,A",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("Classical: AáD, AaD, AiD"), "{out}");
    let (_, out, _) = run(&["deduce", "-p", "AeB", "-q", "~A?B", "--format", "csv"]);
    assert!(out.contains("classical,~A?B,true,\"a\""), "{out}");
    let (code, out, _) = run(&["deduce", "-p", "AoA", "-q", "A?B", "--format", "json"]);
    assert_eq!(code, 2);
    assert!(out.contains("\"feasible\": false"), "{out}");
}

#[test]
fn enumerate_text_grid() {
    let (code, out, _) = run(&["enumerate"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("Figure ").count(), 8);
    let block = out
        .split("\n\n")
        .find(|b| b.starts_with("Figure 1 (a)"))
        .unwrap();
    let row = block.lines().find(|l| l.starts_with("| e ")).unwrap();
    let cells: Vec<&str> = row.split('|').map(str::trim).collect();
    // cells[0] is empty, then the row label, then columns a, á, ...
    assert_eq!(cells[1], "e");
    assert_eq!(cells[3], "é, e, o");
}

#[test]
fn enumerate_csv_and_json() {
    let (_, csv, _) = run(&["--format", "csv", "enumerate"]);
    assert_eq!(csv.lines().count(), 1 + 392);
    assert!(csv.lines().any(|l| l == "1,classical,e,á,\"é;e;o\""));

    let (code, json, _) = run(&["--format", "json", "enumerate"]);
    assert_eq!(code, 0);
    let records = parse_json(&json).unwrap();
    assert_eq!(records.len(), 196);
    assert!(records.iter().all(|r| r.feasible && r.alpha.len() == 4 && r.beta.len() == 4));
    assert_eq!(render_json(&records), json);
}

#[test]
fn jobs_do_not_change_output() {
    let (_, one, _) = run(&["--jobs", "1", "--format", "csv", "enumerate"]);
    let (_, four, _) = run(&["--jobs", "4", "--format", "csv", "enumerate"]);
    let (_, auto, _) = run(&["--jobs", "auto", "--format", "csv", "enumerate"]);
    assert_eq!(one, four);
    assert_eq!(one, auto);
}

#[test]
fn explain_shows_derivation() {
    let (code, out, _) = run(&["explain", "2", "e", "i"]);
    assert_eq!(code, 0);
    for needle in [
        "x1 + x2 = 0",
        "x1 + x5 >= 1/100",
        "α2 = minimize x5 + x7 [P(C,~A)] = 1/100",
        "[x] α₂ > 0 ⇒ AoC",
        "[ ] α₁ > 0 ⇒ AiC",
    ] {
        assert!(out.contains(needle), "missing `{needle}` in\n{out}");
    }
    let (_, out, _) = run(&["explain", "1", "a", "a"]);
    assert!(out.contains("β2 = maximize x5 + x7 [P(C,~A)] = 0"), "{out}");
    assert!(out.contains("[x] β₂ = 0 ⇒ AaC"), "{out}");
}

#[test]
fn selftest_passes_and_flags_seeded_errors() {
    let (code, out, _) = run(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("196/196 problems match; ε-stability: 0 cells changed"), "{out}");

    let (code, out, _) = run(&["selftest", "--epsilon", "1/10"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("problems match"), "{out}");

    let (_, csv, _) = run(&["--format", "csv", "enumerate"]);
    let seeded = csv.replace("3,complementary,u,e,\"i;o;u\"", "3,complementary,u,e,\"i;o\"");
    assert_ne!(seeded, csv);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.csv");
    std::fs::write(&path, seeded).unwrap();
    let (code, out, _) = run(&["selftest", "--golden", path.to_str().unwrap()]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("(3,u,e) complementary"), "{out}");
    assert!(out.contains("195/196 problems match"), "{out}");

    std::fs::write(&path, "figure,kind,major,minor,deductions\n").unwrap();
    let (code, _, err) = run(&["selftest", "--golden", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
}
