use std::fs;
use std::process::{Command, Output};

fn paley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paley")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn srg_of_p13() {
    let out = paley(&["srg", "--p", "13", "--e", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "v=13 k=6 lambda=2 mu=3\n");
}

#[test]
fn two_squares_of_13() {
    let out = paley(&["two-squares", "13"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "jacobsthal a=3 b=-2\ngauss a=-3 b=-2\n13 = 2^2 + 3^2\n");
    assert_eq!(paley(&["two-squares", "7"]).status.code(), Some(2));
}

#[test]
fn field_info_is_stable() {
    let a = paley(&["field", "info", "--p", "3", "--e", "2"]);
    let b = paley(&["field", "info", "--p", "3", "--e", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn coverage_reports_its_exceptions() {
    let out = paley(&["verify", "coverage"]);
    assert_eq!(paley(&["verify", "table1"]).stdout, out.stdout);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("FAIL"));
    assert!(text.contains("92, 116, 156, 172, 184, 188"));
}

#[test]
fn verify_commands_pass() {
    for args in [
        &["verify", "carlitz", "--p", "5", "--e", "2"][..],
        &["verify", "paley-group", "--q", "13"],
        &["verify", "theorem41", "--q", "9"],
        &["verify", "mcconnel", "--p", "13", "--d", "3"],
        &["verify", "all", "--only", "residue_sums"],
    ] {
        let out = paley(args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).lines().any(|l| l.contains("PASS")), "{args:?}");
        assert!(!stdout(&out).contains("FAIL"), "{args:?}");
    }
}

#[test]
fn automorphisms_of_a_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.txt");
    fs::write(&path, "0\n").unwrap();
    let out = paley(&["aut", "graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "order=1\n");
}

#[test]
fn built_graphs_feed_back_into_aut() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p13.txt");
    let out = paley(&["build", "paley", "--p", "13", "--out", graph.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let aut = stdout(&paley(&["aut", "graph", graph.to_str().unwrap()]));
    assert!(aut.starts_with("order=78\n"));

    let tournament = dir.path().join("t7.txt");
    paley(&["build", "tournament", "--p", "7", "--format", "matrix", "--out", tournament.to_str().unwrap()]);
    let aut = stdout(&paley(&["aut", "tournament", tournament.to_str().unwrap()]));
    assert!(aut.starts_with("order=21\n"));
}

#[test]
fn designs_and_matrices_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let design = dir.path().join("qr7.txt");
    assert!(paley(&["design", "build", "qr", "--q", "7", "--out", design.to_str().unwrap()]).status.success());
    assert!(stdout(&paley(&["aut", "design", design.to_str().unwrap()])).starts_with("order=168\n"));

    let matrix = dir.path().join("h12.txt");
    assert!(paley(&["hadamard", "build", "paley1", "--q", "11", "--out", matrix.to_str().unwrap()]).status.success());
    let out = paley(&["hadamard", "check", matrix.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "PASS hadamard order=12\n");

    let text = fs::read_to_string(&matrix).unwrap();
    let broken = text.replacen('+', "-", 1);
    fs::write(&matrix, broken).unwrap();
    let out = paley(&["hadamard", "check", matrix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL"));
}

#[test]
fn build_output_is_deterministic() {
    let args = ["build", "genpaley", "--p", "3", "--e", "2", "--m", "4", "--format", "dot"];
    let (a, b) = (paley(&args), paley(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("graph {"));
}

#[test]
fn errors_and_usage_exit_with_two() {
    assert_eq!(paley(&["srg", "--p", "7"]).status.code(), Some(2));
    assert_eq!(paley(&["build", "genpaley", "--p", "13"]).status.code(), Some(2));
    assert_eq!(paley(&["aut", "graph", "/nonexistent/graph.txt"]).status.code(), Some(2));
    let out = paley(&["srg", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}
