use std::process::{Command, Output};

fn witt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_witt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn non_prime_is_a_usage_error() {
    let o = witt(&["verify", "-p", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("9 is not prime"));
}

#[test]
fn small_and_large_primes_are_rejected() {
    assert_eq!(witt(&["selftest", "-p", "3"]).status.code(), Some(2));
    assert_eq!(witt(&["selftest", "-p", "32771"]).status.code(), Some(2));
    assert_eq!(witt(&["selftest"]).status.code(), Some(2));
    assert_eq!(witt(&["verify", "-p", "5", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = witt(&["selftest", "-p", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("selftest p = 11: PASS"));
}

#[test]
fn selftest_timings_only_on_request() {
    let plain = stdout(&witt(&["selftest", "-p", "13", "--format", "json"]));
    assert!(!plain.contains("\"timing\""));
    let timed = stdout(&witt(&["selftest", "-p", "13", "--format", "json", "--timings"]));
    assert!(timed.contains("\"timing\""));
    assert!(timed.contains("\"algebra\""));
}

#[test]
fn series_examples() {
    let o = witt(&["series", "-p", "7", "-m", "AsPlus"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("AsPlus: 21 ⊃ 14 ⊃ 7 ⊃ 0; factors L⁻(2),L⁻(4),L⁻(6)"));

    let o = witt(&["series", "-p", "5", "-m", "A1"]);
    assert!(stdout(&o).contains("A1: 5 ⊃ 1 ⊃ 0; factors L⁻(1),L⁻(0) = L(4),L(0)"));

    let o = witt(&["series", "-p", "5", "-m", "L:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L:3: 5 ⊃ 0; factors L⁻(4) = L(3)"));

    assert_eq!(witt(&["series", "-p", "5", "-m", "B7"]).status.code(), Some(2));
    assert_eq!(witt(&["series", "-p", "5", "-m", "Z:5"]).status.code(), Some(2));
}

#[test]
fn verify_reports_the_antisymmetric_failures() {
    let o = witt(&["verify", "-p", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("\"status\": \"fail\""));
    let failing: Vec<&str> = s
        .split("\"name\": \"")
        .skip(1)
        .filter(|chunk| {
            let status = chunk.split("\"status\": \"").nth(1).unwrap_or("");
            status.starts_with("fail")
        })
        .map(|chunk| chunk.split('"').next().unwrap())
        .collect();
    assert_eq!(
        failing,
        vec![
            "chains.graded_dims",
            "theorem.antisymmetric_chain",
            "theorem.antisymmetric_socle"
        ]
    );
}

#[test]
fn json_is_deterministic() {
    let a = witt(&["verify", "-p", "5", "--format", "json"]);
    let b = witt(&["verify", "-p", "5", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn markdown_has_the_weight_table() {
    let s = stdout(&witt(&["verify", "-p", "5", "--format", "md"]));
    assert!(s.contains("## Weight space dimensions"));
    assert!(s.contains("| A_a+ | 2 | 1 | 1 | 1 | 1 |"));
    assert!(s.contains("| A_s | 3 | 3 | 3 | 3 | 3 |"));
}

#[test]
fn batch_is_ordered_and_written_to_file() {
    let path = std::env::temp_dir().join(format!("witt-batch-{}.json", std::process::id()));
    let o = witt(&[
        "selftest",
        "--primes",
        "13,5,7",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&o));
    let primes: Vec<usize> = ["\"prime\": 13", "\"prime\": 5", "\"prime\": 7"]
        .iter()
        .map(|k| written.find(k).unwrap())
        .collect();
    assert!(primes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn batch_keeps_going_after_a_failure() {
    let o = witt(&["verify", "--primes", "5,7"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("verify p = 5: FAIL"));
    assert!(s.contains("verify p = 7: FAIL"));
}
