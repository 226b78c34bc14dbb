use std::process::{Command, Output};

fn corrpop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corrpop"))
        .args(args)
        .env_remove("CORRPOP_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pop_prints_population() {
    let out = corrpop(&["pop", "--corr", "0001", "--sigma", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "82\n");
    for method in ["rec1", "rec2", "nfc", "brute"] {
        let out = corrpop(&["pop", "--corr", "01010", "--method", method]);
        assert_eq!(stdout(&out), "8\n", "{method}");
    }
}

#[test]
fn invalid_correlation_is_a_validation_error() {
    let out = corrpop(&["pop", "--corr", "0110", "--sigma", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a valid correlation"));
    assert_eq!(corrpop(&["pop", "--corr", "01x"]).status.code(), Some(3));
    assert_eq!(corrpop(&["realize", "1011", "--auto"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(corrpop(&["pop", "--corr", "01", "--sigma", "1"]).status.code(), Some(2));
    assert_eq!(corrpop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        corrpop(&["pop", "--corr", "01", "--method", "magic"]).status.code(),
        Some(2)
    );
    assert_eq!(corrpop(&["gamma", "3", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_four() {
    let out = corrpop(&["--budget", "100", "pop", "--corr", "0001", "--method", "brute"]);
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_corrpop"))
        .args(["verify", "6"])
        .env("CORRPOP_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(corrpop(&["gamma", "40"]).status.code(), Some(4));
}

#[test]
fn verify_reports_agreement() {
    let out = corrpop(&["verify", "4", "--sigma", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("11 correlations checked"));
    assert!(text.trim_end().ends_with("all methods agree, sum = 256"));
    let json: serde_json::Value =
        serde_json::from_slice(&corrpop(&["--format", "json", "verify", "5"]).stdout).unwrap();
    assert_eq!(json["sum"], "1024");
    assert!(json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "p(01010) = 8" && c["passed"] == true));
}

#[test]
fn pop_table_reproduces_n4_golden_values() {
    let out = corrpop(&["pop-table", "4", "--sigma", "2,3,4,5", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "correlation,sigma=2,sigma=3,sigma=4,sigma=5");
    assert_eq!(lines[1], "0000,74,3678,45132,297020");
    assert_eq!(lines[11], "1111,2,3,4,5");
    let json: serde_json::Value =
        serde_json::from_slice(&corrpop(&["--format", "json", "pop-table", "4"]).stdout).unwrap();
    assert_eq!(json["rows"][1]["correlation"], "0001");
    assert_eq!(json["rows"][1]["counts"][0], "82");
}

#[test]
fn set_listings() {
    assert_eq!(stdout(&corrpop(&["gamma", "4"])), "1000\n1001\n1010\n1111\n");
    assert_eq!(stdout(&corrpop(&["delta", "4"])).lines().count(), 11);
    assert!(stdout(&corrpop(&["card", "4"])).ends_with("4,4,11\n"));
}

#[test]
fn lattice_outputs() {
    let dir = std::env::temp_dir().join(format!("corrpop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("delta4.dot");
    let out = corrpop(&["lattice", "4", "--check-jd", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Jordan-Dedekind fails: chains of length 3 and 4"));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph lattice_4 {"));
    assert_eq!(dot, stdout(&corrpop(&["--format", "dot", "lattice", "4"])));
    assert!(stdout(&corrpop(&["lattice", "3", "--check-jd"])).contains("Jordan-Dedekind holds"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn border_statistics() {
    assert_eq!(stdout(&corrpop(&["borders", "4", "--range", "0:3"])), "240\n");
    assert_eq!(stdout(&corrpop(&["borders", "4", "--range", "1:1"])), "82\n");
    assert_eq!(corrpop(&["borders", "4", "--range", "0:4"]).status.code(), Some(3));
    assert!(stdout(&corrpop(&["expect", "4"])).starts_with("E(X) = 35/32"));
    assert!(stdout(&corrpop(&["expect", "4", "--include-equal-pairs"])).starts_with("E(X) = 43/32"));
}

#[test]
fn ratio_probe() {
    let text = stdout(&corrpop(&["ratio", "--suffix", "1", "--sigma", "2", "--n-max", "10"]));
    assert!(text.contains("bounds: [0.300, 0.601)") || text.contains("bounds: [0.300, 0.600)"));
    assert!(!text.contains("outside"));
    assert_eq!(text.lines().filter(|l| l.starts_with("n=")).count(), 10);
    assert_eq!(corrpop(&["ratio", "--suffix", "1011"]).status.code(), Some(3));
}

#[test]
fn realize_prints_witnesses() {
    assert_eq!(stdout(&corrpop(&["realize", "000101"])), "bbbaba abaaaa\n");
    assert_eq!(stdout(&corrpop(&["realize", "1010", "--auto"])), "abab\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "pop-table", "5", "--sigma", "2,3"][..],
        &["--format", "json", "lattice", "5", "--check-jd"],
        &["--threads", "3", "--format", "json", "borders", "6", "--sigma", "3"],
        &["--format", "csv", "ratio", "--suffix", "empty", "--n-max", "8"],
    ] {
        assert_eq!(corrpop(args).stdout, corrpop(args).stdout);
    }
}
