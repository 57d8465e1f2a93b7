use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_golodcheck"))
}

fn write_spec(dir: &Path, name: &str, m: usize, n: usize, t: usize, minors: &[(&[usize], &[usize])]) -> PathBuf {
    let minors: Vec<String> =
        minors.iter().map(|(r, c)| format!(r#"{{"rows": {r:?}, "cols": {c:?}}}"#)).collect();
    let body = format!(r#"{{"matrix": {{"rows": {m}, "cols": {n}}}, "t": {t}, "minors": [{}]}}"#, minors.join(", "));
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn classify_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let single = write_spec(dir.path(), "single.json", 2, 2, 2, &[(&[1, 2], &[1, 2])]);
    let o = run(&["classify", single.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Block 2x2 rows=[1,2] cols=[1,2]");

    let two = write_spec(dir.path(), "two.json", 2, 3, 2, &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 3])]);
    let o = run(&["classify", two.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "NotBlock");

    let dup = write_spec(dir.path(), "dup.json", 2, 3, 2, &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 2])]);
    let o = run(&["classify", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("duplicate minor at index 1"), "{}", stderr(&o));
}

#[test]
fn malformed_input_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_spec(dir.path(), "bad.json", 2, 3, 3, &[(&[1, 2], &[1, 2])]);
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("t:"), "{}", stderr(&o));

    let o = run(&["classify", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["--max-internal-degree", "1", "classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_full_block_is_positive() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "full.json",
        2,
        3,
        2,
        &[(&[1, 2], &[1, 2]), (&[1, 2], &[1, 3]), (&[1, 2], &[2, 3])],
    );
    let out = dir.path().join("report.json");
    let o = run(&["analyze", spec.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("linear:  true"));
    assert!(text.contains("product: trivial"));
    assert!(text.contains("ConsistentUpTo(8)"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report["meta"]["seed"], 0);
    assert_eq!(report["conditions"]["golod"]["verdict"], "consistent-up-to");
}

#[test]
fn analyze_disjoint_pair_reports_gap() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "pair.json", 2, 4, 2, &[(&[1, 2], &[1, 2]), (&[1, 2], &[3, 4])]);
    let out = dir.path().join("report.json");
    let o = run(&["--no-fast-paths", "analyze", spec.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let c = &report["conditions"];
    assert_eq!(c["shape"], "NotBlock");
    assert_eq!(c["product"], "nontrivial");
    assert_eq!(c["golod"]["verdict"], "not-golod");
    assert_eq!(c["golod"]["collapsed_gap"], serde_json::json!([3, 1]));
    assert!(report["witness"].is_object());
}

#[test]
fn analyze_maximal_minors_skips_shape() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "r45.json",
        3,
        4,
        3,
        &[(&[1, 2, 3], &[1, 2, 3]), (&[1, 2, 3], &[1, 2, 4]), (&[1, 2, 3], &[1, 3, 4])],
    );
    let o = run(&["--no-fast-paths", "analyze", spec.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("notice:"), "{text}");
    assert!(text.contains("shape:   skipped"));
    assert!(text.contains("linear:  false"));
    assert!(text.contains("ConsistentUpTo(8)"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let o = run(&["verify", "theorem", "--rows", "2", "--cols", "4", "--jobs", "1", "--output", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["verify", "theorem", "--rows", "2", "--cols", "4", "--jobs", "3", "--output", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn census_cap_is_enforced() {
    let o = run(&["verify", "theorem", "--rows", "4", "--cols", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"), "{}", stderr(&o));
}

#[test]
fn remark45_and_restriction_commands() {
    let o = run(&["verify", "remark45"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("totals [1, 3, 3, 1]"));
    let o = run(&["verify", "restriction", "--rows", "2", "--cols", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("0 violations"));
}
