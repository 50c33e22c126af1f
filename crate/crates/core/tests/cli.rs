use std::fs;
use std::process::{Command, Output};

fn pseudochar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudochar"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn eval_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.txt");
    let s = dir.path().join("s.txt");
    fs::write(&m, "2\n1 2\n3 4\n").unwrap();
    fs::write(&s, "2\n0 1\n1 0\n").unwrap();
    let (m, s) = (m.to_str().unwrap(), s.to_str().unwrap());

    let o = pseudochar(&["eval", "det", "--matrix", m, "--dim", "2"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "-2"));
    let o = pseudochar(&["eval", "charpoly", "--matrix", m]);
    assert_eq!(stdout(&o), "t^2 - 5*t - 2");
    let o = pseudochar(&["eval", "fn", "--matrix", m, "--matrix", s]);
    assert_eq!(stdout(&o), "-5");
    let o = pseudochar(&["eval", "det", "--matrix", m, "--ring", "mod:7"]);
    assert_eq!(stdout(&o), "5");
}

#[test]
fn exit_codes() {
    let o = pseudochar(&["check", "degree-d", "--dim", "3", "--ring", "mod:6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3! not invertible mod 6"));
    assert_eq!(
        pseudochar(&["check", "no-such-suite"]).status.code(),
        Some(2)
    );
    assert_eq!(pseudochar(&["eval", "det"]).status.code(), Some(2));
    let o = pseudochar(&["check", "charpoly", "--dim", "2", "--trials", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS charpoly"));
}

#[test]
fn json_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = pseudochar(&[
        "check",
        "vanishing",
        "--dim",
        "2",
        "--trials",
        "2",
        "--quiet",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    let suite = &v["suites"][0];
    assert_eq!(suite["suite"], "vanishing");
    assert_eq!(suite["config"]["ring"], "rational");
    assert_eq!(suite["config"]["dim"], 2);
    let check = &suite["checks"][0];
    for key in [
        "check", "trial", "params", "inputs", "lhs", "rhs", "expect", "holds", "error", "passed",
    ] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert!(suite["counts"]["negative_controls"].as_u64().unwrap() >= 1);
}

#[test]
fn config_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("c.conf");
    fs::write(&conf, "# small run\nring = mod:7\ntrials = 2\n").unwrap();
    let o = pseudochar(&[
        "check",
        "units",
        "--config",
        conf.to_str().unwrap(),
        "--dim",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("PASS units             mod:7     n=3 d=3"),
        "{}",
        stdout(&o)
    );
}
