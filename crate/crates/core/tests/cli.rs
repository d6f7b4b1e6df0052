use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use rothberger::game::{validate, Transcript};
use rothberger::sim::inspect;
use rothberger::strategy::check_claims_all;

fn simctl() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simctl"))
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn run(args: &[&str]) -> Output {
    simctl().args(args).output().expect("simctl runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn simulate(name: &str, dir: &Path) -> (Output, PathBuf) {
    let out = dir.join(format!("{name}.jsonl"));
    let o = run(&[
        "simulate",
        "--config",
        config(&format!("{name}.toml")).to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    (o, out)
}

#[test]
fn integer_nbd_scenario_covers_every_probe_twice() {
    let dir = tempfile::tempdir().unwrap();
    let (o, path) = simulate("nbd_integers", dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let t = Transcript::load(&path).unwrap();
    assert_eq!(t.innings.len(), 64);
    assert_eq!(t.header.probes.len(), 4);
    for report in check_claims_all(&t, &t.header.probes) {
        assert!(report.is_valid(), "{:?}", report.violations);
        assert!(report.promised_at_least(2), "{report:?}");
    }
    assert_eq!(stdout(&o).matches("probe (").count(), 4);
}

#[test]
fn z2_pgroup_scenario_validates_and_covers() {
    let dir = tempfile::tempdir().unwrap();
    let (o, path) = simulate("pgroup_z2", dir.path());
    assert_eq!(o.status.code(), Some(0));
    let t = Transcript::load(&path).unwrap();
    assert!(validate(&t).is_valid());
    assert!(t.probe_coverage().iter().all(|(_, hits)| !hits.is_empty()));
}

#[test]
fn every_shipped_config_simulates_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["nbd_integers", "pgroup_z2", "sigma", "counter", "countable"] {
        let (o, _) = simulate(name, dir.path());
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn simulation_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (_, a) = simulate("sigma", dir.path());
    let first = std::fs::read(&a).unwrap();
    let (_, b) = simulate("sigma", dir.path());
    assert_eq!(first, std::fs::read(&b).unwrap());

    let t = Transcript::load(&a).unwrap();
    let (_, report) = inspect(&t);
    let o = run(&["inspect", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(&format!("{report}\n")));
    assert_eq!(validate(&Transcript::from_jsonl(&t.to_jsonl()).unwrap()), report);
}

#[test]
fn overrides_apply() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.jsonl");
    let o = run(&[
        "simulate",
        "--config",
        config("nbd_integers.toml").to_str().unwrap(),
        "--innings",
        "5",
        "--seed",
        "99",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t = Transcript::load(&out).unwrap();
    assert_eq!((t.innings.len(), t.header.seed), (5, 99));
}

#[test]
fn zero_innings_exits_2() {
    let o = run(&["simulate", "--config", config("nbd_integers.toml").to_str().unwrap(), "--innings", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("innings"));
}

#[test]
fn broken_configs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "game = \"nbd-covers\"\ninnings = 4\n").unwrap();
    assert_eq!(run(&["simulate", "--config", path.to_str().unwrap()]).status.code(), Some(2));
    let missing = dir.path().join("missing.toml");
    assert_eq!(run(&["simulate", "--config", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn tampered_transcript_exits_1_and_garbage_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let (_, path) = simulate("nbd_integers", dir.path());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut record: serde_json::Value = serde_json::from_str(&lines[3]).unwrap();
    record["inning"] = serde_json::json!(7);
    lines[3] = record.to_string();
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let o = run(&["inspect", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violations"));

    std::fs::write(&path, "not json\n").unwrap();
    assert_eq!(run(&["inspect", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify", "schedule", "--seed", "3", "--scale", "0.1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "schedule");
    assert!(report["cases"].as_u64().unwrap() > 0);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);

    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "selector", "--scale", "0"]).status.code(), Some(2));
}

#[test]
fn every_suite_runs_clean_at_small_scale() {
    for suite in [
        "group-axioms",
        "lebesgue",
        "claims",
        "open-covers",
        "schedule",
        "counterplay",
        "selector",
        "window-invariance",
    ] {
        let o = run(&["verify", suite, "--scale", "0.05"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 violations"), "{suite}");
    }
}

#[test]
fn duel_reprompts_and_writes_a_valid_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("duel.jsonl");
    let mut child = simctl()
        .args(["duel", "--config", config("duel.toml").to_str().unwrap(), "--out", out.to_str().unwrap()])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0\n0,17\n{0}\nquit\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("illegal move"), "{text}");
    assert!(text.contains("outside the window"), "{text}");
    let t = Transcript::load(&out).unwrap();
    assert_eq!(t.innings.len(), 2);
    assert!(validate(&t).is_valid());
}
