//! Simulation harness behind `simctl`: run configurations, transcript
//! inspection, verification suites and the interactive duel.

pub mod config;
pub mod duel;
pub mod verify;

use std::fmt::Write as _;

pub use config::{default_probes, RunConfig, WindowSpec};
pub use duel::{duel, parse_command, Command};
pub use verify::{run_suite, Suite, SuiteViolation, VerifyReport};

use crate::game::{validate, Transcript, ValidationReport};

/// Per-probe coverage, one line each.
pub fn coverage_summary(t: &Transcript) -> String {
    let mut s = String::new();
    for (p, hits) in t.probe_coverage() {
        let _ = writeln!(s, "probe ({p}): covered {} times at {hits:?}", hits.len());
    }
    s
}

/// Header, inning log and validation result of a transcript.
pub fn inspect(t: &Transcript) -> (String, ValidationReport) {
    let h = &t.header;
    let mut s = String::new();
    let _ = writeln!(s, "{} on {}", h.game, h.group);
    let _ = writeln!(s, "window {:?}, seed {}, cap {}", h.window.indices(), h.seed, h.inning_cap);
    let _ = writeln!(s, "ONE: {}  TWO: {}", h.one, h.two);
    let _ = writeln!(s, "{} innings, {}", h.innings, h.outcome);
    for r in &t.innings {
        let fallback = if r.instrumentation.fallback { " (fallback)" } else { "" };
        let _ = writeln!(s, "  {:>4}  ONE {}  TWO {}{fallback}", r.inning, r.one_move, r.two_move);
    }
    s.push_str(&coverage_summary(t));
    let report = validate(t);
    let _ = writeln!(s, "{report}");
    (s, report)
}
