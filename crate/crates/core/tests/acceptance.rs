//! Acceptance suite: each criterion at its stated scale and tolerance as
//! its own test, so `cargo test` shows one pass/fail line per criterion.
//! With `--nocapture` each also prints cases, violations and wall time.
//!
//! ```text
//! cargo test --release --test acceptance -- --nocapture
//! ```

use std::sync::Mutex;
use std::time::Instant;

use rothberger::sim::verify::{
    counterplay, group_axioms, lebesgue_compact_suite, lebesgue_pgroup_suite, nbd_strategy, open_covers,
    schedule, selector, window_invariance, VerifyReport,
};

const SEED: u64 = 7;

struct Criterion {
    id: u32,
    name: &'static str,
    /// Seconds, when the criterion has a time limit.
    limit: Option<f64>,
    run: fn() -> VerifyReport,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "group and coset algebra, 10^4 cases per component kind",
            limit: Some(10.0),
            run: || group_axioms(SEED, 10_000),
        },
        Criterion {
            id: 2,
            name: "compact Lebesgue lemma, 10^3 covers, |W| <= 4, n <= 2",
            limit: Some(30.0),
            run: || lebesgue_compact_suite(SEED, 1_000),
        },
        Criterion {
            id: 3,
            name: "P-group Lebesgue lemma, 10^3 bounded covers x 200 probes",
            limit: None,
            run: || lebesgue_pgroup_suite(SEED, 1_000, 200),
        },
        Criterion {
            id: 4,
            name: "neighborhood-game strategy, 100 plays of 64 innings",
            limit: Some(60.0),
            run: || nbd_strategy(SEED, 100, 64),
        },
        Criterion {
            id: 5,
            name: "open-cover strategies, 100 plays of 48 innings",
            limit: None,
            run: || open_covers(SEED, 100, 48),
        },
        Criterion {
            id: 6,
            name: "counter-play against three strategy families, 64 innings",
            limit: None,
            run: || counterplay(SEED, 30, 64),
        },
        Criterion {
            id: 7,
            name: "countable-1 bookkeeping bound, r <= 8, m <= 4, 50 sequences",
            limit: None,
            run: || schedule(SEED, 50),
        },
        Criterion {
            id: 8,
            name: "window-extension invariance, 50 runs",
            limit: None,
            run: || window_invariance(SEED, 50),
        },
        Criterion {
            id: 9,
            name: "Rothberger selector, ranks <= 100",
            limit: None,
            run: || selector(SEED, 20),
        },
    ]
}

/// Criteria run one at a time so each wall time is its own.
static SERIAL: Mutex<()> = Mutex::new(());

fn check(id: u32) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let c = criteria().into_iter().find(|c| c.id == id).expect("known criterion");
    let start = Instant::now();
    let report = (c.run)();
    let secs = start.elapsed().as_secs_f64();
    let in_time = c.limit.is_none_or(|l| secs < l);
    let pass = report.is_clean() && report.cases > 0 && in_time;
    let limit = c.limit.map(|l| format!(" (limit {l:.0}s)")).unwrap_or_default();
    println!(
        "[{}] criterion {}: {}: {} cases, {} violations, {secs:.2}s{limit}",
        if pass { "PASS" } else { "FAIL" },
        c.id,
        c.name,
        report.cases,
        report.violations.len()
    );
    for v in report.violations.iter().take(5) {
        println!("       {v}");
    }
    assert!(pass, "criterion {id} failed");
}

#[test]
fn criterion_1_group_and_coset_algebra() {
    check(1);
}

#[test]
fn criterion_2_compact_lebesgue_lemma() {
    check(2);
}

#[test]
fn criterion_3_pgroup_lebesgue_lemma() {
    check(3);
}

#[test]
fn criterion_4_nbd_game_strategy() {
    check(4);
}

#[test]
fn criterion_5_open_cover_strategies() {
    check(5);
}

#[test]
fn criterion_6_counter_play() {
    check(6);
}

#[test]
fn criterion_7_countable_one_bookkeeping() {
    check(7);
}

#[test]
fn criterion_8_window_extension_invariance() {
    check(8);
}

#[test]
fn criterion_9_selector() {
    check(9);
}
