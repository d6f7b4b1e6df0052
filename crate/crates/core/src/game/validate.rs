//! Offline re-checking of transcripts.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::moves::{OneMove, TwoMove};
use super::rules::{check_one, check_two};
use super::transcript::{Transcript, TRANSCRIPT_FORMAT};
use crate::strategy::schedule::unpair;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// `None` for header-level problems.
    pub inning: Option<usize>,
    pub rule: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inning {
            Some(n) => write!(f, "inning {n}: {}: {}", self.rule, self.detail),
            None => write!(f, "header: {}: {}", self.rule, self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub innings: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, inning: Option<usize>, rule: &str, detail: impl Into<String>) {
        self.violations.push(Violation {
            inning,
            rule: rule.to_string(),
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{} innings, no violations", self.innings);
        }
        write!(f, "{} innings, {} violations", self.innings, self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

/// Re-checks every legality rule and the consistency of the instrumentation,
/// using nothing but the transcript.
pub fn validate(t: &Transcript) -> ValidationReport {
    let h = &t.header;
    let spec = &h.group;
    let mut report = ValidationReport {
        innings: t.innings.len(),
        violations: Vec::new(),
    };
    if h.format != TRANSCRIPT_FORMAT {
        report.push(None, "format", format!("unknown format `{}`", h.format));
    }
    if h.innings != t.innings.len() {
        report.push(
            None,
            "inning-count",
            format!("header says {} innings, found {}", h.innings, t.innings.len()),
        );
    }
    if t.innings.len() > h.inning_cap {
        report.push(None, "inning-cap", format!("{} innings exceed the cap {}", t.innings.len(), h.inning_cap));
    }
    for p in &h.probes {
        if !h.window.covers(p) || spec.check(p).is_err() {
            report.push(None, "probe", format!("probe ({p}) is not a window element"));
        }
    }

    let mut window = h.window.clone();
    let mut prev_one: Option<&OneMove> = None;
    let mut prev_refined = None;
    let mut prev_seen = 0;
    for (pos, r) in t.innings.iter().enumerate() {
        let n = r.inning;
        let at = Some(n);
        if n != pos {
            report.push(at, "inning-number", format!("record {pos} is numbered {n}"));
        }
        let ins = &r.instrumentation;
        if !window.is_subset(&ins.window) {
            report.push(at, "window-monotone", "the window shrank");
        }
        window = ins.window.clone();

        if let Err(f) = check_one(h.game, spec, &window, &r.one_move, prev_one) {
            report.push(at, f.rule, format!("{}: {}", f.player, f.detail));
        }
        if let Err(f) = check_two(spec, &window, &r.one_move, &r.two_move) {
            report.push(at, f.rule, format!("{}: {}", f.player, f.detail));
        }
        prev_one = Some(&r.one_move);

        let played = match &r.two_move {
            TwoMove::Member { set, .. } => Some(set),
            TwoMove::Point { .. } => None,
        };

        if let Some(refined) = &ins.refined {
            if let Some(prev) = &prev_refined {
                let prev: &crate::topology::NbdSubgroup = prev;
                if !refined.nbd.pins().is_superset(prev.pins()) {
                    report.push(at, "refinement-monotone", "C_n does not contain C_(n-1)");
                }
            }
            if let (OneMove::Nbd { nbd }, TwoMove::Member { witness, .. }) = (&r.one_move, &r.two_move) {
                if !refined.nbd.pins().is_superset(nbd.pins()) {
                    report.push(at, "refinement", format!("C_n = {} does not contain B_n = {nbd}", refined.nbd));
                }
                if refined.rep != *witness {
                    report.push(at, "refinement", "refined representative differs from the played one");
                }
            }
            if !ins.fallback {
                if let Some(set) = played {
                    if !refined.open().is_subset(set, spec) {
                        report.push(at, "refinement", format!("{refined} is not inside the played {set}"));
                    }
                }
            }
            prev_refined = Some(refined.nbd.clone());
        }

        if let Some(inner) = &ins.inner {
            if let Some(nbd) = &ins.nbd {
                if inner.nbd != *nbd {
                    report.push(at, "inner-nbd", format!("inner coset uses {} instead of N_n = {nbd}", inner.nbd));
                }
            }
            if !ins.fallback {
                if let Some(set) = played {
                    if !inner.open().is_subset(set, spec) {
                        report.push(at, "containment", format!("inner coset {inner} is not inside {set}"));
                    }
                }
            }
        }

        if let (Some(target), Some(nbd), Some(set)) = (&ins.target, &ins.nbd, played) {
            if !nbd.coset(target).is_subset(set, spec) {
                report.push(at, "target-containment", format!("({target}) * {nbd} is not inside {set}"));
            }
        }

        if let Some(s) = &ins.schedule {
            let slot = unpair(n as u64);
            if s.slot != slot {
                report.push(at, "schedule-slot", format!("slot {:?} should be {:?}", s.slot, slot));
            }
            if s.seen < prev_seen {
                report.push(at, "schedule-seen", "the merged enumeration shrank");
            }
            if s.fallback {
                if s.seen > slot.0 {
                    report.push(at, "schedule-fallback", format!("rank {} was available", slot.0));
                }
            } else if s.rank != slot.0 {
                report.push(at, "schedule-rank", format!("played rank {} in slot {:?}", s.rank, slot));
            }
            prev_seen = s.seen;
        }
    }
    report
}
