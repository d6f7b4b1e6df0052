//! Per-probe checks of the neighborhood-game strategy's internal invariants.
//!
//! For a probe `x` and the refinements `C_n`, the tracked representative is
//! `y_n = x` restricted to `C_n`, the canonical member of `A_n` whose coset
//! `y_n * U_{C_n}` contains `x`. Along a play:
//!
//! 1. `x * U_{C_last} ⊆ y_n * U_{C_n}` with `y_n ∈ A_n`;
//! 2. `y_{n+1} * U_{C_{n+1}} ⊆ y_n * U_{C_n}`;
//! 3. `support(y_n) ⊆ support(y_{n+1})`;
//! 4. `support(y_n) ⊆ support(x)`;
//!
//! and `y_n` is constant wherever its support is. Once `y* = y_last` has a
//! rank `r` in TWO's bookkeeping, every later inning of slot `r` plays `y*`,
//! and `x` lies in the played set there. Those innings are the promised
//! coverage.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::schedule::unpair;
use crate::game::{CountableSet, OneMove, Transcript, Violation};
use crate::group::{Element, Index};
use crate::topology::{BasicOpen, NbdSubgroup, SupportedElements};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimsReport {
    pub probe: Element,
    pub violations: Vec<Violation>,
    /// Innings at which TWO's move contains the probe.
    pub coverage: Vec<usize>,
    /// Innings at which the schedule guarantees coverage.
    pub promised: Vec<usize>,
    /// Rank of `y*` in TWO's merged enumeration.
    pub rank: Option<u64>,
}

impl ClaimsReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Covered at least `m` times at promised innings.
    pub fn promised_at_least(&self, m: usize) -> bool {
        self.promised.len() >= m && self.promised.iter().all(|n| self.coverage.contains(n))
    }
}

fn violation(report: &mut Vec<Violation>, inning: usize, rule: &str, detail: String) {
    report.push(Violation {
        inning: Some(inning),
        rule: rule.to_string(),
        detail,
    });
}

/// Checks the claims for one probe on a transcript of [`NbdTwo`] or one of
/// the open-cover strategies built on it.
///
/// [`NbdTwo`]: super::nbd::NbdTwo
pub fn check_claims(t: &Transcript, x: &Element) -> ClaimsReport {
    check_claims_all(t, std::slice::from_ref(x)).pop().expect("one report per probe")
}

/// [`check_claims`] for several probes, replaying the play once. Problems
/// with the play itself are reported under every probe.
pub fn check_claims_all(t: &Transcript, probes: &[Element]) -> Vec<ClaimsReport> {
    let replay = Replay::new(t);
    probes.iter().map(|x| replay.check(t, x)).collect()
}

/// What every probe's check shares: the refinements `C_n` recomputed from
/// the moves and the bookkeeping ranks replayed from them.
struct Replay {
    cs: Vec<BTreeSet<Index>>,
    ranks: HashMap<Element, (u64, usize)>,
    violations: Vec<Violation>,
}

impl Replay {
    fn new(t: &Transcript) -> Self {
        let spec = &t.header.group;
        let mut violations = Vec::new();

        let mut c: BTreeSet<Index> = BTreeSet::new();
        let mut cs = Vec::new();
        for r in &t.innings {
            let pins = match (&r.one_move, &r.instrumentation.nbd) {
                (OneMove::Nbd { nbd }, _) => Some(nbd.pins()),
                (_, Some(nbd)) => Some(nbd.pins()),
                _ => None,
            };
            match pins {
                Some(p) => c.extend(p.iter().copied()),
                None => violation(&mut violations, r.inning, "instrumentation", "no neighborhood for this inning".into()),
            }
            cs.push(c.clone());
        }

        let mut merged: Vec<Element> = Vec::new();
        let mut ranks: HashMap<Element, (u64, usize)> = HashMap::new();
        for (r, cn) in t.innings.iter().zip(&cs) {
            let n = r.inning;
            let ins = &r.instrumentation;
            match &ins.refined {
                Some(refined) if refined.nbd.pins() == cn => {}
                Some(refined) => violation(
                    &mut violations,
                    n,
                    "refinement",
                    format!("recorded C_n = {} but the moves give {}", refined.nbd, NbdSubgroup::new(cn.iter().copied())),
                ),
                None => violation(&mut violations, n, "instrumentation", "no refined coset".into()),
            }

            let a_n = CountableSet::Supported { pins: cn.clone() };
            let mut fresh = Vec::new();
            for k in 0..=n as u128 {
                let Some(e) = a_n.nth(k, spec) else { break };
                if !ranks.contains_key(&e) && !fresh.contains(&e) {
                    fresh.push(e);
                }
            }
            for e in &fresh {
                ranks.insert(e.clone(), (merged.len() as u64, n));
                merged.push(e.clone());
            }
            if let Some(s) = &ins.schedule {
                if s.ingested != fresh {
                    violation(&mut violations, n, "bookkeeping", "ingested members differ from the replay".into());
                }
                if let Some(refined) = &ins.refined {
                    if merged.get(s.rank as usize) != Some(&refined.rep) {
                        violation(
                            &mut violations,
                            n,
                            "bookkeeping",
                            format!("rank {} is not ({})", s.rank, refined.rep),
                        );
                    }
                }
            }
        }
        Replay { cs, ranks, violations }
    }

    fn check(&self, t: &Transcript, x: &Element) -> ClaimsReport {
        let spec = &t.header.group;
        let mut violations = self.violations.clone();
        let last = self.cs.last().cloned().unwrap_or_default();
        let target = NbdSubgroup::new(last.iter().copied()).coset(x);
        let mut prev: Option<(Element, BasicOpen)> = None;
        for (r, cn) in t.innings.iter().zip(&self.cs) {
            let n = r.inning;
            let y = x.restrict(cn);
            if !SupportedElements::new(cn, spec).contains(&y) {
                violation(&mut violations, n, "tracked-coset", format!("({y}) is not a representative of U_C"));
            }
            let coset = NbdSubgroup::new(cn.iter().copied()).coset(&y);
            if !coset.contains(x) || !target.is_subset(&coset, spec) {
                violation(&mut violations, n, "tracked-coset", format!("x * U_C is not inside ({y}) * U_C_n"));
            }
            if let Some((py, pcoset)) = &prev {
                if !coset.is_subset(pcoset, spec) {
                    violation(&mut violations, n, "nested-cosets", "the tracked cosets are not nested".into());
                }
                if !py.support().is_subset(&y.support()) {
                    violation(&mut violations, n, "support-growth", format!("support({py}) is not inside support({y})"));
                }
                if py.support() == y.support() && *py != y {
                    violation(&mut violations, n, "stabilization", format!("({py}) changed to ({y}) on a fixed support"));
                }
            }
            if !y.support().is_subset(&x.support()) {
                violation(&mut violations, n, "support-in-probe", format!("support({y}) is not inside support({x})"));
            }
            prev = Some((y, coset));
        }

        let coverage = t.coverage(x);
        let y_star = x.restrict(&last);
        let (rank, promised) = match self.ranks.get(&y_star) {
            Some(&(r, seen_at)) => {
                let promised: Vec<usize> = (seen_at..t.innings.len()).filter(|&n| unpair(n as u64).0 == r).collect();
                for &n in &promised {
                    if !coverage.contains(&n) {
                        violation(&mut violations, n, "schedule-coverage", format!("({x}) is not covered in slot {r}"));
                    }
                }
                (Some(r), promised)
            }
            None => (None, Vec::new()),
        };
        ClaimsReport {
            probe: x.clone(),
            violations,
            coverage,
            promised,
            rank,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, GameKind, GameSpec};
    use crate::group::{ComponentGroup, GroupSpec, Kappa, Track, Window};
    use crate::strategy::adversary::RandomNbd;
    use crate::strategy::nbd::NbdTwo;

    #[test]
    fn claims_hold_against_growing_pins() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        let g = GameSpec::new(GameKind::NbdCovers, spec, Window::range(6), 100).unwrap();
        let t = play(&g, &mut RandomNbd::new(4, 0..6, 1, false), &mut NbdTwo::new(), 64, 4, vec![]).unwrap();
        for p in ["id", "0:1", "3:1", "2:-1,5:2"] {
            let report = check_claims(&t, &p.parse().unwrap());
            assert!(report.is_valid(), "{p}: {:?}", report.violations);
        }
        let report = check_claims(&t, &"0:1".parse().unwrap());
        assert!(report.promised_at_least(2), "{report:?}");
    }

    #[test]
    fn tampered_refinement_is_caught() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        let g = GameSpec::new(GameKind::NbdCovers, spec, Window::range(3), 100).unwrap();
        let mut t = play(&g, &mut RandomNbd::new(1, 0..3, 1, false), &mut NbdTwo::new(), 6, 1, vec![]).unwrap();
        t.innings[4].instrumentation.refined.as_mut().unwrap().nbd = NbdSubgroup::new([0]);
        let report = check_claims(&t, &Element::identity());
        assert!(report.violations.iter().any(|v| v.rule == "refinement" && v.inning == Some(4)));
    }
}
