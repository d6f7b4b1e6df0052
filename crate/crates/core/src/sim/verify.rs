//! Seeded verification suites.
//!
//! Each suite replays one family of invariants over many random cases and
//! collects violations instead of stopping at the first. Brute force is
//! used wherever the quantity being checked has an independent finite
//! description.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::config::default_probes;
use crate::error::Result;
use crate::game::{play, validate, GameKind, GameSpec, OneMove, OneStrategy, Transcript, TwoMove, TwoStrategy};
use crate::group::{ComponentGroup, Element, GroupSpec, Index, Kappa, TableGroup, Track, Value, Window};
use crate::strategy::adversary::{ProbeHunter, RandomCountable, RandomCover, RandomNbd, Scripted, Shrinking};
use crate::strategy::schedule::{bound, pair};
use crate::strategy::{
    check_claims_all, counter_play, first_cover, roth_selector, BookkeepingTwo, NbdTwo, PGroupTwo, SigmaTwo,
    TargetSet,
};
use crate::topology::{
    coset_equal, lebesgue_compact, lebesgue_pgroup, BasicOpen, CompactPiece, CoverOracle, NbdSubgroup,
    SupportedElements, DEFAULT_PIECE_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GroupAxioms,
    Lebesgue,
    Claims,
    OpenCovers,
    Schedule,
    Counterplay,
    Selector,
    WindowInvariance,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::GroupAxioms,
        Suite::Lebesgue,
        Suite::Claims,
        Suite::OpenCovers,
        Suite::Schedule,
        Suite::Counterplay,
        Suite::Selector,
        Suite::WindowInvariance,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group-axioms",
            Suite::Lebesgue => "lebesgue",
            Suite::Claims => "claims",
            Suite::OpenCovers => "open-covers",
            Suite::Schedule => "schedule",
            Suite::Counterplay => "counterplay",
            Suite::Selector => "selector",
            Suite::WindowInvariance => "window-invariance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteViolation {
    pub invariant: String,
    pub inning: Option<usize>,
    pub details: String,
}

impl fmt::Display for SuiteViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inning {
            Some(n) => write!(f, "{} (inning {n}): {}", self.invariant, self.details),
            None => write!(f, "{}: {}", self.invariant, self.details),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub violations: Vec<SuiteViolation>,
    pub wall_time_secs: f64,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            0
        } else {
            1
        }
    }

    /// Combines reports of sub-suites.
    pub fn merge(suite: &str, parts: Vec<VerifyReport>) -> VerifyReport {
        VerifyReport {
            suite: suite.to_string(),
            cases: parts.iter().map(|p| p.cases).sum(),
            wall_time_secs: parts.iter().map(|p| p.wall_time_secs).sum(),
            violations: parts.into_iter().flat_map(|p| p.violations).collect(),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} cases, {} violations, {:.2}s",
            self.suite,
            self.cases,
            self.violations.len(),
            self.wall_time_secs
        )?;
        for v in self.violations.iter().take(20) {
            writeln!(f, "  {v}")?;
        }
        if self.violations.len() > 20 {
            writeln!(f, "  ... {} more", self.violations.len() - 20)?;
        }
        Ok(())
    }
}

struct Checker {
    suite: String,
    start: Instant,
    cases: u64,
    violations: Vec<SuiteViolation>,
}

impl Checker {
    fn new(suite: &str) -> Self {
        Checker {
            suite: suite.to_string(),
            start: Instant::now(),
            cases: 0,
            violations: Vec::new(),
        }
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, invariant: &str, details: impl FnOnce() -> String) {
        if !ok {
            self.fail(invariant, None, details());
        }
    }

    fn fail(&mut self, invariant: &str, inning: Option<usize>, details: String) {
        self.violations.push(SuiteViolation {
            invariant: invariant.to_string(),
            inning,
            details,
        });
    }

    /// Records an error from the library as a violation.
    fn ok<T>(&mut self, r: Result<T>, invariant: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                let inning = match &e {
                    crate::Error::Legality { inning, .. } => Some(*inning),
                    _ => None,
                };
                self.fail(invariant, inning, e.to_string());
                None
            }
        }
    }

    fn transcript(&mut self, t: &Transcript, label: &str) {
        for v in validate(t).violations {
            self.fail(&format!("transcript/{}", v.rule), v.inning, format!("{label}: {}", v.detail));
        }
    }

    fn finish(self) -> VerifyReport {
        VerifyReport {
            suite: self.suite,
            cases: self.cases,
            violations: self.violations,
            wall_time_secs: self.start.elapsed().as_secs_f64(),
        }
    }
}

fn scaled(base: u64, scale: f64) -> u64 {
    ((base as f64 * scale).round() as u64).max(1)
}

/// Runs a suite at `scale` times its default size.
pub fn run_suite(suite: Suite, seed: u64, scale: f64) -> VerifyReport {
    match suite {
        Suite::GroupAxioms => group_axioms(seed, scaled(10_000, scale)),
        Suite::Lebesgue => VerifyReport::merge(
            "lebesgue",
            vec![
                lebesgue_compact_suite(seed, scaled(1_000, scale)),
                lebesgue_pgroup_suite(seed, scaled(1_000, scale), 200),
            ],
        ),
        Suite::Claims => nbd_strategy(seed, scaled(50, scale), 64),
        Suite::OpenCovers => open_covers(seed, scaled(100, scale), 48),
        Suite::Schedule => schedule(seed, scaled(50, scale)),
        Suite::Counterplay => counterplay(seed, scaled(30, scale), 64),
        Suite::Selector => selector(seed, scaled(20, scale)),
        Suite::WindowInvariance => window_invariance(seed, scaled(50, scale)),
    }
}

fn uniform(track: Track, g: ComponentGroup) -> GroupSpec {
    GroupSpec::uniform(Kappa::default(), track, g)
}

/// Integers, Z/2, Z/6 and S_3.
pub fn component_kinds() -> Vec<ComponentGroup> {
    vec![
        ComponentGroup::Integers,
        ComponentGroup::cyclic(2).expect("valid order"),
        ComponentGroup::cyclic(6).expect("valid order"),
        ComponentGroup::Table { table: TableGroup::s3() },
    ]
}

fn random_value(rng: &mut ChaCha8Rng, g: &ComponentGroup, range: Value) -> Value {
    match g.max_rank() {
        Some(top) => g.value_at(rng.random_range(0..=top)).expect("rank below the order"),
        None => rng.random_range(-range..=range),
    }
}

fn random_element(rng: &mut ChaCha8Rng, indices: &[Index], spec: &GroupSpec, max_support: usize, range: Value) -> Element {
    let k = rng.random_range(0..=max_support.min(indices.len()));
    let chosen: Vec<Index> = indices.choose_multiple(rng, k).copied().collect();
    Element::from_entries(chosen.into_iter().map(|i| (i, random_value(rng, spec.component(i), range))))
}

fn random_subset(rng: &mut ChaCha8Rng, indices: &[Index], p: f64) -> BTreeSet<Index> {
    indices.iter().copied().filter(|_| rng.random_bool(p)).collect()
}

fn canonical(x: &Element) -> bool {
    x.entries().all(|(_, v)| v != 0)
}

/// Group axioms, canonical form, locality of restriction, and the laws of
/// the neighborhood subgroups and their cosets.
pub fn group_axioms(seed: u64, cases_per_kind: u64) -> VerifyReport {
    let mut c = Checker::new("group-axioms");
    let indices: Vec<Index> = (0..6).collect();
    for (k, g) in component_kinds().into_iter().enumerate() {
        let spec = uniform(Track::Product, g.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64 + 1) << 32));
        let id = Element::identity();
        for _ in 0..cases_per_kind {
            c.case();
            let a = random_element(&mut rng, &indices, &spec, 4, 20);
            let b = random_element(&mut rng, &indices, &spec, 4, 20);
            let x = random_element(&mut rng, &indices, &spec, 4, 20);
            let op = |p: &Element, q: &Element| spec.op(p, q).expect("window elements");
            let inv = |p: &Element| spec.inv(p).expect("window elements");
            let ab = op(&a, &b);
            c.check(op(&ab, &x) == op(&a, &op(&b, &x)), "associativity", || format!("{g}: ({a}) ({b}) ({x})"));
            c.check(op(&a, &id) == a && op(&id, &a) == a, "identity", || format!("{g}: ({a})"));
            let ai = inv(&a);
            c.check(op(&a, &ai).is_identity() && op(&ai, &a).is_identity(), "inverse", || format!("{g}: ({a})"));
            c.check(ai.support() == a.support(), "inverse-support", || format!("{g}: ({a})"));
            c.check(canonical(&ab) && canonical(&ai), "canonical-form", || format!("{g}: ({ab}) ({ai})"));
            let ab_support: BTreeSet<Index> = a.support().union(&b.support()).copied().collect();
            c.check(ab.support().is_subset(&ab_support), "op-support", || format!("{g}: ({a}) ({b})"));

            let bset = random_subset(&mut rng, &indices, 0.5);
            c.check(
                ab.restrict(&bset) == op(&a.restrict(&bset), &b.restrict(&bset)),
                "restrict-locality",
                || format!("{g}: ({a}) ({b}) on {bset:?}"),
            );

            let u_b = NbdSubgroup::new(bset.iter().copied());
            let off: BTreeSet<Index> = indices.iter().copied().filter(|i| !bset.contains(i)).collect();
            let u = a.restrict(&off);
            let v = x.restrict(&off);
            c.check(u_b.contains(&u) && u_b.contains(&v), "nbd-membership", || format!("{g}: ({u}) ({v})"));
            c.check(u_b.contains(&op(&u, &v)), "nbd-closure", || format!("{g}: ({u}) ({v})"));
            c.check(u_b.contains(&inv(&u)), "nbd-symmetry", || format!("{g}: ({u})"));
            // U * U = U: every member is a product of members, and products stay inside
            c.check(op(&u, &id) == u && u_b.contains(&op(&op(&u, &v), &inv(&v))), "nbd-idempotence", || {
                format!("{g}: ({u}) ({v})")
            });
            c.check(!u_b.contains(&a) || a.restrict(&bset).is_identity(), "nbd-membership", || format!("{g}: ({a})"));

            let wider: BTreeSet<Index> = bset.union(&random_subset(&mut rng, &indices, 0.5)).copied().collect();
            let u_wide = NbdSubgroup::new(wider.iter().copied());
            let w = x.restrict(&indices.iter().copied().filter(|i| !wider.contains(i)).collect());
            c.check(u_wide.is_subgroup_of(&u_b), "antitone", || format!("{wider:?} vs {bset:?}"));
            c.check(u_wide.contains(&w) && u_b.contains(&w), "antitone", || format!("{g}: ({w})"));

            // half the time force the same coset
            let y = if rng.random_bool(0.5) { op(&a, &v) } else { b.clone() };
            let ca = u_b.coset(&a);
            let cy = u_b.coset(&y);
            let same = ca.same_set(&cy, &spec);
            c.check(same == ca.intersect(&cy).is_some(), "coset-partition", || {
                format!("{g}: ({a}) ({y}) on {bset:?}")
            });
            c.check(same || ca.is_disjoint(&cy), "coset-partition", || format!("{g}: ({a}) ({y}) on {bset:?}"));
            let eq = coset_equal(&a, &y, &bset);
            let member = cy.contains(&a);
            let quotient = u_b.contains(&op(&inv(&y), &a));
            c.check(eq == member && member == quotient && eq == same, "three-way-agreement", || {
                format!("{g}: ({a}) ({y}) on {bset:?}: {eq} {member} {quotient} {same}")
            });
        }
    }
    c.finish()
}

/// Every element of `x * U_pins` with support in `window` and values in
/// `C(rank)` off the pins. Finite, so `x * N ⊆ U` can be checked point by
/// point on it.
fn coset_points(x: &Element, pins: &BTreeSet<Index>, window: &Window, spec: &GroupSpec, rank: u64) -> Vec<Element> {
    let free: Vec<Index> = window.iter().filter(|i| !pins.contains(i)).collect();
    let base = x.restrict(pins);
    let mut out = vec![base];
    for i in free {
        let values = spec.component(i).filtration(rank);
        out = out
            .into_iter()
            .flat_map(|e| {
                values.iter().map(move |&v| {
                    Element::from_entries(e.entries().chain(std::iter::once((i, v))))
                })
            })
            .collect();
    }
    out
}

fn random_bounded_cover(rng: &mut ChaCha8Rng, indices: &[Index], spec: &GroupSpec) -> CoverOracle {
    match rng.random_range(0..5) {
        0 => CoverOracle::Whole,
        1 => CoverOracle::Coset {
            pins: random_subset(rng, indices, 0.6),
        },
        2 => CoverOracle::Meet {
            parts: (0..rng.random_range(2..4))
                .map(|_| CoverOracle::hashed(rng.random(), random_subset(rng, indices, 0.5), rng.random_range(0..3)))
                .collect(),
        },
        3 => {
            // a few random basic opens, closed off by a hashed cover
            let mut members: Vec<BasicOpen> = (0..rng.random_range(1..4))
                .map(|_| {
                    let x = random_element(rng, indices, spec, 2, 2);
                    BasicOpen::coset(&x, &random_subset(rng, indices, 0.5))
                })
                .collect();
            members.push(BasicOpen::whole());
            CoverOracle::Listed { members }
        }
        _ => CoverOracle::hashed(rng.random(), random_subset(rng, indices, 0.6), rng.random_range(0..3)),
    }
}

/// Compact Lebesgue lemma: for every point of the piece, `x * N` lies in
/// the chosen member, checked both by the exact subset test and point by
/// point.
pub fn lebesgue_compact_suite(seed: u64, covers: u64) -> VerifyReport {
    let mut c = Checker::new("lebesgue-compact");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1eb);
    let kinds = component_kinds();
    for k in 0..covers {
        let g = kinds[(k % kinds.len() as u64) as usize].clone();
        let spec = uniform(Track::Product, g.clone());
        let w = Window::range(rng.random_range(1..=4));
        let indices: Vec<Index> = w.iter().collect();
        let n = rng.random_range(0..=2);
        let cover = if rng.random_bool(0.2) {
            CoverOracle::Pinning {
                base: random_subset(&mut rng, &indices, 0.3),
            }
        } else {
            random_bounded_cover(&mut rng, &indices, &spec)
        };
        let Some(nbd) = c.ok(lebesgue_compact(&cover, n, &w, &spec, DEFAULT_PIECE_CAP), "lebesgue-compact") else {
            continue;
        };
        for x in CompactPiece::new(n).iter(&w, &spec) {
            c.case();
            let Some(u) = cover.choose(&x, &spec) else {
                c.fail("cover", None, format!("{cover} misses ({x})"));
                continue;
            };
            c.check(u.contains(&x), "choice", || format!("{cover} at ({x})"));
            c.check(nbd.coset(&x).is_subset(&u, &spec), "lebesgue-compact", || {
                format!("{g}, |W| = {}, n = {n}: ({x}) * {nbd} not in {u} of {cover}", w.len())
            });
            for y in coset_points(&x, nbd.pins(), &w, &spec, n + 1) {
                if !u.contains(&y) {
                    c.fail("lebesgue-compact-points", None, format!("({y}) in ({x}) * {nbd} but not in {u}"));
                    break;
                }
            }
        }
    }
    c.finish()
}

/// P-group Lebesgue lemma on random points of a larger window, including
/// points of `x * N` with support off the window.
pub fn lebesgue_pgroup_suite(seed: u64, covers: u64, probes: u64) -> VerifyReport {
    let mut c = Checker::new("lebesgue-pgroup");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9a7);
    let kinds = component_kinds();
    let indices: Vec<Index> = (0..6).collect();
    let beyond: Vec<Index> = (0..10).collect();
    for k in 0..covers {
        let g = kinds[(k % kinds.len() as u64) as usize].clone();
        let spec = uniform(Track::BoxGdelta, g.clone());
        let cover = random_bounded_cover(&mut rng, &indices, &spec);
        let Some(nbd) = c.ok(lebesgue_pgroup(&cover, &spec), "lebesgue-pgroup") else {
            continue;
        };
        c.check(nbd.is_countable(), "countable-flag", || "box track neighborhood not flagged".into());
        for _ in 0..probes {
            c.case();
            let x = random_element(&mut rng, &indices, &spec, 6, 5);
            let Some(u) = cover.choose(&x, &spec) else {
                c.fail("cover", None, format!("{cover} misses ({x})"));
                continue;
            };
            c.check(nbd.coset(&x).is_subset(&u, &spec), "lebesgue-pgroup", || {
                format!("{g}: ({x}) * {nbd} not in {u} of {cover}")
            });
            let off: Vec<Index> = beyond.iter().copied().filter(|i| !nbd.pins().contains(i)).collect();
            let v = random_element(&mut rng, &off, &spec, 4, 9);
            let y = spec.op(&x, &v).expect("window elements");
            c.check(u.contains(&y), "lebesgue-pgroup-points", || format!("({y}) = ({x})({v}) not in {u}"));
        }
    }
    c.finish()
}

/// Track and component for play `p` of the neighborhood-game suite.
fn nbd_scenario(p: u64) -> (Track, ComponentGroup) {
    match p % 4 {
        0 | 2 => (Track::Product, ComponentGroup::Integers),
        1 => (Track::BoxGdelta, ComponentGroup::cyclic(2).expect("valid order")),
        _ => (Track::BoxGdelta, ComponentGroup::Integers),
    }
}

/// TWO's neighborhood-game strategy against random, shrinking and
/// probe-hunting neighborhoods on both tracks: validity, the tracked-coset invariants,
/// stabilization, and at least two promised coverages of every probe.
pub fn nbd_strategy(seed: u64, plays: u64, innings: usize) -> VerifyReport {
    let mut c = Checker::new("claims");
    let window = Window::range(6);
    let pool: Vec<Index> = window.iter().collect();
    for p in 0..plays {
        let (track, g) = nbd_scenario(p);
        let spec = uniform(track, g);
        let countable = track == Track::BoxGdelta;
        let play_seed = seed.wrapping_mul(1000).wrapping_add(p);
        let mut one: Box<dyn OneStrategy> = match (p / 4) % 3 {
            0 => Box::new(RandomNbd::new(play_seed, pool.clone(), 1, countable)),
            1 => Box::new(Shrinking::new(play_seed, pool.clone(), 2, false, countable)),
            _ => Box::new(ProbeHunter::new(play_seed, pool.clone(), 1, false, countable)),
        };
        let label = format!("play {p} ({track:?}, {})", one.label());
        let game = GameSpec::new(GameKind::NbdCovers, spec.clone(), window.clone(), innings).expect("valid game");
        let probes = default_probes(&window, &spec, 1);
        let Some(t) = c.ok(play(&game, one.as_mut(), &mut NbdTwo::new(), innings, play_seed, probes.clone()), "play")
        else {
            continue;
        };
        c.transcript(&t, &label);
        for report in check_claims_all(&t, &probes) {
            c.case();
            for v in &report.violations {
                c.fail(&v.rule, v.inning, format!("{label}, probe ({}): {}", report.probe, v.detail));
            }
            c.check(report.promised_at_least(2) && report.coverage.len() >= 2, "coverage", || {
                format!(
                    "{label}: probe ({}) has rank {:?}, promised {:?}, covered {:?}",
                    report.probe, report.rank, report.promised, report.coverage
                )
            });
        }
    }
    c.finish()
}

/// One open-cover scenario: strategy, group, window and probes.
fn open_cover_scenario(p: u64) -> (Box<dyn TwoStrategy>, GroupSpec, Window, Vec<Element>) {
    let z2 = ComponentGroup::cyclic(2).expect("valid order");
    match p % 4 {
        0 => {
            let spec = uniform(Track::BoxGdelta, z2);
            let w = Window::range(3);
            let probes = CompactPiece::new(3).enumerate(&w, &spec, DEFAULT_PIECE_CAP).expect("small piece");
            (Box::new(PGroupTwo::new()), spec, w, probes)
        }
        1 => {
            let spec = uniform(Track::Product, z2);
            let w = Window::range(3);
            let probes = CompactPiece::new(2).enumerate(&w, &spec, DEFAULT_PIECE_CAP).expect("small piece");
            (Box::new(SigmaTwo::default()), spec, w, probes)
        }
        2 => {
            let spec = uniform(Track::BoxGdelta, ComponentGroup::Integers);
            let w = Window::range(4);
            let probes = default_probes(&w, &spec, 1);
            (Box::new(PGroupTwo::new()), spec, w, probes)
        }
        _ => {
            let spec = uniform(Track::Product, ComponentGroup::Integers);
            let w = Window::range(1);
            let probes = CompactPiece::new(2).enumerate(&w, &spec, DEFAULT_PIECE_CAP).expect("small piece");
            (Box::new(SigmaTwo::default()), spec, w, probes)
        }
    }
}

/// Both open-cover strategies against random covers: the played member
/// contains the inner coset at every inning, and every probe is covered.
pub fn open_covers(seed: u64, plays: u64, innings: usize) -> VerifyReport {
    let mut c = Checker::new("open-covers");
    for p in 0..plays {
        let (mut two, spec, window, probes) = open_cover_scenario(p);
        let play_seed = seed.wrapping_mul(1000).wrapping_add(p);
        let mut one = RandomCover::new(play_seed, window.iter(), 1);
        let label = format!("play {p} ({}, {:?}, |W| = {})", two.label(), spec.track, window.len());
        let game = GameSpec::new(GameKind::OpenCovers, spec.clone(), window, innings).expect("valid game");
        let Some(t) = c.ok(play(&game, &mut one, two.as_mut(), innings, play_seed, probes.clone()), "play") else {
            continue;
        };
        c.transcript(&t, &label);
        for r in &t.innings {
            c.case();
            let ins = &r.instrumentation;
            let TwoMove::Member { set, .. } = &r.two_move else {
                c.fail("move", Some(r.inning), format!("{label}: not a member"));
                continue;
            };
            match &ins.inner {
                Some(inner) if !ins.fallback => {
                    let inside = inner.open().is_subset(set, &spec);
                    if !inside {
                        c.fail("containment", Some(r.inning), format!("{label}: {inner} not in {set}"));
                    }
                }
                Some(_) => c.fail("containment", Some(r.inning), format!("{label}: inner coset missed the piece")),
                None => c.fail("containment", Some(r.inning), format!("{label}: no inner coset recorded")),
            }
        }
        for report in check_claims_all(&t, &probes) {
            for v in &report.violations {
                c.fail(&v.rule, v.inning, format!("{label}, probe ({}): {}", report.probe, v.detail));
            }
            c.check(!report.coverage.is_empty(), "coverage", || {
                format!("{label}: probe ({}) never covered (rank {:?})", report.probe, report.rank)
            });
        }
    }
    c.finish()
}

/// Bookkeeping fairness against random increasing countable sets: the
/// rank-`r` member is played `m` times by inning `bound(r, m)` for
/// `r <= 8`, `m <= 4`. Ranks are recomputed from ONE's moves alone.
pub fn schedule(seed: u64, sequences: u64) -> VerifyReport {
    let mut c = Checker::new("schedule");
    let innings = bound(8, 4) as usize + 1;
    let spec = uniform(Track::Product, ComponentGroup::Integers);
    let window = Window::range(4);
    for s in 0..sequences {
        let seq_seed = seed.wrapping_mul(1000).wrapping_add(s);
        let mut one = RandomCountable::new(seq_seed, window.iter(), 3);
        let game = GameSpec::new(GameKind::CountableOne, spec.clone(), window.clone(), innings).expect("valid game");
        let Some(t) = c.ok(play(&game, &mut one, &mut BookkeepingTwo::new(), innings, seq_seed, vec![]), "play")
        else {
            continue;
        };
        c.transcript(&t, &format!("sequence {s}"));
        // first appearance among the first n + 1 members of W_n
        let mut order: Vec<(Element, usize)> = Vec::new();
        for r in &t.innings {
            let OneMove::Countable { set } = &r.one_move else { continue };
            for k in 0..=r.inning as u128 {
                let Some(x) = set.nth(k, &spec) else { break };
                if !order.iter().any(|(y, _)| *y == x) {
                    order.push((x, r.inning));
                }
            }
        }
        let played: Vec<&Element> = t
            .innings
            .iter()
            .map(|r| match &r.two_move {
                TwoMove::Point { point } => point,
                TwoMove::Member { witness, .. } => witness,
            })
            .collect();
        for rank in 0..=8u64 {
            let Some((member, seen)) = order.get(rank as usize) else {
                c.fail("precondition", None, format!("sequence {s}: fewer than {} members", rank + 1));
                continue;
            };
            c.check(*seen as u64 <= pair(rank, 0), "precondition", || {
                format!("sequence {s}: rank {rank} first seen at inning {seen}")
            });
            for m in 1..=4u64 {
                c.case();
                let by = bound(rank, m) as usize;
                let hits = played[..=by].iter().filter(|x| **x == member).count() as u64;
                c.check(hits >= m, "fairness", || {
                    format!("sequence {s}: rank {rank} ({member}) played {hits} < {m} times by inning {by}")
                });
            }
        }
    }
    c.finish()
}

/// Counter-play against constant, greedy-shrinking and probe-hunting
/// strategies of ONE: the play is a legal play of ONE's strategy and every
/// probe of `G_2` is covered.
pub fn counterplay(seed: u64, runs: u64, innings: usize) -> VerifyReport {
    let mut c = Checker::new("counterplay");
    for k in 0..runs {
        let run_seed = seed.wrapping_mul(1000).wrapping_add(k);
        let (spec, window) = if (k / 3) % 2 == 0 {
            (uniform(Track::Product, ComponentGroup::cyclic(2).expect("valid order")), Window::range(3))
        } else {
            (uniform(Track::Product, ComponentGroup::Integers), Window::range(1))
        };
        let pool: Vec<Index> = window.iter().collect();
        let mut f: Box<dyn OneStrategy> = match k % 3 {
            0 => Box::new(Scripted::new(vec![OneMove::cover(CoverOracle::hashed(run_seed, pool.clone(), 1))])),
            1 => Box::new(Shrinking::new(run_seed, pool.clone(), 1, true, false)),
            _ => Box::new(ProbeHunter::new(run_seed, pool.clone(), 1, true, false)),
        };
        let label = format!("run {k} ({}, |W| = {})", f.label(), window.len());
        let probes = CompactPiece::new(2).enumerate(&window, &spec, DEFAULT_PIECE_CAP).expect("small piece");
        let game = GameSpec::new(GameKind::OpenCovers, spec, window, innings).expect("valid game");
        let Some(t) = c.ok(counter_play(f.as_mut(), &game, TargetSet::All, innings, run_seed, probes.clone()), "play")
        else {
            continue;
        };
        c.transcript(&t, &label);
        for x in &probes {
            c.case();
            c.check(!t.coverage(x).is_empty(), "coverage", || format!("{label}: ({x}) never covered"));
        }
    }
    c.finish()
}

/// Rothberger selectors: every probe supported in `C` with rank `r <= 100`
/// is covered by inning `r`. Exhaustive over `(Z/2)^7`, sampled over
/// integers.
pub fn selector(seed: u64, sequences: u64) -> VerifyReport {
    let mut c = Checker::new("selector");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e1);
    let indices: Vec<Index> = (0..10).collect();
    for s in 0..sequences {
        let integers = s % 2 == 1;
        let spec = if integers {
            uniform(Track::Product, ComponentGroup::Integers)
        } else {
            uniform(Track::Product, ComponentGroup::cyclic(2).expect("valid order"))
        };
        let size = if integers { 3 } else { 7 };
        let cset: Vec<Index> = indices.choose_multiple(&mut rng, size).copied().collect();
        // B_n random inside C, with index n mod |C| forced so the union is C
        let nbds: Vec<NbdSubgroup> = (0..121)
            .map(|n| {
                let mut b = random_subset(&mut rng, &cset, 0.3);
                b.insert(cset[n % cset.len()]);
                NbdSubgroup::new(b)
            })
            .collect();
        let f = roth_selector(&nbds, &spec);
        let cpins: BTreeSet<Index> = cset.iter().copied().collect();
        let reps = SupportedElements::new(&cpins, &spec);
        // independent ranks: position in the enumeration
        let listed: Vec<Element> = reps.iter().take(101).collect();
        let probes: Vec<(Element, usize)> = if integers {
            (0..300)
                .map(|_| {
                    let r = rng.random_range(0..listed.len());
                    let off: Vec<Index> = indices.iter().copied().filter(|i| !cpins.contains(i)).collect();
                    let noise = random_element(&mut rng, &off, &spec, 2, 5);
                    (spec.op(&listed[r], &noise).expect("window elements"), r)
                })
                .collect()
        } else {
            listed.iter().cloned().enumerate().map(|(r, x)| (x, r)).collect()
        };
        for (x, r) in probes {
            c.case();
            c.check(reps.rank_of(&x.restrict(&cpins)) == Some(r as u128), "rank", || format!("({x}) rank {r}"));
            let hit = first_cover(&f, &nbds, &x);
            c.check(hit.is_some_and(|h| h <= r), "selector-coverage", || {
                format!("sequence {s}: ({x}) of rank {r} first covered at {hit:?}")
            });
        }
    }
    c.finish()
}

/// Plays the same seeded run over a window and over the window plus four
/// untouched indices; the inning records must agree except for window
/// snapshots.
pub fn window_invariance(seed: u64, runs: u64) -> VerifyReport {
    let mut c = Checker::new("window-invariance");
    let innings = 32;
    for k in 0..runs {
        c.case();
        let run_seed = seed.wrapping_mul(1000).wrapping_add(k);
        let z2 = ComponentGroup::cyclic(2).expect("valid order");
        let (kind, spec, size) = match k % 4 {
            0 => (GameKind::NbdCovers, uniform(Track::Product, ComponentGroup::Integers), 4),
            1 => (GameKind::OpenCovers, uniform(Track::BoxGdelta, ComponentGroup::Integers), 4),
            2 => (GameKind::OpenCovers, uniform(Track::Product, z2), 3),
            _ => (GameKind::CountableOne, uniform(Track::Product, ComponentGroup::Integers), 4),
        };
        let pool: Vec<Index> = (0..size).collect();
        let run = |window: Window| -> Result<Transcript> {
            let game = GameSpec::new(kind, spec.clone(), window.clone(), innings)?;
            let (mut one, mut two): (Box<dyn OneStrategy>, Box<dyn TwoStrategy>) = match k % 4 {
                0 => (Box::new(RandomNbd::new(run_seed, pool.clone(), 1, false)), Box::new(NbdTwo::new())),
                1 => (Box::new(RandomCover::new(run_seed, pool.clone(), 1)), Box::new(PGroupTwo::new())),
                2 => (Box::new(RandomCover::new(run_seed, pool.clone(), 1)), Box::new(SigmaTwo::default())),
                _ => (Box::new(RandomCountable::new(run_seed, pool.clone(), 3)), Box::new(BookkeepingTwo::new())),
            };
            let probes = default_probes(&Window::new(pool.iter().copied()), &spec, 1);
            play(&game, one.as_mut(), two.as_mut(), innings, run_seed, probes)
        };
        let small = Window::range(size);
        let mut large = small.clone();
        large.fresh(4);
        let (Some(a), Some(b)) = (c.ok(run(small), "play"), c.ok(run(large), "play")) else {
            continue;
        };
        let (ra, rb) = (a.records_without_windows(), b.records_without_windows());
        if let Some(n) = (0..ra.len().max(rb.len())).find(|&n| ra.get(n) != rb.get(n)) {
            c.fail("window-invariance", Some(n), format!("run {k}: records differ"));
        }
        c.check(
            b.innings.iter().all(|r| r.instrumentation.window.len() == size as usize + 4),
            "window-snapshot",
            || format!("run {k}: snapshots do not show the larger window"),
        );
    }
    c.finish()
}
