//! Strategies for ONE used to stress TWO's strategies.
//!
//! Each adversary draws from an explicit index `pool` and its own seeded
//! generator, never from the window, so enlarging the window leaves its
//! moves unchanged.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::game::{CountableSet, GameSpec, InningRecord, OneMove, OneStrategy, TwoMove};
use crate::group::{Element, Index, Value};
use crate::topology::{CoverOracle, NbdSubgroup};

/// Replays a list of moves, then repeats the last one.
#[derive(Clone, Debug)]
pub struct Scripted {
    moves: Vec<OneMove>,
}

impl Scripted {
    /// `moves` must be nonempty.
    pub fn new(moves: Vec<OneMove>) -> Self {
        assert!(!moves.is_empty(), "a script needs at least one move");
        Scripted { moves }
    }
}

impl OneStrategy for Scripted {
    fn label(&self) -> String {
        format!("scripted({})", self.moves.len())
    }

    fn next_move(&mut self, _: &GameSpec, history: &[InningRecord]) -> Result<OneMove> {
        Ok(self.moves[history.len().min(self.moves.len() - 1)].clone())
    }
}

fn nbd_move(pins: &BTreeSet<Index>, countable: bool) -> OneMove {
    OneMove::nbd(NbdSubgroup::new(pins.iter().copied()).with_countable(countable))
}

/// Adds `growth` random pool indices per inning: `|B_n| = 1 + growth * n`
/// until the pool runs out, and `B_n ⊆ B_{n+1}`.
#[derive(Clone, Debug)]
pub struct RandomNbd {
    rng: ChaCha8Rng,
    pool: Vec<Index>,
    growth: usize,
    countable: bool,
    pins: BTreeSet<Index>,
}

impl RandomNbd {
    pub fn new(seed: u64, pool: impl IntoIterator<Item = Index>, growth: usize, countable: bool) -> Self {
        RandomNbd {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: pool.into_iter().collect::<BTreeSet<_>>().into_iter().collect(),
            growth,
            countable,
            pins: BTreeSet::new(),
        }
    }

    fn add_random(&mut self, k: usize) {
        for _ in 0..k {
            let free: Vec<Index> = self.pool.iter().copied().filter(|i| !self.pins.contains(i)).collect();
            if free.is_empty() {
                return;
            }
            self.pins.insert(free[self.rng.random_range(0..free.len())]);
        }
    }
}

impl OneStrategy for RandomNbd {
    fn label(&self) -> String {
        format!("random-nbd(growth={})", self.growth)
    }

    fn next_move(&mut self, _: &GameSpec, history: &[InningRecord]) -> Result<OneMove> {
        let k = if history.is_empty() { 1 } else { self.growth };
        self.add_random(k);
        Ok(nbd_move(&self.pins, self.countable))
    }
}

/// Pins a prefix of a seeded shuffle of the pool, `step` more indices each
/// inning. In cover form it plays the unbounded cover
/// `x -> x * U_{B_n ∪ support(x)}`.
#[derive(Clone, Debug)]
pub struct Shrinking {
    order: Vec<Index>,
    step: usize,
    cover: bool,
    countable: bool,
}

impl Shrinking {
    pub fn new(seed: u64, pool: impl IntoIterator<Item = Index>, step: usize, cover: bool, countable: bool) -> Self {
        let mut order: Vec<Index> = pool.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Shrinking {
            order,
            step,
            cover,
            countable,
        }
    }
}

impl OneStrategy for Shrinking {
    fn label(&self) -> String {
        let form = if self.cover { "cover" } else { "nbd" };
        format!("shrinking-{form}(step={})", self.step)
    }

    fn next_move(&mut self, _: &GameSpec, history: &[InningRecord]) -> Result<OneMove> {
        let k = (self.step * (history.len() + 1)).min(self.order.len());
        let pins: BTreeSet<Index> = self.order[..k].iter().copied().collect();
        Ok(if self.cover {
            OneMove::cover(CoverOracle::Pinning { base: pins })
        } else {
            nbd_move(&pins, self.countable)
        })
    }
}

/// Fresh pseudo-random covers over a random nonempty part of the pool.
#[derive(Clone, Debug)]
pub struct RandomCover {
    rng: ChaCha8Rng,
    pool: Vec<Index>,
    spread: u32,
}

impl RandomCover {
    pub fn new(seed: u64, pool: impl IntoIterator<Item = Index>, spread: u32) -> Self {
        RandomCover {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: pool.into_iter().collect::<BTreeSet<_>>().into_iter().collect(),
            spread,
        }
    }

    /// The next cover, independent of any play.
    pub fn draw(&mut self) -> CoverOracle {
        let mut part: BTreeSet<Index> = self.pool.iter().copied().filter(|_| self.rng.random_bool(0.5)).collect();
        if part.is_empty() && !self.pool.is_empty() {
            part.insert(self.pool[self.rng.random_range(0..self.pool.len())]);
        }
        CoverOracle::hashed(self.rng.random(), part, self.spread)
    }
}

impl OneStrategy for RandomCover {
    fn label(&self) -> String {
        format!("random-cover(spread={})", self.spread)
    }

    fn next_move(&mut self, _: &GameSpec, _: &[InningRecord]) -> Result<OneMove> {
        Ok(OneMove::cover(self.draw()))
    }
}

/// Adaptive: each inning pins up to `rate` more pool indices on which TWO's
/// last move was unconstrained (falling back to any unpinned pool index).
#[derive(Clone, Debug)]
pub struct ProbeHunter {
    rng: ChaCha8Rng,
    pool: Vec<Index>,
    rate: usize,
    cover: bool,
    countable: bool,
    spread: u32,
    pins: BTreeSet<Index>,
}

impl ProbeHunter {
    pub fn new(seed: u64, pool: impl IntoIterator<Item = Index>, rate: usize, cover: bool, countable: bool) -> Self {
        ProbeHunter {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: pool.into_iter().collect::<BTreeSet<_>>().into_iter().collect(),
            rate: rate.max(1),
            cover,
            countable,
            spread: 1,
            pins: BTreeSet::new(),
        }
    }
}

impl OneStrategy for ProbeHunter {
    fn label(&self) -> String {
        let form = if self.cover { "cover" } else { "nbd" };
        format!("probe-hunter-{form}(rate={})", self.rate)
    }

    fn next_move(&mut self, _: &GameSpec, history: &[InningRecord]) -> Result<OneMove> {
        let constrained = match history.last().map(|r| &r.two_move) {
            Some(TwoMove::Member { set, .. }) => set.constrained(),
            _ => BTreeSet::new(),
        };
        for _ in 0..self.rate {
            let unpinned: Vec<Index> = self.pool.iter().copied().filter(|i| !self.pins.contains(i)).collect();
            let hunted: Vec<Index> = unpinned.iter().copied().filter(|i| !constrained.contains(i)).collect();
            let from = if hunted.is_empty() { &unpinned } else { &hunted };
            if from.is_empty() {
                break;
            }
            self.pins.insert(from[self.rng.random_range(0..from.len())]);
        }
        Ok(if self.cover {
            OneMove::cover(CoverOracle::hashed(self.rng.random(), self.pins.iter().copied(), self.spread))
        } else {
            nbd_move(&self.pins, self.countable)
        })
    }
}

/// Random increasing finite sets for the countable-1 game, with
/// `|W_n| >= n + 1`: each inning appends between one and three fresh random
/// elements supported in the pool with values in `[-values, values]`.
#[derive(Clone, Debug)]
pub struct RandomCountable {
    rng: ChaCha8Rng,
    pool: Vec<Index>,
    values: Value,
    members: Vec<Element>,
}

impl RandomCountable {
    pub fn new(seed: u64, pool: impl IntoIterator<Item = Index>, values: Value) -> Self {
        RandomCountable {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: pool.into_iter().collect::<BTreeSet<_>>().into_iter().collect(),
            values: values.max(1),
            members: Vec::new(),
        }
    }

    fn random_element(&mut self, game: &GameSpec) -> Element {
        let k = self.rng.random_range(0..=self.pool.len().min(3));
        let mut pool = self.pool.clone();
        pool.shuffle(&mut self.rng);
        Element::from_entries(pool.into_iter().take(k).map(|i| {
            let g = game.group.component(i);
            let v = match g.max_rank() {
                Some(top) => g.value_at(self.rng.random_range(0..=top)).unwrap_or(0),
                None => self.rng.random_range(-self.values..=self.values),
            };
            (i, v)
        }))
    }
}

impl OneStrategy for RandomCountable {
    fn label(&self) -> String {
        format!("random-countable(values={})", self.values)
    }

    fn next_move(&mut self, game: &GameSpec, history: &[InningRecord]) -> Result<OneMove> {
        let want = (history.len() + 1).max(self.members.len() + self.rng.random_range(1..=3));
        let mut tries = 0;
        while self.members.len() < want && tries < 10_000 {
            let x = self.random_element(game);
            if !self.members.contains(&x) {
                self.members.push(x);
            }
            tries += 1;
        }
        Ok(OneMove::countable(CountableSet::finite(self.members.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::GameKind;
    use crate::group::{ComponentGroup, GroupSpec, Kappa, Track, Window};

    fn game(kind: GameKind) -> GameSpec {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        GameSpec::new(kind, spec, Window::range(8), 100).unwrap()
    }

    fn fake_history(moves: &[OneMove]) -> Vec<InningRecord> {
        moves
            .iter()
            .enumerate()
            .map(|(n, m)| InningRecord {
                inning: n,
                one_move: m.clone(),
                two_move: TwoMove::point(Element::identity()),
                instrumentation: Default::default(),
            })
            .collect()
    }

    fn run(one: &mut dyn OneStrategy, g: &GameSpec, n: usize) -> Vec<OneMove> {
        let mut moves = Vec::new();
        for _ in 0..n {
            let h = fake_history(&moves);
            moves.push(one.next_move(g, &h).unwrap());
        }
        moves
    }

    #[test]
    fn scripted_repeats_its_last_move() {
        let g = game(GameKind::NbdCovers);
        let a = OneMove::nbd(NbdSubgroup::new([0]));
        let b = OneMove::nbd(NbdSubgroup::new([0, 1]));
        let moves = run(&mut Scripted::new(vec![a.clone(), b.clone()]), &g, 4);
        assert_eq!(moves, vec![a, b.clone(), b.clone(), b]);
    }

    #[test]
    fn random_nbd_grows_by_one_and_is_deterministic() {
        let g = game(GameKind::NbdCovers);
        let first = run(&mut RandomNbd::new(1, 0..8, 1, false), &g, 8);
        let again = run(&mut RandomNbd::new(1, 0..8, 1, false), &g, 8);
        assert_eq!(first, again);
        let mut prev = BTreeSet::new();
        for (n, m) in first.iter().enumerate() {
            let OneMove::Nbd { nbd } = m else { panic!() };
            assert_eq!(nbd.pins().len(), n + 1);
            assert!(nbd.pins().is_superset(&prev));
            prev = nbd.pins().clone();
        }
    }

    #[test]
    fn random_countable_is_monotone_and_large_enough() {
        let g = game(GameKind::CountableOne);
        let moves = run(&mut RandomCountable::new(5, 0..4, 3), &g, 30);
        let spec = &g.group;
        for (n, m) in moves.iter().enumerate() {
            let OneMove::Countable { set } = m else { panic!() };
            assert!(set.size(spec).unwrap() > n as u128);
            if n > 0 {
                let OneMove::Countable { set: before } = &moves[n - 1] else { panic!() };
                assert_eq!(set.missing_from(before, spec), None);
            }
        }
    }
}
