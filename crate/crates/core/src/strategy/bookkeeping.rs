//! TWO's strategy in the countable-1 game.
//!
//! Every member of `W_0 ∪ W_1 ∪ ...` gets a rank the first time TWO looks at
//! it. Inning `n` serves slot `(r, j) = unpair(n)`: TWO plays the rank-`r`
//! member if it exists, otherwise the first member of `W_n`. A member of
//! rank `r` that was seen by inning `pair(r, 0)` is therefore played at
//! least `m` times by inning `bound(r, m)`.

use std::collections::HashMap;

use super::schedule::unpair;
use crate::error::{Error, Player, Result};
use crate::game::{
    CountableSet, GameSpec, Instrumentation, OneMove, ScheduleRecord, TwoMove, TwoReply, TwoStrategy,
};
use crate::group::{Element, GroupSpec};

#[derive(Clone, Debug, Default)]
pub struct Bookkeeper {
    seen: Vec<Element>,
    ranks: HashMap<Element, u64>,
}

impl Bookkeeper {
    pub fn new() -> Self {
        Bookkeeper::default()
    }

    /// Members in rank order.
    pub fn seen(&self) -> &[Element] {
        &self.seen
    }

    pub fn rank_of(&self, x: &Element) -> Option<u64> {
        self.ranks.get(x).copied()
    }

    /// Looks at the first `n + 1` members of `w` and returns the member to
    /// play at inning `n`.
    pub fn step(&mut self, n: usize, w: &CountableSet, spec: &GroupSpec) -> Result<(Element, ScheduleRecord)> {
        let first = w
            .nth(0, spec)
            .ok_or_else(|| Error::legality(n, Player::One, "nonempty", "W_n must be nonempty"))?;
        let mut ingested = Vec::new();
        for k in 0..=n as u128 {
            let Some(x) = w.nth(k, spec) else { break };
            if !self.ranks.contains_key(&x) {
                self.ranks.insert(x.clone(), self.seen.len() as u64);
                self.seen.push(x.clone());
                ingested.push(x);
            }
        }
        let slot = unpair(n as u64);
        let (x, rank, fallback) = match self.seen.get(slot.0 as usize) {
            Some(x) => (x.clone(), slot.0, false),
            None => {
                let rank = self.ranks[&first];
                (first, rank, true)
            }
        };
        let record = ScheduleRecord {
            slot,
            rank,
            fallback,
            ingested,
            seen: self.seen.len() as u64,
        };
        Ok((x, record))
    }
}

/// [`Bookkeeper`] as a strategy for the countable-1 game.
#[derive(Clone, Debug, Default)]
pub struct BookkeepingTwo {
    keeper: Bookkeeper,
}

impl BookkeepingTwo {
    pub fn new() -> Self {
        BookkeepingTwo::default()
    }
}

impl TwoStrategy for BookkeepingTwo {
    fn label(&self) -> String {
        "bookkeeping".into()
    }

    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply> {
        let OneMove::Countable { set } = one else {
            return Err(Error::legality(inning, Player::One, "move-kind", format!("expected a countable set, got {one}")));
        };
        let (x, schedule) = self.keeper.step(inning, set, &game.group)?;
        Ok(TwoReply {
            mv: TwoMove::point(x),
            instrumentation: Instrumentation {
                schedule: Some(schedule),
                ..Instrumentation::default()
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Kappa, Track};
    use crate::strategy::schedule::{pair, unpair};

    fn z() -> GroupSpec {
        GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers)
    }

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn run(sets: impl Fn(usize) -> CountableSet, innings: usize) -> Vec<Element> {
        let spec = z();
        let mut k = Bookkeeper::new();
        (0..innings).map(|n| k.step(n, &sets(n), &spec).unwrap().0).collect()
    }

    #[test]
    fn fixed_pair_serves_rank_zero_on_the_diagonal() {
        let (a, b) = (el("0:1"), el("1:1"));
        let w = CountableSet::finite(vec![a.clone(), b.clone()]);
        let played = run(|_| w.clone(), 12);
        let at: Vec<usize> = (0..12).filter(|&n| played[n] == a && unpair(n as u64).0 == 0).collect();
        assert_eq!(&at[..3], &[0, 2, 5]);
        assert_eq!(played[1], b);
    }

    #[test]
    fn single_member_is_played_every_inning() {
        let w = CountableSet::finite(vec![el("3:2")]);
        assert!(run(|_| w.clone(), 20).iter().all(|x| *x == el("3:2")));
    }

    #[test]
    fn late_member_is_served_on_its_piece() {
        // W_n lists n + 1 distinct singletons, so the member at position 7
        // first appears at inning 7 and gets rank 7
        let sets = |n: usize| CountableSet::finite((0..=n as u32).map(|i| Element::singleton(i, 1)).collect());
        let played = run(sets, 200);
        let late = Element::singleton(7, 1);
        for (n, x) in played.iter().enumerate().skip(7) {
            if unpair(n as u64).0 == 7 {
                assert_eq!(*x, late, "inning {n}");
            }
        }
        assert_eq!(played[pair(7, 0) as usize], late);
    }

    #[test]
    fn empty_set_is_a_fault_of_one() {
        let mut k = Bookkeeper::new();
        let err = k.step(0, &CountableSet::finite(vec![]), &z()).unwrap_err();
        assert!(matches!(err, Error::Legality { player: Player::One, .. }));
    }
}
