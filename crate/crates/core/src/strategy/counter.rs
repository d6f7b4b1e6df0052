//! Defeating an arbitrary strategy of ONE in `G1(O, O)` on a sigma-compact
//! group.
//!
//! The innings are partitioned into the infinite pieces
//! `S_m = {k : unpair(k).0 = m}`. At inning `k ∈ S_m` TWO looks at ONE's
//! cover `O_k`, extracts the finite subcover `{choose(x) : x in G_m}`, gets
//! `N_k` from the compact Lebesgue lemma, picks a target `x_k` in `X ∩ G_m`,
//! and plays the first subcover member containing `x_k * N_k`.
//!
//! Only the branch actually played is built, so `N_k` depends on ONE's move
//! at `k` alone rather than on every possible history.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::schedule::unpair;
use crate::error::{Error, Player, Result};
use crate::game::{play, GameSpec, Instrumentation, OneMove, OneStrategy, Transcript, TwoMove, TwoReply, TwoStrategy};
use crate::group::{Element, GroupSpec, Window};
use crate::topology::{lebesgue_compact, BasicOpen, CompactPiece, NbdSubgroup, DEFAULT_PIECE_CAP};

/// The set `X` TWO concentrates on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TargetSet {
    /// The whole group.
    #[default]
    All,
    Members { members: BTreeSet<Element> },
}

impl TargetSet {
    pub fn contains(&self, x: &Element) -> bool {
        match self {
            TargetSet::All => true,
            TargetSet::Members { members } => members.contains(x),
        }
    }

    /// `X ∩ G_m` within the window, in piece order.
    pub fn in_piece(&self, m: u64, window: &Window, spec: &GroupSpec) -> Vec<Element> {
        CompactPiece::new(m).iter(window, spec).filter(|x| self.contains(x)).collect()
    }
}

/// A `y ∈ X` with `x * N ∩ X ⊆ y * N`, when `x * N` meets `X`.
///
/// `candidates` lists `X` (or the part of it that matters). Since `N` is a
/// subgroup, any member of `x * N ∩ X` works, and `y * N = x * N`.
pub fn recentre(x: &Element, nbd: &NbdSubgroup, candidates: &[Element]) -> Option<Element> {
    let coset = nbd.coset(x);
    candidates.iter().find(|y| coset.contains(y)).cloned()
}

/// TWO's side of the construction.
#[derive(Clone, Debug)]
pub struct CounterTwo {
    target: TargetSet,
    cap: u64,
    played: Vec<BasicOpen>,
}

impl CounterTwo {
    pub fn new(target: TargetSet, cap: u64) -> Self {
        CounterTwo {
            target,
            cap,
            played: Vec::new(),
        }
    }

    /// `x_k`: the first point of `X ∩ G_m` no earlier move covers, or the
    /// `j`-th point cyclically once all are covered.
    fn pick_target(&self, points: &[Element], j: u64) -> Option<Element> {
        if points.is_empty() {
            return None;
        }
        points
            .iter()
            .find(|p| !self.played.iter().any(|t| t.contains(p)))
            .or_else(|| points.get((j % points.len() as u64) as usize))
            .cloned()
    }
}

impl Default for CounterTwo {
    fn default() -> Self {
        CounterTwo::new(TargetSet::All, DEFAULT_PIECE_CAP)
    }
}

impl TwoStrategy for CounterTwo {
    fn label(&self) -> String {
        "counter-play".into()
    }

    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply> {
        let spec = &game.group;
        let OneMove::Cover { cover } = one else {
            return Err(Error::legality(inning, Player::One, "move-kind", format!("expected an open cover, got {one}")));
        };
        let (m, j) = unpair(inning as u64);
        let piece = CompactPiece::new(m).enumerate(&game.window, spec, self.cap)?;
        // finite subcover, with the point each member was chosen at
        let mut subcover: Vec<(BasicOpen, Element)> = Vec::new();
        for x in &piece {
            let u = cover.choose(x, spec).ok_or_else(|| {
                Error::legality(inning, Player::One, "cover", format!("{cover} has no member containing ({x})"))
            })?;
            if !subcover.iter().any(|(v, _)| *v == u) {
                subcover.push((u, x.clone()));
            }
        }
        let n = lebesgue_compact(cover, m, &game.window, spec, self.cap)?;
        let points = self.target.in_piece(m, &game.window, spec);
        let target = self.pick_target(&points, j).unwrap_or_else(Element::identity);
        let wanted = n.coset(&target);
        let (set, witness) = subcover
            .iter()
            .find(|(u, _)| wanted.is_subset(u, spec))
            .cloned()
            .ok_or_else(|| Error::Contract(format!("no member of {cover} contains ({target}) * {n}")))?;
        self.played.push(set.clone());
        Ok(TwoReply {
            mv: TwoMove::member(set, witness),
            instrumentation: Instrumentation {
                nbd: Some(n),
                piece: Some(m),
                subcover: Some(subcover.len()),
                target: Some(target),
                ..Instrumentation::default()
            },
        })
    }
}

/// Plays `f` against the construction for `innings` innings.
pub fn counter_play(
    f: &mut dyn OneStrategy,
    game: &GameSpec,
    target: TargetSet,
    innings: usize,
    seed: u64,
    probes: Vec<Element>,
) -> Result<Transcript> {
    let mut two = CounterTwo::new(target, DEFAULT_PIECE_CAP);
    play(game, f, &mut two, innings, seed, probes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{validate, GameKind, InningRecord};
    use crate::group::{ComponentGroup, Kappa, Track};
    use crate::topology::CoverOracle;

    struct Constant(CoverOracle);

    impl OneStrategy for Constant {
        fn label(&self) -> String {
            "constant".into()
        }
        fn next_move(&mut self, _: &GameSpec, _: &[InningRecord]) -> Result<OneMove> {
            Ok(OneMove::cover(self.0.clone()))
        }
    }

    fn game(c: ComponentGroup, w: u32) -> GameSpec {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, c);
        GameSpec::new(GameKind::OpenCovers, spec, Window::range(w), 100).unwrap()
    }

    #[test]
    fn whole_cover_is_met_with_the_whole_group() {
        let g = game(ComponentGroup::Integers, 2);
        let t = counter_play(&mut Constant(CoverOracle::Whole), &g, TargetSet::All, 5, 0, vec![]).unwrap();
        assert!(validate(&t).is_valid());
        assert_eq!(t.coverage(&"0:7".parse().unwrap()), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn coset_cover_covers_the_small_piece() {
        let g = game(ComponentGroup::cyclic(2).unwrap(), 3);
        let t = counter_play(&mut Constant(CoverOracle::coset([0, 1, 2])), &g, TargetSet::All, 64, 0, vec![]).unwrap();
        assert!(validate(&t).is_valid());
        for x in CompactPiece::new(2).iter(&g.window, &g.group) {
            assert!(!t.coverage(&x).is_empty(), "{x}");
        }
    }

    #[test]
    fn recentre_matches_brute_force() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        let w = Window::range(3);
        let xs = CompactPiece::new(2).enumerate(&w, &spec, 10_000).unwrap();
        let target: Vec<Element> = xs.iter().filter(|x| x.get(1) >= 0).cloned().collect();
        for pins in [vec![], vec![0], vec![0, 2], vec![0, 1, 2]] {
            let n = NbdSubgroup::new(pins);
            for x in &xs {
                let meets: Vec<&Element> = target.iter().filter(|y| n.coset(x).contains(y)).collect();
                match recentre(x, &n, &target) {
                    None => assert!(meets.is_empty()),
                    Some(y) => {
                        for z in meets {
                            assert!(n.coset(&y).contains(z));
                        }
                        assert!(n.coset(&y).same_set(&n.coset(x), &spec));
                    }
                }
            }
        }
    }
}
