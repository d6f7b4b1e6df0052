//! TWO's winning strategy in `G1(O_nbd, O)`.
//!
//! ONE's move `O(U_{B_n})` is replaced internally by `O(U_{C_n})` with
//! `C_n = B_0 ∪ ... ∪ B_n`. The canonical coset representatives `A_n` of
//! `U_{C_n}` (elements supported in `C_n`) only grow, so they are fed to a
//! countable-1 bookkeeper as ONE's move there. Its answer `x_n` gives the
//! refined coset `x_n * U_{C_n}`; TWO plays the coarser legal member
//! `x_n * U_{B_n}`.

use std::collections::BTreeSet;

use super::bookkeeping::Bookkeeper;
use crate::error::{Error, Player, Result};
use crate::game::{CosetRecord, CountableSet, GameSpec, Instrumentation, OneMove, SetSize, TwoMove, TwoReply, TwoStrategy};
use crate::group::{Element, GroupSpec, Index};
use crate::topology::NbdSubgroup;

#[derive(Clone, Debug, Default)]
pub struct NbdTwo {
    keeper: Bookkeeper,
    refined: BTreeSet<Index>,
    countable: bool,
}

impl NbdTwo {
    pub fn new() -> Self {
        NbdTwo::default()
    }

    /// `C_n` so far.
    pub fn refined_pins(&self) -> &BTreeSet<Index> {
        &self.refined
    }

    /// The representative `x_n` answering `O(U_B)` at inning `n`, with the
    /// refinement recorded.
    pub fn answer(&mut self, n: usize, nbd: &NbdSubgroup, spec: &GroupSpec) -> Result<(Element, Instrumentation)> {
        self.refined.extend(nbd.pins().iter().copied());
        self.countable |= nbd.is_countable();
        let reps = CountableSet::Supported {
            pins: self.refined.clone(),
        };
        let (x, schedule) = self.keeper.step(n, &reps, spec)?;
        let c = NbdSubgroup::new(self.refined.iter().copied()).with_countable(self.countable);
        let instrumentation = Instrumentation {
            refined: Some(CosetRecord::new(x.clone(), c)),
            reps: Some(SetSize::from(reps.size(spec))),
            schedule: Some(schedule),
            ..Instrumentation::default()
        };
        Ok((x, instrumentation))
    }
}

impl TwoStrategy for NbdTwo {
    fn label(&self) -> String {
        "nbd".into()
    }

    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply> {
        let OneMove::Nbd { nbd } = one else {
            return Err(Error::legality(inning, Player::One, "move-kind", format!("expected O(U_B), got {one}")));
        };
        let (x, instrumentation) = self.answer(inning, nbd, &game.group)?;
        Ok(TwoReply {
            mv: TwoMove::member(nbd.coset(&x), x),
            instrumentation,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{play, validate, GameKind, InningRecord, OneStrategy};
    use crate::group::{ComponentGroup, Kappa, Track, Window};

    struct Fixed(Vec<NbdSubgroup>);

    impl OneStrategy for Fixed {
        fn label(&self) -> String {
            "fixed".into()
        }
        fn next_move(&mut self, _: &GameSpec, h: &[InningRecord]) -> Result<OneMove> {
            Ok(OneMove::nbd(self.0[h.len().min(self.0.len() - 1)].clone()))
        }
    }

    fn game(c: ComponentGroup, w: u32) -> GameSpec {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, c);
        GameSpec::new(GameKind::NbdCovers, spec, Window::range(w), 1000).unwrap()
    }

    #[test]
    fn empty_pins_cover_everything_every_inning() {
        let g = game(ComponentGroup::Integers, 3);
        let t = play(&g, &mut Fixed(vec![NbdSubgroup::whole()]), &mut NbdTwo::new(), 10, 0, vec![]).unwrap();
        assert!(validate(&t).is_valid());
        for probe in ["id", "0:5", "1:-3,2:9"] {
            assert_eq!(t.coverage(&probe.parse().unwrap()).len(), 10);
        }
    }

    #[test]
    fn cyclic_probe_is_covered_within_its_bound() {
        let g = game(ComponentGroup::cyclic(2).unwrap(), 2);
        let moves = vec![NbdSubgroup::new([0]), NbdSubgroup::new([0, 1])];
        let t = play(&g, &mut Fixed(moves), &mut NbdTwo::new(), 30, 0, vec![]).unwrap();
        assert!(validate(&t).is_valid());
        let cov = t.coverage(&"1:1".parse().unwrap());
        assert!(!cov.is_empty());
        // four representatives, all seen by inning 3, so rank <= 3 is served
        // by pair(3, 0) = 6
        assert!(cov[0] <= 6);
    }

    #[test]
    fn played_set_is_the_coarse_coset() {
        let g = game(ComponentGroup::Integers, 4);
        let moves = vec![NbdSubgroup::new([1]), NbdSubgroup::new([0])];
        let t = play(&g, &mut Fixed(moves), &mut NbdTwo::new(), 8, 0, vec![]).unwrap();
        for r in &t.innings {
            let refined = r.instrumentation.refined.as_ref().unwrap();
            if r.inning >= 1 {
                assert_eq!(refined.nbd.pins(), &BTreeSet::from([0, 1]));
            }
            let TwoMove::Member { set, witness } = &r.two_move else { panic!() };
            assert_eq!(witness, &refined.rep);
            assert!(refined.open().is_subset(set, &g.group));
        }
    }
}
