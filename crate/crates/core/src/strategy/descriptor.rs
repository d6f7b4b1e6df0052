//! Strategy descriptors as they appear in run configurations.

use serde::{Deserialize, Serialize};

use super::adversary::{ProbeHunter, RandomCountable, RandomCover, RandomNbd, Scripted, Shrinking};
use super::bookkeeping::BookkeepingTwo;
use super::counter::{CounterTwo, TargetSet};
use super::nbd::NbdTwo;
use super::open_covers::{PGroupTwo, SigmaTwo};
use crate::error::{Error, Result};
use crate::game::{GameKind, GameSpec, OneMove, OneStrategy, TwoStrategy};
use crate::group::{Index, Track, Value};
use crate::topology::{CoverOracle, DEFAULT_PIECE_CAP};

fn one() -> usize {
    1
}

fn two() -> usize {
    2
}

fn one_u32() -> u32 {
    1
}

fn three() -> Value {
    3
}

fn cap() -> u64 {
    DEFAULT_PIECE_CAP
}

/// A strategy for ONE. `seed` defaults to the run seed and `pool` to the
/// window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum OneSpec {
    Scripted {
        moves: Vec<OneMove>,
    },
    /// Plays the same cover every inning.
    Constant {
        cover: CoverOracle,
    },
    RandomNbd {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "one")]
        growth: usize,
        #[serde(default)]
        countable: bool,
    },
    ShrinkingNbd {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "two")]
        step: usize,
        #[serde(default)]
        countable: bool,
    },
    /// Greedy shrinking covers `x -> x * U_{B_n ∪ support(x)}`.
    ShrinkingCover {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "one")]
        step: usize,
    },
    RandomCover {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "one_u32")]
        spread: u32,
    },
    ProbeHunter {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "one")]
        rate: usize,
        #[serde(default)]
        cover: bool,
        #[serde(default)]
        countable: bool,
    },
    RandomCountable {
        seed: Option<u64>,
        pool: Option<Vec<Index>>,
        #[serde(default = "three")]
        values: Value,
    },
}

impl OneSpec {
    /// The game this strategy plays.
    pub fn game_kind(&self) -> Option<GameKind> {
        match self {
            OneSpec::Scripted { moves } => moves.first().map(OneMove::kind),
            OneSpec::Constant { .. } | OneSpec::ShrinkingCover { .. } | OneSpec::RandomCover { .. } => {
                Some(GameKind::OpenCovers)
            }
            OneSpec::RandomNbd { .. } | OneSpec::ShrinkingNbd { .. } => Some(GameKind::NbdCovers),
            OneSpec::ProbeHunter { cover, .. } => Some(if *cover {
                GameKind::OpenCovers
            } else {
                GameKind::NbdCovers
            }),
            OneSpec::RandomCountable { .. } => Some(GameKind::CountableOne),
        }
    }

    pub fn build(&self, game: &GameSpec, run_seed: u64) -> Result<Box<dyn OneStrategy>> {
        if self.game_kind() != Some(game.kind) {
            return Err(Error::Config(format!(
                "ONE strategy `{}` does not play {}",
                self.name(),
                game.kind
            )));
        }
        let pool = |p: &Option<Vec<Index>>| -> Result<Vec<Index>> {
            let pool = p.clone().unwrap_or_else(|| game.window.iter().collect());
            match pool.iter().find(|&&i| !game.window.contains(i)) {
                Some(i) => Err(Error::Config(format!("pool index {i} is outside the window"))),
                None => Ok(pool),
            }
        };
        let seed = |s: &Option<u64>| s.unwrap_or(run_seed);
        let countable_ok = |c: bool| -> Result<()> {
            if c && game.group.track == Track::Product {
                Err(Error::Config("countable neighborhoods need track = \"box-gdelta\"".into()))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            OneSpec::Scripted { moves } => Box::new(Scripted::new(moves.clone())),
            OneSpec::Constant { cover } => Box::new(Scripted::new(vec![OneMove::cover(cover.clone())])),
            OneSpec::RandomNbd { seed: s, pool: p, growth, countable } => {
                countable_ok(*countable)?;
                Box::new(RandomNbd::new(seed(s), pool(p)?, *growth, *countable))
            }
            OneSpec::ShrinkingNbd { seed: s, pool: p, step, countable } => {
                countable_ok(*countable)?;
                Box::new(Shrinking::new(seed(s), pool(p)?, *step, false, *countable))
            }
            OneSpec::ShrinkingCover { seed: s, pool: p, step } => {
                Box::new(Shrinking::new(seed(s), pool(p)?, *step, true, false))
            }
            OneSpec::RandomCover { seed: s, pool: p, spread } => Box::new(RandomCover::new(seed(s), pool(p)?, *spread)),
            OneSpec::ProbeHunter { seed: s, pool: p, rate, cover, countable } => {
                countable_ok(*countable)?;
                Box::new(ProbeHunter::new(seed(s), pool(p)?, *rate, *cover, *countable))
            }
            OneSpec::RandomCountable { seed: s, pool: p, values } => {
                Box::new(RandomCountable::new(seed(s), pool(p)?, *values))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            OneSpec::Scripted { .. } => "scripted",
            OneSpec::Constant { .. } => "constant",
            OneSpec::RandomNbd { .. } => "random-nbd",
            OneSpec::ShrinkingNbd { .. } => "shrinking-nbd",
            OneSpec::ShrinkingCover { .. } => "shrinking-cover",
            OneSpec::RandomCover { .. } => "random-cover",
            OneSpec::ProbeHunter { .. } => "probe-hunter",
            OneSpec::RandomCountable { .. } => "random-countable",
        }
    }
}

/// A strategy for TWO.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TwoSpec {
    Bookkeeping,
    Nbd,
    Pgroup,
    Sigma {
        #[serde(default = "cap")]
        cap: u64,
    },
    CounterPlay {
        #[serde(default)]
        target: TargetSet,
        #[serde(default = "cap")]
        cap: u64,
    },
}

impl TwoSpec {
    pub fn game_kind(&self) -> GameKind {
        match self {
            TwoSpec::Bookkeeping => GameKind::CountableOne,
            TwoSpec::Nbd => GameKind::NbdCovers,
            TwoSpec::Pgroup | TwoSpec::Sigma { .. } | TwoSpec::CounterPlay { .. } => GameKind::OpenCovers,
        }
    }

    pub fn build(&self, game: &GameSpec) -> Result<Box<dyn TwoStrategy>> {
        if self.game_kind() != game.kind {
            return Err(Error::Config(format!("TWO strategy does not play {}", game.kind)));
        }
        let track = game.group.track;
        Ok(match self {
            TwoSpec::Bookkeeping => Box::new(BookkeepingTwo::new()),
            TwoSpec::Nbd => Box::new(NbdTwo::new()),
            TwoSpec::Pgroup => {
                if track != Track::BoxGdelta {
                    return Err(Error::Config("the P-group strategy needs track = \"box-gdelta\"".into()));
                }
                Box::new(PGroupTwo::new())
            }
            TwoSpec::Sigma { cap } => {
                if track != Track::Product {
                    return Err(Error::Config("the sigma-compact strategy needs track = \"product\"".into()));
                }
                Box::new(SigmaTwo::new(*cap))
            }
            TwoSpec::CounterPlay { target, cap } => {
                if track != Track::Product {
                    return Err(Error::Config("counter-play needs track = \"product\"".into()));
                }
                Box::new(CounterTwo::new(target.clone(), *cap))
            }
        })
    }
}
