use serde::{Deserialize, Serialize};

use super::moves::{GameKind, OneMove, TwoMove};
use super::rules::{check_one, check_two};
use super::transcript::{Header, InningRecord, Instrumentation, Outcome, Transcript, TRANSCRIPT_FORMAT};
use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, Window};

/// The game being refereed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameSpec {
    pub kind: GameKind,
    pub group: GroupSpec,
    pub window: Window,
    pub inning_cap: usize,
}

impl GameSpec {
    pub fn new(kind: GameKind, group: GroupSpec, window: Window, inning_cap: usize) -> Result<Self> {
        let spec = GameSpec {
            kind,
            group,
            window,
            inning_cap,
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        if self.inning_cap == 0 {
            return Err(Error::Config("inning cap must be at least 1".into()));
        }
        if let Some(i) = self.window.iter().find(|&i| !self.group.kappa.admits(i)) {
            return Err(Error::Config(format!(
                "window index {i} is not below kappa = {}",
                self.group.kappa
            )));
        }
        Ok(())
    }
}

/// A strategy for ONE. May look at the whole history.
pub trait OneStrategy {
    fn label(&self) -> String;
    fn next_move(&mut self, game: &GameSpec, history: &[InningRecord]) -> Result<OneMove>;
}

/// TWO's answer plus whatever internal state it wants recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoReply {
    pub mv: TwoMove,
    pub instrumentation: Instrumentation,
}

impl TwoReply {
    pub fn bare(mv: TwoMove) -> Self {
        TwoReply {
            mv,
            instrumentation: Instrumentation::default(),
        }
    }
}

/// A strategy for TWO. Sees only ONE's current move and its own state.
pub trait TwoStrategy {
    fn label(&self) -> String;
    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply>;
}

/// Inning-by-inning referee. Every move is checked before it is recorded;
/// the first illegal move aborts the play with a legality fault.
#[derive(Clone, Debug)]
pub struct Referee {
    game: GameSpec,
    seed: u64,
    probes: Vec<Element>,
    one_label: String,
    two_label: String,
    records: Vec<InningRecord>,
}

impl Referee {
    pub fn new(game: GameSpec, seed: u64, probes: Vec<Element>) -> Result<Self> {
        game.check()?;
        for p in &probes {
            if !game.window.covers(p) {
                return Err(Error::Config(format!("probe ({p}) is outside the window")));
            }
            game.group.check(p).map_err(|e| Error::Config(e.to_string()))?;
        }
        Ok(Referee {
            game,
            seed,
            probes,
            one_label: String::new(),
            two_label: String::new(),
            records: Vec::new(),
        })
    }

    pub fn with_labels(mut self, one: impl Into<String>, two: impl Into<String>) -> Self {
        self.one_label = one.into();
        self.two_label = two.into();
        self
    }

    pub fn game(&self) -> &GameSpec {
        &self.game
    }

    /// Number of the next inning.
    pub fn inning(&self) -> usize {
        self.records.len()
    }

    pub fn records(&self) -> &[InningRecord] {
        &self.records
    }

    pub fn is_capped(&self) -> bool {
        self.records.len() >= self.game.inning_cap
    }

    /// Would `mv` be legal for ONE at the next inning?
    pub fn check_one(&self, mv: &OneMove) -> Result<()> {
        let prev = self.records.last().map(|r| &r.one_move);
        check_one(self.game.kind, &self.game.group, &self.game.window, mv, prev)
            .map_err(|f| f.at(self.inning()))
    }

    /// Plays one inning with ONE's move `one`.
    pub fn play_inning(&mut self, one: OneMove, two: &mut dyn TwoStrategy) -> Result<&InningRecord> {
        let n = self.inning();
        if self.is_capped() {
            return Err(Error::Config(format!("inning cap {} reached", self.game.inning_cap)));
        }
        self.check_one(&one)?;
        let reply = two.respond(&self.game, n, &one)?;
        check_two(&self.game.group, &self.game.window, &one, &reply.mv).map_err(|f| f.at(n))?;
        let mut instrumentation = reply.instrumentation;
        instrumentation.window = self.game.window.clone();
        self.records.push(InningRecord {
            inning: n,
            one_move: one,
            two_move: reply.mv,
            instrumentation,
        });
        Ok(self.records.last().expect("just pushed"))
    }

    pub fn finish(self, outcome: Outcome) -> Transcript {
        Transcript {
            header: Header {
                format: TRANSCRIPT_FORMAT.to_string(),
                game: self.game.kind,
                group: self.game.group,
                window: self.game.window,
                seed: self.seed,
                inning_cap: self.game.inning_cap,
                innings: self.records.len(),
                one: self.one_label,
                two: self.two_label,
                probes: self.probes,
                outcome,
            },
            innings: self.records,
        }
    }
}

/// Plays exactly `innings` innings.
pub fn play(
    game: &GameSpec,
    one: &mut dyn OneStrategy,
    two: &mut dyn TwoStrategy,
    innings: usize,
    seed: u64,
    probes: Vec<Element>,
) -> Result<Transcript> {
    if innings == 0 || innings > game.inning_cap {
        return Err(Error::Config(format!(
            "innings must be between 1 and the cap {}, got {innings}",
            game.inning_cap
        )));
    }
    let mut referee = Referee::new(game.clone(), seed, probes)?.with_labels(one.label(), two.label());
    for _ in 0..innings {
        let mv = one.next_move(&referee.game, referee.records())?;
        referee.play_inning(mv, two)?;
    }
    Ok(referee.finish(Outcome::Truncated))
}
