//! Play records and their JSON Lines file form.
//!
//! A transcript file is one header object on the first line followed by one
//! inning record per line. Field order is fixed by the struct definitions
//! and every set is ordered, so serialization is byte-stable.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::moves::{GameKind, OneMove, TwoMove};
use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, Window};
use crate::topology::{BasicOpen, NbdSubgroup};

pub const TRANSCRIPT_FORMAT: &str = "rothberger-transcript/1";

/// A coset `rep * U_B` as recorded in instrumentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRecord {
    pub rep: Element,
    pub nbd: NbdSubgroup,
}

impl CosetRecord {
    pub fn new(rep: Element, nbd: NbdSubgroup) -> Self {
        CosetRecord { rep, nbd }
    }

    pub fn open(&self) -> BasicOpen {
        self.nbd.coset(&self.rep)
    }
}

impl fmt::Display for CosetRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * {}", self.rep, self.nbd)
    }
}

/// Size of a countable set: finite count or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetSize {
    Finite(u128),
    Infinite,
}

impl From<Option<u128>> for SetSize {
    fn from(n: Option<u128>) -> Self {
        n.map_or(SetSize::Infinite, SetSize::Finite)
    }
}

impl fmt::Display for SetSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSize::Finite(n) => write!(f, "{n}"),
            SetSize::Infinite => write!(f, "infinite"),
        }
    }
}

/// What the bookkeeping schedule did at an inning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScheduleRecord {
    /// `(r, j) = unpair(inning)`.
    pub slot: (u64, u64),
    /// Rank of the member played, in the merged enumeration.
    pub rank: u64,
    /// True when rank `r` was not yet seen and the first member of `W_n`
    /// was played instead.
    #[serde(default, skip_serializing_if = "is_false")]
    pub fallback: bool,
    /// Members of `W_n` that got their first rank at this inning.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ingested: Vec<Element>,
    /// Size of the merged enumeration after ingesting.
    pub seen: u64,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// Strategy-internal state exposed for invariant checking. Every field is
/// optional; strategies fill what applies to them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Instrumentation {
    /// The refined coset `x_n * U_{C_n}` with `C_n = B_0 ∪ ... ∪ B_n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refined: Option<CosetRecord>,
    /// `|A_n|`, the number of coset representatives of `U_{C_n}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<SetSize>,
    /// The neighborhood `N_n` produced by a Lebesgue lemma.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nbd: Option<NbdSubgroup>,
    /// The coset an inner neighborhood-game strategy answered with.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<CosetRecord>,
    /// The compact piece consulted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub piece: Option<u64>,
    /// The inner coset missed the piece, so the played set need not contain
    /// it.
    #[serde(default, skip_serializing_if = "is_false")]
    pub fallback: bool,
    /// Size of the finite subcover extracted from ONE's cover.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subcover: Option<usize>,
    /// The target point `x_k` of the counter-play construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<ScheduleRecord>,
    /// Window at the time of the inning.
    pub window: Window,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InningRecord {
    pub inning: usize,
    pub one_move: OneMove,
    pub two_move: TwoMove,
    pub instrumentation: Instrumentation,
}

/// How a play ended. Plays are never "won": the engine only reports probe
/// evidence for the infinite play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// Reached the requested number of innings without a fault.
    Truncated,
    /// Ended early by the human player.
    Quit,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Truncated => write!(f, "truncated"),
            Outcome::Quit => write!(f, "quit"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Header {
    pub format: String,
    pub game: GameKind,
    pub group: GroupSpec,
    pub window: Window,
    pub seed: u64,
    pub inning_cap: usize,
    pub innings: usize,
    pub one: String,
    pub two: String,
    pub probes: Vec<Element>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub header: Header,
    pub innings: Vec<InningRecord>,
}

impl Transcript {
    /// Innings at which TWO's move captures `probe`.
    pub fn coverage(&self, probe: &Element) -> Vec<usize> {
        self.innings
            .iter()
            .filter(|r| r.two_move.covers(probe))
            .map(|r| r.inning)
            .collect()
    }

    /// Coverage of every header probe, in header order.
    pub fn probe_coverage(&self) -> Vec<(Element, Vec<usize>)> {
        self.header
            .probes
            .iter()
            .map(|p| (p.clone(), self.coverage(p)))
            .collect()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = serde_json::to_string(&self.header).expect("header serializes");
        out.push('\n');
        for r in &self.innings {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        Self::read(text.as_bytes())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines().enumerate().filter(|(_, l)| match l {
            Ok(l) => !l.trim().is_empty(),
            Err(_) => true,
        });
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::Parse("transcript is empty".into()))?;
        let header: Header = serde_json::from_str(&first?)
            .map_err(|e| Error::Parse(format!("line 1: header: {e}")))?;
        if header.format != TRANSCRIPT_FORMAT {
            return Err(Error::Parse(format!("unknown transcript format `{}`", header.format)));
        }
        let mut innings = Vec::new();
        for (no, line) in lines {
            let record: InningRecord = serde_json::from_str(&line?)
                .map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
            innings.push(record);
        }
        Ok(Transcript { header, innings })
    }

    pub fn write<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_jsonl().as_bytes())?;
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_jsonl())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read(std::io::BufReader::new(f))
    }

    /// Inning records with window snapshots blanked, for comparing runs over
    /// different windows.
    pub fn records_without_windows(&self) -> Vec<String> {
        self.innings
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.instrumentation.window = Window::default();
                serde_json::to_string(&r).expect("record serializes")
            })
            .collect()
    }
}
