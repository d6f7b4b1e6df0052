//! Referee, transcripts, and offline validation for the selection games.
//!
//! ONE moves first in every inning; the referee checks the move, asks TWO
//! for an answer, checks that too, and records both. Win conditions over
//! the infinite play are only witnessed: a finite list of probes fixed
//! before the play, and the innings at which TWO's moves capture them.

mod moves;
mod referee;
mod rules;
mod transcript;
mod validate;

pub use moves::{CountableSet, GameKind, OneMove, TwoMove};
pub use referee::{play, GameSpec, OneStrategy, Referee, TwoReply, TwoStrategy};
pub use rules::{check_one, check_two, Fault};
pub use transcript::{
    CosetRecord, Header, InningRecord, Instrumentation, Outcome, ScheduleRecord, SetSize, Transcript,
    TRANSCRIPT_FORMAT,
};
pub use validate::{validate, ValidationReport, Violation};
