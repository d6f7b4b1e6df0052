use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The two players of a selection game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    One,
    Two,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::One => write!(f, "ONE"),
            Player::Two => write!(f, "TWO"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("{what} needs {needed} items, cap is {cap}")]
    Resource { what: String, needed: u128, cap: u64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("legality fault at inning {inning}: {player} broke `{rule}`: {detail}")]
    Legality {
        inning: usize,
        player: Player,
        rule: String,
        detail: String,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn legality(inning: usize, player: Player, rule: &str, detail: impl Into<String>) -> Self {
        Error::Legality {
            inning,
            player,
            rule: rule.to_string(),
            detail: detail.into(),
        }
    }

    /// Process exit code: 1 for faults during a run, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Legality { .. } | Error::Contract(_) | Error::Resource { .. } => 1,
            Error::MalformedElement(_) | Error::Config(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) => 2,
        }
    }
}
