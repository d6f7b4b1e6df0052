//! Run configuration files.
//!
//! ```toml
//! game = "nbd-covers"
//! innings = 64
//! window = 8            # or an explicit list such as [0, 2, 5]
//! seed = 7
//! probes = ["id", "0:1", "3:-2"]
//!
//! [group]
//! kappa = "omega1"
//! track = "product"
//! component = { kind = "integers" }
//!
//! [one]
//! kind = "random-nbd"
//! growth = 1
//!
//! [two]
//! kind = "nbd"
//! ```
//!
//! `[one]` may be left out for a duel. A top-level `track` overrides the group's. Without `probes`, the probes
//! are the identity and every singleton-support element of component rank
//! at most `probe-rank` (default 1) in the window.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{play, GameKind, GameSpec, Transcript};
use crate::group::{Element, GroupSpec, Index, Track, Window};
use crate::strategy::{OneSpec, TwoSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WindowSpec {
    /// `{0, .., n - 1}`.
    Size(Index),
    List(Vec<Index>),
}

impl WindowSpec {
    pub fn window(&self) -> Window {
        match self {
            WindowSpec::Size(n) => Window::range(*n),
            WindowSpec::List(l) => Window::new(l.iter().copied()),
        }
    }
}

fn default_probe_rank() -> u64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub track: Option<Track>,
    pub game: GameKind,
    /// Not needed for a duel, where ONE is the human.
    pub one: Option<OneSpec>,
    pub two: TwoSpec,
    pub innings: usize,
    pub inning_cap: Option<usize>,
    pub window: WindowSpec,
    pub probes: Option<Vec<String>>,
    #[serde(default = "default_probe_rank")]
    pub probe_rank: u64,
    #[serde(default)]
    pub seed: u64,
    pub out: Option<PathBuf>,
}

/// The identity and every `{i -> v}` with `i` in the window and `v` of
/// component rank `1..=k`.
pub fn default_probes(window: &Window, spec: &GroupSpec, k: u64) -> Vec<Element> {
    let mut probes = vec![Element::identity()];
    for i in window.iter() {
        let g = spec.component(i);
        for rank in 1..=k {
            if let Some(v) = g.value_at(rank) {
                probes.push(Element::singleton(i, v));
            }
        }
    }
    probes
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.check()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn group(&self) -> GroupSpec {
        let mut group = self.group.clone();
        if let Some(track) = self.track {
            group.track = track;
        }
        group
    }

    pub fn game_spec(&self) -> Result<GameSpec> {
        let cap = self.inning_cap.unwrap_or(self.innings);
        GameSpec::new(self.game, self.group(), self.window.window(), cap)
    }

    pub fn probes(&self) -> Result<Vec<Element>> {
        let window = self.window.window();
        let group = self.group();
        let probes = match &self.probes {
            None => default_probes(&window, &group, self.probe_rank),
            Some(list) => list
                .iter()
                .map(|s| s.parse::<Element>().map_err(|e| Error::Config(format!("probe `{s}`: {e}"))))
                .collect::<Result<_>>()?,
        };
        for p in &probes {
            if !window.covers(p) {
                return Err(Error::Config(format!("probe ({p}) is outside the window")));
            }
            group.check(p).map_err(|e| Error::Config(format!("probe ({p}): {e}")))?;
        }
        Ok(probes)
    }

    /// Checks everything that can be checked without playing.
    pub fn check(&self) -> Result<()> {
        if self.innings == 0 {
            return Err(Error::Config("innings must be at least 1".into()));
        }
        if let Some(cap) = self.inning_cap {
            if self.innings > cap {
                return Err(Error::Config(format!("innings {} exceed the inning cap {cap}", self.innings)));
            }
        }
        let game = self.game_spec()?;
        self.probes()?;
        if let Some(one) = &self.one {
            one.build(&game, self.seed)?;
        }
        self.two.build(&game)?;
        Ok(())
    }

    /// Plays the configured game.
    pub fn run(&self) -> Result<Transcript> {
        let game = self.game_spec()?;
        let one = self.one.as_ref().ok_or_else(|| Error::Config("no [one] strategy configured".into()))?;
        let mut one = one.build(&game, self.seed)?;
        let mut two = self.two.build(&game)?;
        play(&game, one.as_mut(), two.as_mut(), self.innings, self.seed, self.probes()?)
    }
}
