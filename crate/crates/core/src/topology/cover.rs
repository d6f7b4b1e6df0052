//! Open covers consumed through a choice function.
//!
//! A cover is never listed extensionally. Each [`CoverOracle`] answers
//! `choose(x)`, a basic open set containing `x`, and optionally declares a
//! uniform bound: a finite index set containing every coordinate any answer
//! constrains.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::open::BasicOpen;
use crate::error::{Error, Result};
use crate::group::{ComponentGroup, Element, GroupSpec, Index, Value, Window};

/// Serializable description of an open cover together with its choice
/// function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoverOracle {
    /// `{G}`.
    Whole,
    /// `O(U_pins)`: `x` is answered with its coset `x * U_pins`.
    Coset { pins: BTreeSet<Index> },
    /// `x` is answered with `x * U_{base ∪ support(x)}`. Covers the group but
    /// has no uniform bound.
    Pinning { base: BTreeSet<Index> },
    /// Pseudo-random cover determined by `seed`. The answer at `x` depends
    /// only on `x` restricted to `pool`; it pins a subset of `pool` with value
    /// windows of width up to `spread` around `x`.
    Hashed {
        seed: u64,
        pool: BTreeSet<Index>,
        spread: u32,
    },
    /// A finite extensional family; `x` is answered with the first member
    /// containing it. May fail to be a cover.
    Listed { members: Vec<BasicOpen> },
    /// The refinement `{U ∩ V ∩ ... } \ {∅}` of several covers, answered by
    /// intersecting their answers.
    Meet { parts: Vec<CoverOracle> },
}

/// splitmix64 finalizer, used so the hashed covers are stable everywhere.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn value_window(g: &ComponentGroup, v: Value, below: u64, above: u64) -> BTreeSet<Value> {
    match g {
        ComponentGroup::Integers => (v - below as Value..=v + above as Value).collect(),
        _ => {
            let r = g.rank_of(v).expect("value checked against its component");
            let top = g.max_rank().unwrap_or(r);
            (r.saturating_sub(below)..=(r + above).min(top))
                .filter_map(|k| g.value_at(k))
                .collect()
        }
    }
}

impl CoverOracle {
    pub fn coset<I: IntoIterator<Item = Index>>(pins: I) -> Self {
        CoverOracle::Coset {
            pins: pins.into_iter().collect(),
        }
    }

    pub fn hashed<I: IntoIterator<Item = Index>>(seed: u64, pool: I, spread: u32) -> Self {
        CoverOracle::Hashed {
            seed,
            pool: pool.into_iter().collect(),
            spread,
        }
    }

    /// The chosen member containing `x`, or `None` when the family does not
    /// cover `x`.
    pub fn choose(&self, x: &Element, spec: &GroupSpec) -> Option<BasicOpen> {
        match self {
            CoverOracle::Whole => Some(BasicOpen::whole()),
            CoverOracle::Coset { pins } => Some(BasicOpen::coset(x, pins)),
            CoverOracle::Pinning { base } => {
                let pins: BTreeSet<Index> = base.iter().copied().chain(x.support_iter()).collect();
                Some(BasicOpen::coset(x, &pins))
            }
            CoverOracle::Hashed { seed, pool, spread } => {
                let mut key = mix(*seed);
                for (i, v) in x.restrict(pool).entries() {
                    key = mix(key ^ u64::from(i));
                    key = mix(key ^ v as u64);
                }
                let mut constraints = BTreeMap::new();
                for &i in pool {
                    let h = mix(key ^ mix(u64::from(i)));
                    if h.is_multiple_of(4) {
                        continue;
                    }
                    let span = u64::from(*spread) + 1;
                    let below = (h >> 8) % span;
                    let above = (h >> 24) % span;
                    let g = spec.component(i);
                    let v = x.get(i);
                    if !g.contains(v) {
                        return None;
                    }
                    constraints.insert(i, value_window(g, v, below, above));
                }
                BasicOpen::new(constraints).ok()
            }
            CoverOracle::Listed { members } => members.iter().find(|m| m.contains(x)).cloned(),
            CoverOracle::Meet { parts } => {
                let mut acc = BasicOpen::whole();
                for p in parts {
                    acc = acc.intersect(&p.choose(x, spec)?)?;
                }
                Some(acc)
            }
        }
    }

    /// Finite index set containing every coordinate an answer constrains,
    /// when the cover has one.
    pub fn uniform_bound(&self) -> Option<BTreeSet<Index>> {
        match self {
            CoverOracle::Whole => Some(BTreeSet::new()),
            CoverOracle::Coset { pins } => Some(pins.clone()),
            CoverOracle::Pinning { .. } => None,
            CoverOracle::Hashed { pool, .. } => Some(pool.clone()),
            CoverOracle::Listed { members } => {
                Some(members.iter().flat_map(|m| m.constrained()).collect())
            }
            CoverOracle::Meet { parts } => parts.iter().try_fold(BTreeSet::new(), |mut acc, p| {
                acc.extend(p.uniform_bound()?);
                Some(acc)
            }),
        }
    }

    /// Checks the description against the group and window: every index it
    /// names lies in the window and listed values lie in their components.
    pub fn check(&self, spec: &GroupSpec, window: &Window) -> Result<()> {
        let in_window = |set: &BTreeSet<Index>, what: &str| -> Result<()> {
            match set.iter().find(|&&i| !window.contains(i)) {
                Some(i) => Err(Error::MalformedElement(format!(
                    "{what} names index {i} outside the window"
                ))),
                None => Ok(()),
            }
        };
        match self {
            CoverOracle::Whole => Ok(()),
            CoverOracle::Coset { pins } => in_window(pins, "coset cover"),
            CoverOracle::Pinning { base } => in_window(base, "pinning cover"),
            CoverOracle::Hashed { pool, .. } => in_window(pool, "hashed cover"),
            CoverOracle::Listed { members } => {
                if members.is_empty() {
                    return Err(Error::MalformedElement("listed cover has no members".into()));
                }
                members.iter().try_for_each(|m| m.check(spec, window))
            }
            CoverOracle::Meet { parts } => parts.iter().try_for_each(|p| p.check(spec, window)),
        }
    }

    /// Short provenance tag for transcripts.
    pub fn label(&self) -> String {
        match self {
            CoverOracle::Whole => "whole".into(),
            CoverOracle::Coset { pins } => format!("coset{}", fmt_set(pins)),
            CoverOracle::Pinning { base } => format!("pinning{}", fmt_set(base)),
            CoverOracle::Hashed { seed, pool, spread } => {
                format!("hashed(seed={seed},spread={spread}){}", fmt_set(pool))
            }
            CoverOracle::Listed { members } => format!("listed({})", members.len()),
            CoverOracle::Meet { parts } => format!("meet({})", parts.len()),
        }
    }
}

fn fmt_set(s: &BTreeSet<Index>) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for CoverOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The running refinement `O_1 ∧ O_2 ∧ ... ∧ O_n` of a sequence of covers.
///
/// Answers only shrink as covers are added, and the accumulated uniform bound
/// only grows.
#[derive(Clone, Debug, Default)]
pub struct RefinementMeet {
    parts: Vec<CoverOracle>,
}

impl RefinementMeet {
    pub fn new() -> Self {
        RefinementMeet::default()
    }

    pub fn push(&mut self, cover: CoverOracle) {
        self.parts.push(cover);
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn latest(&self) -> Option<&CoverOracle> {
        self.parts.last()
    }

    pub fn as_oracle(&self) -> CoverOracle {
        CoverOracle::Meet {
            parts: self.parts.clone(),
        }
    }
}
