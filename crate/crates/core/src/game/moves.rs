use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, Index, Window};
use crate::topology::{BasicOpen, CoverOracle, NbdSubgroup, SupportedElements};

/// Which game is being played.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GameKind {
    /// `G1(O_nbd, O)`: ONE plays covers `O(U_B)`, TWO picks a coset.
    NbdCovers,
    /// `G1(O, O)`: ONE plays arbitrary open covers, TWO picks a member.
    OpenCovers,
    /// ONE plays increasing countable sets `W_n`, TWO picks `b_n in W_n`.
    CountableOne,
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameKind::NbdCovers => write!(f, "G1(O_nbd, O)"),
            GameKind::OpenCovers => write!(f, "G1(O, O)"),
            GameKind::CountableOne => write!(f, "countable-1"),
        }
    }
}

/// A countable subset of the group, given lazily.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CountableSet {
    /// An explicit list, enumerated in the given order.
    Finite { members: Vec<Element> },
    /// Every element supported in `pins`: the canonical coset
    /// representatives of `U_pins`, in dovetail order.
    Supported { pins: BTreeSet<Index> },
}

impl CountableSet {
    pub fn finite(members: Vec<Element>) -> Self {
        let mut seen = BTreeSet::new();
        let members = members.into_iter().filter(|m| seen.insert(m.clone())).collect();
        CountableSet::Finite { members }
    }

    pub fn supported<I: IntoIterator<Item = Index>>(pins: I) -> Self {
        CountableSet::Supported {
            pins: pins.into_iter().collect(),
        }
    }

    pub fn nth(&self, k: u128, spec: &GroupSpec) -> Option<Element> {
        match self {
            CountableSet::Finite { members } => usize::try_from(k).ok().and_then(|k| members.get(k).cloned()),
            CountableSet::Supported { pins } => SupportedElements::new(pins, spec).nth(k),
        }
    }

    pub fn contains(&self, x: &Element, spec: &GroupSpec) -> bool {
        match self {
            CountableSet::Finite { members } => members.contains(x),
            CountableSet::Supported { pins } => x.support_within(pins) && spec.check(x).is_ok(),
        }
    }

    /// Number of members, `None` when infinite.
    pub fn size(&self, spec: &GroupSpec) -> Option<u128> {
        match self {
            CountableSet::Finite { members } => Some(members.len() as u128),
            CountableSet::Supported { pins } => SupportedElements::new(pins, spec).total(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CountableSet::Finite { members } if members.is_empty())
    }

    /// A member of `prev` missing from `self`, if any. Decided exactly.
    pub fn missing_from(&self, prev: &CountableSet, spec: &GroupSpec) -> Option<Element> {
        match (prev, self) {
            (CountableSet::Finite { members }, _) => {
                members.iter().find(|m| !self.contains(m, spec)).cloned()
            }
            (CountableSet::Supported { pins: a }, CountableSet::Supported { pins: b }) => {
                a.difference(b).next().map(|&i| {
                    let v = spec.component(i).value_at(1).unwrap_or(0);
                    Element::singleton(i, v)
                })
                .filter(|x| !x.is_identity())
            }
            (CountableSet::Supported { .. }, CountableSet::Finite { members }) => {
                // among the first |members| + 1 elements of prev one is missing
                // unless prev is small enough to check in full
                let limit = members.len() as u128 + 1;
                (0..limit)
                    .map_while(|k| prev.nth(k, spec))
                    .find(|x| !self.contains(x, spec))
            }
        }
    }

    pub fn check(&self, spec: &GroupSpec, window: &Window) -> Result<()> {
        match self {
            CountableSet::Finite { members } => {
                if members.is_empty() {
                    return Err(Error::MalformedElement("countable set is empty".into()));
                }
                for m in members {
                    if !window.covers(m) {
                        return Err(Error::MalformedElement(format!("{m} is outside the window")));
                    }
                    spec.check(m)?;
                }
                let distinct: BTreeSet<_> = members.iter().collect();
                if distinct.len() != members.len() {
                    return Err(Error::MalformedElement("countable set lists a member twice".into()));
                }
                Ok(())
            }
            CountableSet::Supported { pins } => {
                if !window.covers_set(pins) {
                    return Err(Error::MalformedElement(
                        "countable set is supported outside the window".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for CountableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountableSet::Finite { members } => {
                let parts: Vec<String> = members.iter().map(|m| format!("({m})")).collect();
                write!(f, "{{{}}}", parts.join(" "))
            }
            CountableSet::Supported { pins } => {
                let parts: Vec<String> = pins.iter().map(|i| i.to_string()).collect();
                write!(f, "supported in {{{}}}", parts.join(","))
            }
        }
    }
}

/// ONE's move in an inning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum OneMove {
    /// The cover `O(U_B)`.
    Nbd { nbd: NbdSubgroup },
    /// An arbitrary open cover.
    Cover { cover: CoverOracle },
    /// A countable set `W_n`.
    Countable { set: CountableSet },
}

impl OneMove {
    pub fn nbd(nbd: NbdSubgroup) -> Self {
        OneMove::Nbd { nbd }
    }

    pub fn cover(cover: CoverOracle) -> Self {
        OneMove::Cover { cover }
    }

    pub fn countable(set: CountableSet) -> Self {
        OneMove::Countable { set }
    }

    pub fn kind(&self) -> GameKind {
        match self {
            OneMove::Nbd { .. } => GameKind::NbdCovers,
            OneMove::Cover { .. } => GameKind::OpenCovers,
            OneMove::Countable { .. } => GameKind::CountableOne,
        }
    }
}

impl fmt::Display for OneMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OneMove::Nbd { nbd } => write!(f, "O({nbd})"),
            OneMove::Cover { cover } => write!(f, "{cover}"),
            OneMove::Countable { set } => write!(f, "W = {set}"),
        }
    }
}

/// TWO's move in an inning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum TwoMove {
    /// A member of ONE's cover. `witness` is the coset representative (for
    /// `O(U_B)`) or the point at which the cover's choice function was
    /// queried (for arbitrary covers).
    Member { set: BasicOpen, witness: Element },
    /// A point of ONE's countable set.
    Point { point: Element },
}

impl TwoMove {
    pub fn member(set: BasicOpen, witness: Element) -> Self {
        TwoMove::Member { set, witness }
    }

    pub fn point(point: Element) -> Self {
        TwoMove::Point { point }
    }

    /// Does this move capture `probe`?
    pub fn covers(&self, probe: &Element) -> bool {
        match self {
            TwoMove::Member { set, .. } => set.contains(probe),
            TwoMove::Point { point } => point == probe,
        }
    }
}

impl fmt::Display for TwoMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoMove::Member { set, witness } => write!(f, "{set} (via {witness})"),
            TwoMove::Point { point } => write!(f, "{point}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Kappa, Track};

    fn z() -> GroupSpec {
        GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers)
    }

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn finite_sets_deduplicate_and_enumerate_in_order() {
        let w = CountableSet::finite(vec![el("0:1"), el("id"), el("0:1")]);
        assert_eq!(w.size(&z()), Some(2));
        assert_eq!(w.nth(1, &z()), Some(Element::identity()));
        assert_eq!(w.nth(2, &z()), None);
    }

    #[test]
    fn inclusion_between_set_kinds() {
        let spec = z();
        let a = CountableSet::finite(vec![el("0:1"), el("id")]);
        let b = CountableSet::supported([0]);
        let c = CountableSet::supported([0, 1]);
        assert_eq!(b.missing_from(&a, &spec), None);
        assert_eq!(c.missing_from(&b, &spec), None);
        assert_eq!(b.missing_from(&c, &spec), Some(el("1:1")));
        assert!(a.missing_from(&b, &spec).is_some());
        let d = CountableSet::finite(vec![el("id")]);
        assert_eq!(d.missing_from(&a, &spec), Some(el("0:1")));
    }

    #[test]
    fn empty_sets_fail_the_check() {
        let w = Window::range(2);
        assert!(CountableSet::finite(vec![]).check(&z(), &w).is_err());
        assert!(CountableSet::finite(vec![el("3:1")]).check(&z(), &w).is_err());
        assert!(CountableSet::supported([1]).check(&z(), &w).is_ok());
    }

    #[test]
    fn moves_serialize_with_type_tags() {
        let m = OneMove::nbd(NbdSubgroup::new([0]));
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"type":"nbd","nbd":{"indices":[0]}}"#);
        let t = TwoMove::point(el("0:1"));
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"type":"point","point":[[0,1]]}"#);
    }
}
