use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::component::Value;
use crate::error::Error;

/// Coordinate index of the direct sum. Stands in for an ordinal below kappa.
pub type Index = u32;

/// A finitely supported element of a direct sum.
///
/// Stored in canonical form: coordinates holding the identity (always the
/// value 0) are never present, so equality, support and coset tests run in
/// time proportional to the support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    entries: BTreeMap<Index, Value>,
}

impl Element {
    pub fn identity() -> Self {
        Element::default()
    }

    /// Builds an element, dropping identity entries. Later duplicates win.
    pub fn from_entries<I: IntoIterator<Item = (Index, Value)>>(entries: I) -> Self {
        Element {
            entries: entries.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }

    pub fn singleton(index: Index, value: Value) -> Self {
        Element::from_entries([(index, value)])
    }

    /// The value at `index`, the identity when unsupported.
    pub fn get(&self, index: Index) -> Value {
        self.entries.get(&index).copied().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Index> {
        self.entries.keys().copied().collect()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn support_iter(&self) -> impl Iterator<Item = Index> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, Value)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn restrict(&self, indices: &BTreeSet<Index>) -> Element {
        Element {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| indices.contains(i))
                .map(|(&i, &v)| (i, v))
                .collect(),
        }
    }

    /// Relabels every index `i` to `i + offset`.
    pub fn shift(&self, offset: Index) -> Element {
        Element {
            entries: self.entries.iter().map(|(&i, &v)| (i + offset, v)).collect(),
        }
    }

    pub fn support_within(&self, indices: &BTreeSet<Index>) -> bool {
        self.entries.keys().all(|i| indices.contains(i))
    }

    pub(crate) fn raw(&self) -> &BTreeMap<Index, Value> {
        &self.entries
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "id");
        }
        let mut first = true;
        for (i, v) in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{i}:{v}")?;
        }
        Ok(())
    }
}

/// Parses `id` or a comma separated list `index:value`.
impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "id" {
            return Ok(Element::identity());
        }
        let mut entries = BTreeMap::new();
        for part in s.split(',') {
            let (i, v) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected index:value, got `{part}`")))?;
            let i: Index = i
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index `{i}`")))?;
            let v: Value = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad value `{v}`")))?;
            if entries.insert(i, v).is_some() {
                return Err(Error::Parse(format!("index {i} given twice")));
            }
        }
        Ok(Element::from_entries(entries))
    }
}

/// Serialized as a list of `[index, value]` pairs in index order.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter())
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(Index, Value)>::deserialize(d)?;
        let mut seen = BTreeSet::new();
        for (i, v) in &pairs {
            if !seen.insert(*i) {
                return Err(serde::de::Error::custom(format!("index {i} given twice")));
            }
            if *v == 0 {
                return Err(serde::de::Error::custom(format!(
                    "index {i} stores the identity value"
                )));
            }
        }
        Ok(Element::from_entries(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_identity_values() {
        let x = Element::from_entries([(0, 0), (3, 2), (5, 0)]);
        assert_eq!(x.support(), BTreeSet::from([3]));
        assert_eq!(x.get(0), 0);
        assert_eq!(Element::from_entries([(1, 0)]), Element::identity());
    }

    #[test]
    fn support_of_examples() {
        assert!(Element::identity().support().is_empty());
        let x: Element = "0:2,9:-1".parse().unwrap();
        assert_eq!(x.support(), BTreeSet::from([0, 9]));
    }

    #[test]
    fn restrict_examples() {
        let x: Element = "0:1,3:2".parse().unwrap();
        assert_eq!(x.restrict(&BTreeSet::from([0])), "0:1".parse().unwrap());
        assert_eq!(x.restrict(&BTreeSet::new()), Element::identity());
        let y: Element = "0:1".parse().unwrap();
        assert_eq!(y.restrict(&BTreeSet::from([5])), Element::identity());
    }

    #[test]
    fn parse_and_display() {
        let x: Element = " 2:7 , 0:-1 ".parse().unwrap();
        assert_eq!(x.to_string(), "0:-1,2:7");
        assert_eq!("id".parse::<Element>().unwrap(), Element::identity());
        assert!("0:1,0:2".parse::<Element>().is_err());
        assert!("0".parse::<Element>().is_err());
        assert!("a:1".parse::<Element>().is_err());
    }

    #[test]
    fn serde_rejects_stored_identity() {
        let x: Element = serde_json::from_str("[[0,1],[4,-2]]").unwrap();
        assert_eq!(x.to_string(), "0:1,4:-2");
        assert_eq!(serde_json::to_string(&x).unwrap(), "[[0,1],[4,-2]]");
        assert!(serde_json::from_str::<Element>("[[0,0]]").is_err());
        assert!(serde_json::from_str::<Element>("[[1,1],[1,2]]").is_err());
    }
}
