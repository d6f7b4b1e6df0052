use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, Index, Value, Window};

/// The basic identity neighborhood `U_B = {x : x(i) = id for i in B}`.
///
/// `U_B` is an open subgroup, so it is symmetric and `U_B * U_B = U_B`.
/// Larger pin sets give smaller subgroups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NbdSubgroup {
    pins: BTreeSet<Index>,
    countable: bool,
}

impl NbdSubgroup {
    pub fn new<I: IntoIterator<Item = Index>>(pins: I) -> Self {
        NbdSubgroup {
            pins: pins.into_iter().collect(),
            countable: false,
        }
    }

    /// A neighborhood whose pin set stands for a countable set truncated to
    /// the window. Only legal on the countable box topology.
    pub fn countable<I: IntoIterator<Item = Index>>(pins: I) -> Self {
        NbdSubgroup {
            pins: pins.into_iter().collect(),
            countable: true,
        }
    }

    /// `U_empty`, the whole group.
    pub fn whole() -> Self {
        NbdSubgroup::default()
    }

    pub fn with_countable(mut self, countable: bool) -> Self {
        self.countable = countable;
        self
    }

    pub fn pins(&self) -> &BTreeSet<Index> {
        &self.pins
    }

    pub fn is_countable(&self) -> bool {
        self.countable
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.support_iter().all(|i| !self.pins.contains(&i))
    }

    /// `self ⊆ other`, i.e. `other`'s pins are among ours.
    pub fn is_subgroup_of(&self, other: &NbdSubgroup) -> bool {
        other.pins.is_subset(&self.pins)
    }

    /// `U_B ∩ U_C = U_{B ∪ C}`.
    pub fn meet(&self, other: &NbdSubgroup) -> NbdSubgroup {
        NbdSubgroup {
            pins: self.pins.union(&other.pins).copied().collect(),
            countable: self.countable || other.countable,
        }
    }

    /// The left coset `x * U_B`.
    pub fn coset(&self, x: &Element) -> BasicOpen {
        BasicOpen::coset(x, &self.pins)
    }
}

impl fmt::Display for NbdSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pins: Vec<String> = self.pins.iter().map(|i| i.to_string()).collect();
        write!(f, "U{{{}}}", pins.join(","))?;
        if self.countable {
            write!(f, "*")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NbdRepr {
    indices: Vec<Index>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    countable: bool,
}

impl Serialize for NbdSubgroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NbdRepr {
            indices: self.pins.iter().copied().collect(),
            countable: self.countable,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NbdSubgroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = NbdRepr::deserialize(d)?;
        Ok(NbdSubgroup {
            pins: r.indices.into_iter().collect(),
            countable: r.countable,
        })
    }
}

/// A finitely constrained open set: each constrained coordinate must take a
/// value in a finite nonempty set, the rest are free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicOpen {
    constraints: BTreeMap<Index, BTreeSet<Value>>,
}

impl BasicOpen {
    /// The whole group.
    pub fn whole() -> Self {
        BasicOpen::default()
    }

    pub fn new(constraints: BTreeMap<Index, BTreeSet<Value>>) -> Result<Self> {
        if let Some((i, _)) = constraints.iter().find(|(_, vs)| vs.is_empty()) {
            return Err(Error::MalformedElement(format!(
                "empty value set at index {i} makes the open set empty"
            )));
        }
        Ok(BasicOpen { constraints })
    }

    /// `x * U_B`: pins `x`'s values on `B`, identity where `x` is unsupported.
    pub fn coset(x: &Element, pins: &BTreeSet<Index>) -> Self {
        BasicOpen {
            constraints: pins
                .iter()
                .map(|&i| (i, BTreeSet::from([x.get(i)])))
                .collect(),
        }
    }

    pub fn constraints(&self) -> &BTreeMap<Index, BTreeSet<Value>> {
        &self.constraints
    }

    pub fn constrained(&self) -> BTreeSet<Index> {
        self.constraints.keys().copied().collect()
    }

    pub fn is_whole(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.constraints.iter().all(|(&i, vs)| vs.contains(&x.get(i)))
    }

    /// Intersection, `None` when empty.
    pub fn intersect(&self, other: &BasicOpen) -> Option<BasicOpen> {
        let mut constraints = self.constraints.clone();
        for (&i, vs) in &other.constraints {
            match constraints.get_mut(&i) {
                Some(mine) => {
                    mine.retain(|v| vs.contains(v));
                    if mine.is_empty() {
                        return None;
                    }
                }
                None => {
                    constraints.insert(i, vs.clone());
                }
            }
        }
        Some(BasicOpen { constraints })
    }

    pub fn is_disjoint(&self, other: &BasicOpen) -> bool {
        self.intersect(other).is_none()
    }

    /// Exact inclusion `self ⊆ other` in the group described by `spec`.
    ///
    /// A coordinate left free by `self` but constrained by `other` is only
    /// contained when the component is finite and `other` allows all of it.
    pub fn is_subset(&self, other: &BasicOpen, spec: &GroupSpec) -> bool {
        other.constraints.iter().all(|(&i, theirs)| match self.constraints.get(&i) {
            Some(mine) => mine.is_subset(theirs),
            None => {
                let g = spec.component(i);
                match g.order() {
                    None => false,
                    Some(n) => (0..n as Value).all(|v| theirs.contains(&v)),
                }
            }
        })
    }

    /// Extensional equality of the denoted sets.
    pub fn same_set(&self, other: &BasicOpen, spec: &GroupSpec) -> bool {
        self.is_subset(other, spec) && other.is_subset(self, spec)
    }

    pub fn check(&self, spec: &GroupSpec, window: &Window) -> Result<()> {
        for (&i, vs) in &self.constraints {
            if !window.contains(i) {
                return Err(Error::MalformedElement(format!(
                    "open set constrains index {i} outside the window"
                )));
            }
            if vs.is_empty() {
                return Err(Error::MalformedElement(format!("empty value set at {i}")));
            }
            if let Some(v) = vs.iter().find(|&&v| !spec.component(i).contains(v)) {
                return Err(Error::MalformedElement(format!(
                    "value {v} at index {i} is not in {}",
                    spec.component(i)
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for BasicOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return write!(f, "G");
        }
        let parts: Vec<String> = self
            .constraints
            .iter()
            .map(|(i, vs)| {
                let vs: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                format!("{i}∈{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct OpenRepr {
    indices: Vec<Index>,
    values: Vec<Vec<Value>>,
}

/// Serialized as the sorted index list plus one value list per index.
impl Serialize for BasicOpen {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OpenRepr {
            indices: self.constraints.keys().copied().collect(),
            values: self
                .constraints
                .values()
                .map(|vs| vs.iter().copied().collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasicOpen {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = OpenRepr::deserialize(d)?;
        if r.indices.len() != r.values.len() {
            return Err(serde::de::Error::custom("indices and values differ in length"));
        }
        let mut constraints = BTreeMap::new();
        for (i, vs) in r.indices.into_iter().zip(r.values) {
            if constraints
                .insert(i, vs.into_iter().collect::<BTreeSet<_>>())
                .is_some()
            {
                return Err(serde::de::Error::custom(format!("index {i} given twice")));
            }
        }
        BasicOpen::new(constraints).map_err(serde::de::Error::custom)
    }
}

/// `x * U_B == y * U_B`, i.e. `x` and `y` agree on `B`.
pub fn coset_equal(x: &Element, y: &Element, pins: &BTreeSet<Index>) -> bool {
    pins.iter().all(|&i| x.get(i) == y.get(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Kappa, Track};

    fn el(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn set(xs: &[Index]) -> BTreeSet<Index> {
        xs.iter().copied().collect()
    }

    fn z() -> GroupSpec {
        GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers)
    }

    #[test]
    fn member_examples() {
        assert!(BasicOpen::coset(&Element::identity(), &set(&[0, 1])).contains(&Element::identity()));
        let open = BasicOpen::new(BTreeMap::from([(0, BTreeSet::from([1, 2]))])).unwrap();
        assert!(open.contains(&el("0:1")));
        assert!(!BasicOpen::coset(&el("0:1"), &set(&[0])).contains(&el("0:3")));
    }

    #[test]
    fn coset_examples() {
        let c = BasicOpen::coset(&el("0:1"), &set(&[0, 1]));
        assert_eq!(
            c.constraints(),
            &BTreeMap::from([(0, BTreeSet::from([1])), (1, BTreeSet::from([0]))])
        );
        assert!(BasicOpen::coset(&Element::identity(), &set(&[])).is_whole());
        let c = BasicOpen::coset(&el("2:7"), &set(&[0]));
        assert_eq!(c.constraints(), &BTreeMap::from([(0, BTreeSet::from([0]))]));
    }

    #[test]
    fn coset_equal_examples() {
        assert!(coset_equal(&el("0:1"), &el("0:1,2:7"), &set(&[0, 1])));
        assert!(!coset_equal(&el("0:1"), &el("0:2"), &set(&[0])));
        assert!(coset_equal(&el("0:5"), &el("3:-2"), &set(&[])));
    }

    #[test]
    fn subset_respects_finite_components() {
        let c2 = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::cyclic(2).unwrap());
        let all = BasicOpen::new(BTreeMap::from([(0, BTreeSet::from([0, 1]))])).unwrap();
        assert!(BasicOpen::whole().is_subset(&all, &c2));
        assert!(!BasicOpen::whole().is_subset(&all, &z()));
        assert!(all.same_set(&BasicOpen::whole(), &c2));
        assert!(BasicOpen::coset(&el("0:1"), &set(&[0, 1])).is_subset(&BasicOpen::coset(&el("0:1"), &set(&[0])), &z()));
    }

    #[test]
    fn empty_value_sets_are_rejected() {
        assert!(BasicOpen::new(BTreeMap::from([(0, BTreeSet::new())])).is_err());
        assert!(serde_json::from_str::<BasicOpen>(r#"{"indices":[0],"values":[[]]}"#).is_err());
        assert!(serde_json::from_str::<BasicOpen>(r#"{"indices":[0,1],"values":[[1]]}"#).is_err());
    }

    #[test]
    fn serialization_is_index_list_plus_value_lists() {
        let c = BasicOpen::coset(&el("0:1,3:-2"), &set(&[0, 3]));
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"indices":[0,3],"values":[[1],[-2]]}"#
        );
        let n = NbdSubgroup::countable([2, 1]);
        assert_eq!(serde_json::to_string(&n).unwrap(), r#"{"indices":[1,2],"countable":true}"#);
        let back: NbdSubgroup = serde_json::from_str(r#"{"indices":[4]}"#).unwrap();
        assert_eq!(back, NbdSubgroup::new([4]));
    }

    #[test]
    fn antitone_in_pins() {
        let small = NbdSubgroup::new([0]);
        let big = NbdSubgroup::new([0, 1]);
        assert!(big.is_subgroup_of(&small));
        assert!(!small.is_subgroup_of(&big));
        assert!(small.contains(&el("1:4")));
        assert!(!big.contains(&el("1:4")));
    }
}
