use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::component::ComponentGroup;
use super::element::{Element, Index};
use crate::error::{Error, Result};

/// Size of the index set. Only used as a label and, when finite, as a bound
/// on admissible indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Kappa {
    Finite(u64),
    Label(String),
}

impl Kappa {
    pub fn admits(&self, index: Index) -> bool {
        match self {
            Kappa::Finite(n) => u64::from(index) < *n,
            Kappa::Label(_) => true,
        }
    }
}

impl Default for Kappa {
    fn default() -> Self {
        Kappa::Label("omega1".into())
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kappa::Finite(n) => write!(f, "{n}"),
            Kappa::Label(s) => write!(f, "{s}"),
        }
    }
}

/// Which topology the direct sum carries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Track {
    /// Product topology: basic identity neighborhoods pin finitely many
    /// coordinates, and the group is sigma-compact.
    #[default]
    Product,
    /// Countable box topology: neighborhoods may pin countably many
    /// coordinates, and the group is a Lindelöf P-group.
    BoxGdelta,
}

/// Components from `start` up to the next segment's start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Index,
    pub group: ComponentGroup,
}

/// The direct sum `{f in prod G_i : support(f) finite}` over `kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupSpec")]
pub struct GroupSpec {
    pub kappa: Kappa,
    pub track: Track,
    segments: Vec<Segment>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroupSpec {
    #[serde(default)]
    kappa: Kappa,
    #[serde(default)]
    track: Track,
    component: Option<ComponentGroup>,
    components: Option<Vec<ComponentGroup>>,
    default: Option<ComponentGroup>,
    segments: Option<Vec<Segment>>,
}

impl TryFrom<RawGroupSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawGroupSpec) -> Result<Self> {
        let segments = match (raw.segments, raw.component, raw.components) {
            (Some(segments), None, None) => segments,
            (None, Some(c), None) => vec![Segment { start: 0, group: c }],
            (None, None, Some(list)) => {
                let default = raw
                    .default
                    .ok_or_else(|| Error::Config("`components` needs a `default`".into()))?;
                return GroupSpec::with_list(raw.kappa, raw.track, list, default);
            }
            (None, None, None) => {
                return Err(Error::Config(
                    "group needs one of `component`, `components`, `segments`".into(),
                ))
            }
            _ => {
                return Err(Error::Config(
                    "give only one of `component`, `components`, `segments`".into(),
                ))
            }
        };
        GroupSpec::from_segments(raw.kappa, raw.track, segments)
    }
}

impl GroupSpec {
    /// Same component at every index.
    pub fn uniform(kappa: Kappa, track: Track, group: ComponentGroup) -> Self {
        GroupSpec {
            kappa,
            track,
            segments: vec![Segment { start: 0, group }],
        }
    }

    /// `list[i]` at index `i`, then `default` from `list.len()` on.
    pub fn with_list(
        kappa: Kappa,
        track: Track,
        list: Vec<ComponentGroup>,
        default: ComponentGroup,
    ) -> Result<Self> {
        let n = list.len() as Index;
        let mut segments: Vec<Segment> = list
            .into_iter()
            .enumerate()
            .map(|(i, group)| Segment {
                start: i as Index,
                group,
            })
            .collect();
        segments.push(Segment {
            start: n,
            group: default,
        });
        GroupSpec::from_segments(kappa, track, segments)
    }

    pub fn from_segments(kappa: Kappa, track: Track, segments: Vec<Segment>) -> Result<Self> {
        if segments.first().map(|s| s.start) != Some(0) {
            return Err(Error::Config("first component segment must start at 0".into()));
        }
        if segments.windows(2).any(|w| w[0].start >= w[1].start) {
            return Err(Error::Config("component segments must have increasing starts".into()));
        }
        Ok(GroupSpec {
            kappa,
            track,
            segments,
        })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// The component group at `index`.
    pub fn component(&self, index: Index) -> &ComponentGroup {
        let pos = self.segments.partition_point(|s| s.start <= index);
        &self.segments[pos - 1].group
    }

    /// Checks that every value lies in its component's domain and every index
    /// is admitted by kappa.
    pub fn check(&self, x: &Element) -> Result<()> {
        for (i, v) in x.entries() {
            if !self.kappa.admits(i) {
                return Err(Error::MalformedElement(format!(
                    "index {i} is outside kappa = {}",
                    self.kappa
                )));
            }
            if !self.component(i).contains(v) {
                return Err(Error::MalformedElement(format!(
                    "value {v} at index {i} is not in {}",
                    self.component(i)
                )));
            }
        }
        Ok(())
    }

    /// Componentwise group operation.
    pub fn op(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut out: BTreeMap<Index, i64> = BTreeMap::new();
        let (ra, rb) = (a.raw(), b.raw());
        for &i in ra.keys().chain(rb.keys()) {
            if out.contains_key(&i) {
                continue;
            }
            let v = self.component(i).op(a.get(i), b.get(i))?;
            out.insert(i, v);
        }
        Ok(Element::from_entries(out))
    }

    pub fn inv(&self, a: &Element) -> Result<Element> {
        let entries = a
            .entries()
            .map(|(i, v)| Ok((i, self.component(i).inv(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Element::from_entries(entries))
    }

    /// Places `other` above `self`: indices `< offset` follow `self`, index
    /// `offset + j` follows `other` at `j`. The square `G x G` of a direct
    /// sum over kappa is the direct sum over kappa + kappa, so finite powers
    /// are built this way.
    pub fn disjoint_union(&self, other: &GroupSpec, offset: Index) -> Result<GroupSpec> {
        if let Kappa::Finite(n) = self.kappa {
            if n > u64::from(offset) {
                return Err(Error::Config(format!(
                    "offset {offset} overlaps the first summand of size {n}"
                )));
            }
        }
        if self.track != other.track {
            return Err(Error::Config("summands carry different topologies".into()));
        }
        let mut segments: Vec<Segment> = self
            .segments
            .iter()
            .filter(|s| s.start < offset)
            .cloned()
            .collect();
        for s in &other.segments {
            let start = s
                .start
                .checked_add(offset)
                .ok_or_else(|| Error::Config("index overflow in disjoint union".into()))?;
            segments.push(Segment {
                start,
                group: s.group.clone(),
            });
        }
        let kappa = match (&self.kappa, &other.kappa) {
            (_, Kappa::Finite(m)) => Kappa::Finite(u64::from(offset) + m),
            (a, b) => Kappa::Label(format!("{a}+{b}")),
        };
        GroupSpec::from_segments(kappa, self.track, segments)
    }

    /// The `k`-fold power, copy `c` living at indices `c * stride ..`.
    pub fn power(&self, k: u32, stride: Index) -> Result<GroupSpec> {
        if k == 0 {
            return Err(Error::Config("power needs at least one factor".into()));
        }
        let mut out = self.clone();
        for c in 1..k {
            out = out.disjoint_union(self, c * stride)?;
        }
        Ok(out)
    }

    /// Combines per-factor elements into one element of [`power`](Self::power).
    pub fn embed(parts: &[Element], stride: Index) -> Result<Element> {
        let mut entries = Vec::new();
        for (c, part) in parts.iter().enumerate() {
            if part.support_iter().any(|i| i >= stride) {
                return Err(Error::MalformedElement(format!(
                    "factor {c} has support beyond stride {stride}"
                )));
            }
            entries.extend(part.shift(c as Index * stride).entries());
        }
        Ok(Element::from_entries(entries))
    }

    /// The `c`-th factor of an element of a power.
    pub fn project(x: &Element, c: u32, stride: Index) -> Element {
        let lo = c * stride;
        let hi = lo + stride;
        Element::from_entries(
            x.entries()
                .filter(|&(i, _)| i >= lo && i < hi)
                .map(|(i, v)| (i - lo, v)),
        )
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "direct sum over {} of ", self.kappa)?;
        if self.segments.len() == 1 {
            write!(f, "{}", self.segments[0].group)?;
        } else {
            let parts: Vec<String> = self
                .segments
                .iter()
                .map(|s| format!("{}@{}", s.group, s.start))
                .collect();
            write!(f, "[{}]", parts.join(", "))?;
        }
        match self.track {
            Track::Product => write!(f, " (product topology)"),
            Track::BoxGdelta => write!(f, " (countable box topology)"),
        }
    }
}
