//! Dovetailed enumeration of the elements supported in a finite index set.
//!
//! Elements supported in `B` are canonical representatives of the cosets of
//! `U_B`. They are listed by *height* (the sum of the component ranks of
//! their values), and within one height lexicographically with larger ranks
//! on smaller indices first. With two integer coordinates this is exactly the
//! Cantor pairing order, and it depends on `B` alone.

use std::collections::BTreeSet;

use crate::group::{Element, GroupSpec, Index};

/// Enumerator for `{x : support(x) ⊆ B}`.
#[derive(Clone, Debug)]
pub struct SupportedElements {
    coords: Vec<Index>,
    caps: Vec<Option<u64>>,
    spec: GroupSpec,
}

impl SupportedElements {
    pub fn new(pins: &BTreeSet<Index>, spec: &GroupSpec) -> Self {
        let coords: Vec<Index> = pins.iter().copied().collect();
        let caps = coords.iter().map(|&i| spec.component(i).max_rank()).collect();
        SupportedElements {
            coords,
            caps,
            spec: spec.clone(),
        }
    }

    pub fn indices(&self) -> &[Index] {
        &self.coords
    }

    /// Number of elements, `None` when infinite.
    pub fn total(&self) -> Option<u128> {
        self.caps
            .iter()
            .try_fold(1u128, |acc, c| c.map(|c| acc.saturating_mul(u128::from(c) + 1)))
    }

    fn max_height(&self) -> Option<u64> {
        self.caps.iter().try_fold(0u64, |acc, c| c.map(|c| acc + c))
    }

    /// `table[i][h]` counts rank tuples on `coords[i..]` of height `h`.
    fn table(&self, max_h: usize) -> Vec<Vec<u128>> {
        let c = self.coords.len();
        let mut table = vec![vec![0u128; max_h + 1]; c + 1];
        table[c][0] = 1;
        for i in (0..c).rev() {
            let mut prefix = vec![0u128; max_h + 2];
            for h in 0..=max_h {
                prefix[h + 1] = prefix[h].saturating_add(table[i + 1][h]);
            }
            for h in 0..=max_h {
                let top = match self.caps[i] {
                    Some(cap) => (cap as usize).min(h),
                    None => h,
                };
                // sum of table[i+1][h - r] for r in 0..=top
                table[i][h] = prefix[h + 1] - prefix[h - top];
            }
        }
        table
    }

    /// Height of the element at position `k`, and a count table deep enough
    /// to unrank it.
    fn locate(&self, k: u128) -> Option<(usize, u128, Vec<Vec<u128>>)> {
        if let Some(total) = self.total() {
            if k >= total {
                return None;
            }
        }
        let mut depth = 8usize;
        loop {
            let table = self.table(depth);
            let mut rest = k;
            for h in 0..=depth {
                if rest < table[0][h] {
                    return Some((h, rest, table));
                }
                rest -= table[0][h];
            }
            if let Some(mh) = self.max_height() {
                if depth as u64 >= mh {
                    return None;
                }
            }
            depth *= 2;
        }
    }

    /// The element at position `k`.
    pub fn nth(&self, k: u128) -> Option<Element> {
        let (h, mut rest, table) = self.locate(k)?;
        let mut remaining = h;
        let mut entries = Vec::with_capacity(self.coords.len());
        for i in 0..self.coords.len() {
            let top = match self.caps[i] {
                Some(cap) => (cap as usize).min(remaining),
                None => remaining,
            };
            let mut chosen = None;
            for r in (0..=top).rev() {
                let c = table[i + 1][remaining - r];
                if rest < c {
                    chosen = Some(r);
                    break;
                }
                rest -= c;
            }
            let r = chosen.expect("count table is consistent");
            let g = self.spec.component(self.coords[i]);
            entries.push((self.coords[i], g.value_at(r as u64)?));
            remaining -= r;
        }
        Some(Element::from_entries(entries))
    }

    /// Position of `x`, `None` if `x` is not supported in the index set or
    /// has out-of-domain values.
    pub fn rank_of(&self, x: &Element) -> Option<u128> {
        let pins: BTreeSet<Index> = self.coords.iter().copied().collect();
        if !x.support_within(&pins) {
            return None;
        }
        let mut ranks = Vec::with_capacity(self.coords.len());
        for &i in &self.coords {
            ranks.push(self.spec.component(i).rank_of(x.get(i))? as usize);
        }
        let h: usize = ranks.iter().sum();
        let table = self.table(h);
        let mut pos: u128 = (0..h).map(|t| table[0][t]).sum();
        let mut remaining = h;
        for (i, &ri) in ranks.iter().enumerate() {
            let top = match self.caps[i] {
                Some(cap) => (cap as usize).min(remaining),
                None => remaining,
            };
            for r in (ri + 1)..=top {
                pos += table[i + 1][remaining - r];
            }
            remaining -= ri;
        }
        Some(pos)
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.rank_of(x).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        (0u128..).map_while(move |k| self.nth(k))
    }
}

/// Height of an element: the sum of its component ranks.
pub fn height(x: &Element, spec: &GroupSpec) -> Option<u64> {
    x.entries()
        .map(|(i, v)| spec.component(i).rank_of(v))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Kappa, Track};
    use std::collections::HashSet;

    fn spec(g: ComponentGroup) -> GroupSpec {
        GroupSpec::uniform(Kappa::default(), Track::Product, g)
    }

    fn cantor(a: u128, b: u128) -> u128 {
        (a + b) * (a + b + 1) / 2 + b
    }

    #[test]
    fn empty_pin_set_has_only_the_identity() {
        let e = SupportedElements::new(&BTreeSet::new(), &spec(ComponentGroup::Integers));
        assert_eq!(e.nth(0), Some(Element::identity()));
        assert_eq!(e.nth(1), None);
        assert_eq!(e.total(), Some(1));
    }

    #[test]
    fn single_integer_coordinate_follows_component_order() {
        let e = SupportedElements::new(&BTreeSet::from([0]), &spec(ComponentGroup::Integers));
        let first: Vec<String> = (0..5).map(|k| e.nth(k).unwrap().to_string()).collect();
        assert_eq!(first, vec!["id", "0:1", "0:-1", "0:2", "0:-2"]);
    }

    #[test]
    fn two_integer_coordinates_follow_cantor_pairing() {
        let s = spec(ComponentGroup::Integers);
        let e = SupportedElements::new(&BTreeSet::from([3, 8]), &s);
        let z = ComponentGroup::Integers;
        for a in 0..20u64 {
            for b in 0..20u64 {
                let x = Element::from_entries([(3, z.value_at(a).unwrap()), (8, z.value_at(b).unwrap())]);
                let want = cantor(a as u128, b as u128);
                assert_eq!(e.rank_of(&x), Some(want));
                assert_eq!(e.nth(want), Some(x));
            }
        }
    }

    #[test]
    fn cyclic_enumeration_is_a_partition_of_cosets() {
        let s = spec(ComponentGroup::cyclic(2).unwrap());
        let e = SupportedElements::new(&BTreeSet::from([0]), &s);
        let all: Vec<_> = e.iter().collect();
        assert_eq!(all, vec![Element::identity(), "0:1".parse().unwrap()]);

        let e = SupportedElements::new(&BTreeSet::from([1, 4, 6]), &spec(ComponentGroup::cyclic(3).unwrap()));
        let all: Vec<_> = e.iter().collect();
        assert_eq!(all.len(), 27);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 27);
        for (k, x) in all.iter().enumerate() {
            assert_eq!(e.rank_of(x), Some(k as u128));
        }
    }

    #[test]
    fn mixed_components_roundtrip_and_heights_are_sorted() {
        let s = GroupSpec::with_list(
            Kappa::default(),
            Track::Product,
            vec![
                ComponentGroup::cyclic(2).unwrap(),
                ComponentGroup::Integers,
                ComponentGroup::cyclic(6).unwrap(),
            ],
            ComponentGroup::Integers,
        )
        .unwrap();
        let e = SupportedElements::new(&BTreeSet::from([0, 1, 2, 5]), &s);
        let mut last_height = 0;
        let mut seen = HashSet::new();
        for k in 0..3000u128 {
            let x = e.nth(k).unwrap();
            assert_eq!(e.rank_of(&x), Some(k));
            let h = height(&x, &s).unwrap();
            assert!(h >= last_height);
            last_height = h;
            assert!(seen.insert(x));
        }
        assert_eq!(e.total(), None);
    }

    #[test]
    fn rank_of_rejects_foreign_elements() {
        let s = spec(ComponentGroup::cyclic(2).unwrap());
        let e = SupportedElements::new(&BTreeSet::from([0]), &s);
        assert_eq!(e.rank_of(&"1:1".parse().unwrap()), None);
        assert_eq!(e.rank_of(&"0:5".parse().unwrap()), None);
    }

    #[test]
    fn prefix_rep_sets_grow_with_pins() {
        let s = spec(ComponentGroup::Integers);
        let small = SupportedElements::new(&BTreeSet::from([0]), &s);
        let big = SupportedElements::new(&BTreeSet::from([0, 2]), &s);
        for x in small.iter().take(50) {
            assert!(big.contains(&x));
        }
    }
}
