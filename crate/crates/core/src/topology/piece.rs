use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec, Value, Window};

/// Default cap on the number of elements a piece enumeration may produce.
pub const DEFAULT_PIECE_CAP: u64 = 200_000;

/// The compact set `G_n = {f : |support(f)| <= n, f(i) in C_i(n)}`.
///
/// `G_0 = {id}`, the pieces increase with `n`, and their union is the whole
/// group, which witnesses sigma-compactness of the direct sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompactPiece {
    rank: u64,
}

impl CompactPiece {
    pub fn new(rank: u64) -> Self {
        CompactPiece { rank }
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn contains(&self, x: &Element, spec: &GroupSpec) -> bool {
        x.support_len() as u64 <= self.rank
            && x
                .entries()
                .all(|(i, v)| spec.component(i).filtration_contains(v, self.rank))
    }

    /// Number of window-supported members.
    pub fn count(&self, window: &Window, spec: &GroupSpec) -> u128 {
        let k_max = (self.rank as usize).min(window.len());
        // by_size[k] = members with support of size exactly k
        let mut by_size = vec![0u128; k_max + 1];
        by_size[0] = 1;
        for i in window.iter() {
            let choices = u128::from(spec.component(i).filtration_len(self.rank) - 1);
            for k in (1..=k_max).rev() {
                by_size[k] = by_size[k].saturating_add(by_size[k - 1].saturating_mul(choices));
            }
        }
        by_size.into_iter().fold(0u128, u128::saturating_add)
    }

    /// Window-supported members in a fixed order: by support size, then
    /// support lexicographically, then values in enumerator order. The
    /// identity comes first.
    pub fn iter<'a>(&self, window: &'a Window, spec: &'a GroupSpec) -> impl Iterator<Item = Element> + 'a {
        let n = self.rank;
        let k_max = (n as usize).min(window.len());
        (0..=k_max).flat_map(move |k| {
            window.iter().combinations(k).flat_map(move |support| {
                if support.is_empty() {
                    return Box::new(std::iter::once(Element::identity()))
                        as Box<dyn Iterator<Item = Element>>;
                }
                let values: Vec<Vec<Value>> = support
                    .iter()
                    .map(|&i| {
                        spec.component(i)
                            .filtration(n)
                            .into_iter()
                            .filter(|&v| v != 0)
                            .collect()
                    })
                    .collect();
                Box::new(values.into_iter().multi_cartesian_product().map(move |vs| {
                    Element::from_entries(support.iter().copied().zip(vs))
                }))
            })
        })
    }

    /// All window-supported members, or a resource error when there are more
    /// than `cap`.
    pub fn enumerate(&self, window: &Window, spec: &GroupSpec, cap: u64) -> Result<Vec<Element>> {
        self.check_cap(window, spec, cap)?;
        Ok(self.iter(window, spec).collect())
    }

    pub fn check_cap(&self, window: &Window, spec: &GroupSpec, cap: u64) -> Result<()> {
        let needed = self.count(window, spec);
        if needed > u128::from(cap) {
            return Err(Error::Resource {
                what: format!("compact piece {} over {} indices", self.rank, window.len()),
                needed,
                cap,
            });
        }
        Ok(())
    }
}
