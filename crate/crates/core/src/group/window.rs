use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::element::{Element, Index};

/// The finite set of coordinates a run is allowed to touch. Everything
/// outside the window behaves as the identity coordinate.
///
/// Windows only grow: [`extend`](Window::extend) and
/// [`fresh`](Window::fresh) add indices, nothing removes them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Window {
    indices: BTreeSet<Index>,
}

impl Window {
    pub fn new<I: IntoIterator<Item = Index>>(indices: I) -> Self {
        Window {
            indices: indices.into_iter().collect(),
        }
    }

    /// `{0, .., n - 1}`.
    pub fn range(n: Index) -> Self {
        Window::new(0..n)
    }

    pub fn indices(&self) -> &BTreeSet<Index> {
        &self.indices
    }

    pub fn iter(&self) -> impl Iterator<Item = Index> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: Index) -> bool {
        self.indices.contains(&index)
    }

    pub fn covers(&self, x: &Element) -> bool {
        x.support_within(&self.indices)
    }

    pub fn covers_set(&self, set: &BTreeSet<Index>) -> bool {
        set.is_subset(&self.indices)
    }

    pub fn is_subset(&self, other: &Window) -> bool {
        self.indices.is_subset(&other.indices)
    }

    pub fn extend<I: IntoIterator<Item = Index>>(&mut self, indices: I) {
        self.indices.extend(indices);
    }

    /// Draws `k` new indices from the reserve above the current maximum and
    /// adds them to the window.
    pub fn fresh(&mut self, k: usize) -> Vec<Index> {
        let start = self.indices.last().map_or(0, |m| m + 1);
        let new: Vec<Index> = (start..start + k as Index).collect();
        self.indices.extend(new.iter().copied());
        new
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_indices_come_from_the_reserve() {
        let mut w = Window::new([0, 3]);
        let before = w.clone();
        assert_eq!(w.fresh(2), vec![4, 5]);
        assert!(before.is_subset(&w));
        assert_eq!(Window::default().fresh(1), vec![0]);
    }

    #[test]
    fn covers_checks_support() {
        let w = Window::range(3);
        assert!(w.covers(&"0:1,2:1".parse().unwrap()));
        assert!(!w.covers(&"3:1".parse().unwrap()));
        assert!(w.covers(&Element::identity()));
    }
}
