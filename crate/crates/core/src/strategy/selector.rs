//! Rothberger selectors for sigma-compact direct sums.
//!
//! Given neighborhoods `U_n = U_{B_n}`, let `C = ∪ B_n` and let `g_n` be the
//! `n`-th element supported in `C`. Then `f_n = g_n` works: an element `x`
//! supported in `C` equals `g_r` for its rank `r`, so `x ∈ f_r * U_r`. A
//! general `x` lies in `f_r * U_r` for the rank `r` of `x` restricted to `C`.

use std::collections::BTreeSet;

use crate::group::{Element, GroupSpec, Index};
use crate::topology::{NbdSubgroup, SupportedElements};

fn union(nbds: &[NbdSubgroup]) -> BTreeSet<Index> {
    nbds.iter().flat_map(|u| u.pins().iter().copied()).collect()
}

/// `f_0, f_1, ...` for the given neighborhoods. When only finitely many
/// elements are supported in `C` the enumeration wraps around.
pub fn roth_selector(nbds: &[NbdSubgroup], spec: &GroupSpec) -> Vec<Element> {
    let reps = SupportedElements::new(&union(nbds), spec);
    let total = reps.total();
    (0..nbds.len() as u128)
        .map(|n| {
            let k = total.map_or(n, |t| n % t);
            reps.nth(k).expect("rank is below the total")
        })
        .collect()
}

/// First `n` with `x ∈ f_n * U_n`.
pub fn first_cover(selection: &[Element], nbds: &[NbdSubgroup], x: &Element) -> Option<usize> {
    selection
        .iter()
        .zip(nbds)
        .position(|(f, u)| u.coset(f).contains(x))
}

/// Rank of `x` restricted to `C`: the inning by which the selector covers
/// `x`, if there are that many innings.
pub fn promised_inning(nbds: &[NbdSubgroup], x: &Element, spec: &GroupSpec) -> Option<u128> {
    let c = union(nbds);
    SupportedElements::new(&c, spec).rank_of(&x.restrict(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Kappa, Track};

    #[test]
    fn whole_group_is_covered_at_once() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        let nbds = vec![NbdSubgroup::whole(); 3];
        let f = roth_selector(&nbds, &spec);
        assert_eq!(first_cover(&f, &nbds, &"4:9".parse().unwrap()), Some(0));
    }

    #[test]
    fn cyclic_square_is_covered_at_each_rank() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::cyclic(2).unwrap());
        let nbds = vec![NbdSubgroup::new([0, 1]); 4];
        let f = roth_selector(&nbds, &spec);
        let reps = SupportedElements::new(&BTreeSet::from([0, 1]), &spec);
        for r in 0..4u128 {
            let x = reps.nth(r).unwrap();
            assert_eq!(first_cover(&f, &nbds, &x), Some(r as usize));
        }
    }

    #[test]
    fn off_c_coordinates_do_not_matter() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        let nbds = vec![NbdSubgroup::new([0]); 10];
        let f = roth_selector(&nbds, &spec);
        let x: Element = "0:-1,5:3".parse().unwrap();
        let r = promised_inning(&nbds, &x, &spec).unwrap() as usize;
        assert_eq!(first_cover(&f, &nbds, &x), Some(r));
    }
}
