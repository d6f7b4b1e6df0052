//! Lebesgue covering lemmas for the direct sum.
//!
//! Both return a neighborhood subgroup `N = U_B` such that every relevant
//! point `x` has `x * N ⊆ choose(x)`. Because `N` is an open subgroup,
//! `N * N = N`, so this is also `x * N * N ⊆ choose(x)`.
//!
//! The containment rests on one fact: `choose(x)` contains `x`, so on every
//! coordinate it constrains it admits `x`'s value, and `x * U_B` pins exactly
//! those values whenever `B` covers the constrained coordinates.

use std::collections::BTreeSet;

use super::cover::CoverOracle;
use super::open::NbdSubgroup;
use super::piece::CompactPiece;
use crate::error::{Error, Result};
use crate::group::{GroupSpec, Index, Track, Window};

/// Compact form: `N` works for every point of `G_n` restricted to the window.
///
/// `B` is the union of the coordinates constrained by `choose(x)` over the
/// piece, that is, over the finite subcover `{choose(x) : x in G_n}`.
/// Scanning stops early once `B` holds every coordinate the cover could
/// constrain inside the window, since nothing can be added after that.
pub fn lebesgue_compact(
    cover: &CoverOracle,
    rank: u64,
    window: &Window,
    spec: &GroupSpec,
    cap: u64,
) -> Result<NbdSubgroup> {
    let piece = CompactPiece::new(rank);
    piece.check_cap(window, spec, cap)?;
    let ceiling: BTreeSet<Index> = match cover.uniform_bound() {
        Some(bound) => bound.intersection(window.indices()).copied().collect(),
        None => window.indices().clone(),
    };
    let mut pins = BTreeSet::new();
    for x in piece.iter(window, spec) {
        let u = cover
            .choose(&x, spec)
            .ok_or_else(|| Error::Contract(format!("cover {cover} does not contain {x}")))?;
        pins.extend(u.constraints().keys().copied());
        if pins.is_superset(&ceiling) && pins.len() == ceiling.len() {
            break;
        }
    }
    Ok(NbdSubgroup::new(pins))
}

/// P-group form: `N = U_{B*}` for the declared uniform bound `B*`. Works for
/// every point of the group, not only a compact piece.
pub fn lebesgue_pgroup(cover: &CoverOracle, spec: &GroupSpec) -> Result<NbdSubgroup> {
    let bound = cover.uniform_bound().ok_or_else(|| {
        Error::Contract(format!("cover {cover} declares no uniform bound"))
    })?;
    Ok(NbdSubgroup::new(bound).with_countable(spec.track == Track::BoxGdelta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, Element, Kappa};
    use crate::topology::BasicOpen;
    use std::collections::BTreeMap;

    fn z() -> GroupSpec {
        GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers)
    }

    /// Brute force over the piece: `x * N ⊆ choose(x)` by the exact subset
    /// test.
    fn holds(cover: &CoverOracle, n: &NbdSubgroup, rank: u64, w: &Window, spec: &GroupSpec) -> bool {
        CompactPiece::new(rank)
            .iter(w, spec)
            .all(|x| n.coset(&x).is_subset(&cover.choose(&x, spec).unwrap(), spec))
    }

    #[test]
    fn coset_cover_gives_its_pins() {
        let spec = z();
        let w = Window::range(2);
        let cover = CoverOracle::coset([0, 1]);
        let n = lebesgue_compact(&cover, 1, &w, &spec, 1000).unwrap();
        assert_eq!(n, NbdSubgroup::new([0, 1]));
        assert!(holds(&cover, &n, 1, &w, &spec));
    }

    #[test]
    fn whole_cover_gives_the_whole_group() {
        let spec = z();
        let n = lebesgue_compact(&CoverOracle::Whole, 2, &Window::range(3), &spec, 1000).unwrap();
        assert_eq!(n, NbdSubgroup::whole());
    }

    #[test]
    fn mixed_cover_unions_constraint_sets() {
        let spec = z();
        let w = Window::range(2);
        // points with x(0) != 0 are answered by a set constraining only 0,
        // everything else by a set constraining only 1
        let members = vec![
            BasicOpen::new(BTreeMap::from([(0, BTreeSet::from([1]))])).unwrap(),
            BasicOpen::new(BTreeMap::from([(0, BTreeSet::from([-1]))])).unwrap(),
            BasicOpen::new(BTreeMap::from([(1, BTreeSet::from([-1, 0, 1]))])).unwrap(),
        ];
        let cover = CoverOracle::Listed { members };
        let n = lebesgue_compact(&cover, 1, &w, &spec, 1000).unwrap();
        assert_eq!(n, NbdSubgroup::new([0, 1]));
        assert!(holds(&cover, &n, 1, &w, &spec));
    }

    #[test]
    fn non_cover_is_reported() {
        let spec = z();
        let cover = CoverOracle::Listed {
            members: vec![BasicOpen::coset(&"0:1".parse().unwrap(), &BTreeSet::from([0]))],
        };
        let err = lebesgue_compact(&cover, 1, &Window::range(1), &spec, 100).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn cap_exceeded_is_a_resource_error() {
        let err = lebesgue_compact(&CoverOracle::Whole, 3, &Window::range(5), &z(), 50).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
    }

    #[test]
    fn pgroup_form_uses_the_declared_bound() {
        let spec = GroupSpec::uniform(Kappa::default(), Track::BoxGdelta, ComponentGroup::cyclic(2).unwrap());
        let n = lebesgue_pgroup(&CoverOracle::coset([0, 1, 2]), &spec).unwrap();
        assert_eq!(n.pins(), &BTreeSet::from([0, 1, 2]));
        assert!(n.is_countable());
        assert_eq!(lebesgue_pgroup(&CoverOracle::Whole, &spec).unwrap().pins(), &BTreeSet::new());
        let err = lebesgue_pgroup(&CoverOracle::Pinning { base: BTreeSet::new() }, &spec).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn pgroup_form_holds_at_random_points() {
        use rand::{Rng, SeedableRng};
        let spec = z();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for seed in 0..20 {
            let cover = CoverOracle::hashed(seed, [0, 2, 3], 2);
            let n = lebesgue_pgroup(&cover, &spec).unwrap();
            for _ in 0..200 {
                let x = Element::from_entries((0..6).map(|i| (i, rng.random_range(-3..=3))));
                let u = cover.choose(&x, &spec).unwrap();
                // sample y = x * v with v in N
                let v = Element::from_entries(
                    (0..8).filter(|i| !n.pins().contains(i)).map(|i| (i, rng.random_range(-5..=5))),
                );
                assert!(n.contains(&v));
                let y = spec.op(&x, &v).unwrap();
                assert!(u.contains(&y));
            }
        }
    }
}
