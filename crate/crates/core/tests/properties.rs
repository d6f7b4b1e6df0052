use std::collections::BTreeSet;

use proptest::prelude::*;

use rothberger::game::{play, GameKind, GameSpec, Transcript};
use rothberger::group::TableGroup;
use rothberger::strategy::adversary::RandomNbd;
use rothberger::strategy::NbdTwo;
use rothberger::topology::{coset_equal, height, SupportedElements};
use rothberger::{ComponentGroup, Element, GroupSpec, Index, Kappa, NbdSubgroup, Track, Window};

fn spec(kind: u8) -> GroupSpec {
    let g = match kind % 4 {
        0 => ComponentGroup::Integers,
        1 => ComponentGroup::Cyclic { order: 2 },
        2 => ComponentGroup::Cyclic { order: 6 },
        _ => ComponentGroup::Table { table: TableGroup::s3() },
    };
    GroupSpec::uniform(Kappa::default(), Track::Product, g)
}

/// Raw entries are reduced into the component; value 0 is the identity of
/// every kind.
fn element(kind: u8) -> impl Strategy<Value = Element> {
    prop::collection::btree_map(0u32..8, -9i64..10, 0..5).prop_map(move |m| {
        let s = spec(kind);
        Element::from_entries(m.into_iter().map(|(i, v)| {
            let g = s.component(i);
            let v = match g.max_rank() {
                Some(top) => g.value_at(v.unsigned_abs() % (top + 1)).unwrap(),
                None => v,
            };
            (i, v)
        }))
    })
}

fn pins() -> impl Strategy<Value = BTreeSet<Index>> {
    prop::collection::btree_set(0u32..8, 0..6)
}

fn triple() -> impl Strategy<Value = (u8, Element, Element, Element)> {
    (0u8..4).prop_flat_map(|k| (Just(k), element(k), element(k), element(k)))
}

proptest! {
    #[test]
    fn group_laws((k, a, b, c) in triple()) {
        let s = spec(k);
        let op = |x: &Element, y: &Element| s.op(x, y).unwrap();
        prop_assert_eq!(op(&op(&a, &b), &c), op(&a, &op(&b, &c)));
        prop_assert_eq!(op(&a, &Element::identity()), a.clone());
        prop_assert!(op(&a, &s.inv(&a).unwrap()).is_identity());
        prop_assert!(op(&a, &b).entries().all(|(_, v)| v != 0));
    }

    #[test]
    fn restriction_is_a_homomorphism((k, a, b, _c) in triple(), p in pins()) {
        let s = spec(k);
        prop_assert_eq!(
            s.op(&a, &b).unwrap().restrict(&p),
            s.op(&a.restrict(&p), &b.restrict(&p)).unwrap()
        );
    }

    #[test]
    fn cosets_partition_and_agree_three_ways((k, a, b, _c) in triple(), p in pins()) {
        let s = spec(k);
        let u = NbdSubgroup::new(p.iter().copied());
        let (ca, cb) = (u.coset(&a), u.coset(&b));
        let eq = coset_equal(&a, &b, &p);
        prop_assert_eq!(eq, cb.contains(&a));
        prop_assert_eq!(eq, u.contains(&s.op(&s.inv(&b).unwrap(), &a).unwrap()));
        prop_assert_eq!(eq, ca.same_set(&cb, &s));
        prop_assert_eq!(!eq, ca.is_disjoint(&cb));
    }

    #[test]
    fn neighborhoods_are_antitone(p in pins(), q in pins()) {
        let wide = NbdSubgroup::new(p.union(&q).copied());
        prop_assert!(wide.is_subgroup_of(&NbdSubgroup::new(p.iter().copied())));
        prop_assert!(wide.is_subgroup_of(&NbdSubgroup::new(q.iter().copied())));
    }

    #[test]
    fn supported_enumeration_is_a_height_ordered_bijection(k in 0u8..4, p in prop::collection::btree_set(0u32..5, 0..3), r in 0u128..200) {
        let s = spec(k);
        let e = SupportedElements::new(&p, &s);
        if let Some(x) = e.nth(r) {
            prop_assert_eq!(e.rank_of(&x), Some(r));
            prop_assert!(x.support_within(&p));
            if let Some(y) = e.nth(r + 1) {
                prop_assert!(height(&x, &s) <= height(&y, &s));
            }
        } else {
            prop_assert!(e.total().is_some_and(|t| t <= r));
        }
    }

    #[test]
    fn powers_embed_and_project(k in 0u8..4, a in element(0), b in element(0)) {
        let s = spec(k);
        let sq = s.power(2, 8).unwrap();
        let x = GroupSpec::embed(&[a.clone(), b.clone()], 8).unwrap();
        prop_assert_eq!(GroupSpec::project(&x, 0, 8), a.clone());
        prop_assert_eq!(GroupSpec::project(&x, 1, 8), b.clone());
        prop_assert_eq!(sq.component(9), s.component(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transcripts_round_trip(seed in any::<u64>(), innings in 1usize..20) {
        let s = spec(0);
        let g = GameSpec::new(GameKind::NbdCovers, s, Window::range(5), 20).unwrap();
        let t = play(&g, &mut RandomNbd::new(seed, 0..5, 1, false), &mut NbdTwo::new(), innings, seed, vec![Element::identity()]).unwrap();
        let text = t.to_jsonl();
        let back = Transcript::from_jsonl(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_jsonl(), text);
    }
}
