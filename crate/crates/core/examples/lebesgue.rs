//! The two Lebesgue covering lemmas: one neighborhood `N` such that every
//! `x * N` fits in the member of the cover chosen at `x`.

use rothberger::topology::{lebesgue_compact, lebesgue_pgroup, CompactPiece, CoverOracle};
use rothberger::{ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let window = Window::range(3);
    let compact = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    // x -> x * U_{{0} ∪ support(x)}: a cover with no uniform bound
    let cover = CoverOracle::Pinning { base: [0].into() };
    for n in 0..=2 {
        let nbd = lebesgue_compact(&cover, n, &window, &compact, 10_000)?;
        let piece = CompactPiece::new(n);
        let ok = piece
            .iter(&window, &compact)
            .all(|x| nbd.coset(&x).is_subset(&cover.choose(&x, &compact).expect("a cover"), &compact));
        println!("piece {n} ({} points): N = {nbd}, every x * N inside its member: {ok}", piece.count(&window, &compact));
    }

    let pgroup = GroupSpec::uniform(Kappa::default(), Track::BoxGdelta, ComponentGroup::cyclic(6)?);
    let bounded = CoverOracle::hashed(42, [0, 2], 1);
    let nbd = lebesgue_pgroup(&bounded, &pgroup)?;
    println!("P-group: {bounded} has N = {nbd}");
    match lebesgue_pgroup(&cover, &pgroup) {
        Ok(n) => println!("unexpected N = {n}"),
        Err(e) => println!("unbounded cover: {e}"),
    }
    Ok(())
}
