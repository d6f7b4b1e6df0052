//! No strategy of ONE wins: given ONE's strategy as a black box, build a
//! play against it in which TWO's picks cover every point of a compact
//! piece.

use rothberger::game::{validate, GameKind, GameSpec};
use rothberger::strategy::adversary::Shrinking;
use rothberger::strategy::{counter_play, TargetSet};
use rothberger::{CompactPiece, ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::cyclic(2)?);
    let window = Window::range(3);
    let game = GameSpec::new(GameKind::OpenCovers, spec.clone(), window.clone(), 64)?;
    let probes = CompactPiece::new(2).enumerate(&window, &spec, 1_000)?;

    // ONE shrinks its cover every inning
    let mut f = Shrinking::new(3, window.iter(), 1, true, false);
    let t = counter_play(&mut f, &game, TargetSet::All, 64, 3, probes)?;
    for r in t.innings.iter().take(5) {
        let ins = &r.instrumentation;
        println!(
            "inning {}: target {}  TWO {}",
            r.inning,
            ins.target.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            r.two_move
        );
    }
    println!("{}", validate(&t));
    for (p, hits) in t.probe_coverage() {
        println!("probe ({p}): first covered at {:?}", hits.first());
    }
    Ok(())
}
