//! Open-cover game on Z/2 over omega_1 with the countable box topology.
//! TWO answers every cover through its Lebesgue neighborhood.

use rothberger::game::{play, validate, GameKind, GameSpec};
use rothberger::strategy::adversary::RandomCover;
use rothberger::strategy::PGroupTwo;
use rothberger::{CompactPiece, ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::BoxGdelta, ComponentGroup::cyclic(2)?);
    let window = Window::range(3);
    let game = GameSpec::new(GameKind::OpenCovers, spec.clone(), window.clone(), 48)?;
    // every element supported in the window
    let probes = CompactPiece::new(3).enumerate(&window, &spec, 1_000)?;

    let t = play(&game, &mut RandomCover::new(11, window.iter(), 1), &mut PGroupTwo::new(), 48, 11, probes)?;
    for r in t.innings.iter().take(3) {
        let ins = &r.instrumentation;
        println!("inning {}: ONE {}", r.inning, r.one_move);
        println!("  N = {}, TWO {}", ins.nbd.as_ref().expect("recorded"), r.two_move);
    }
    println!("{}", validate(&t));
    for (p, hits) in t.probe_coverage() {
        println!("probe ({p}): first covered at {:?}", hits.first());
    }
    Ok(())
}
