//! Open-cover game on the sigma-compact track: TWO meets ONE's covers,
//! takes a Lebesgue neighborhood on the compact piece of the inning, and
//! plays the member around the neighborhood strategy's point.

use rothberger::game::{play, validate, GameKind, GameSpec};
use rothberger::strategy::adversary::RandomCover;
use rothberger::strategy::SigmaTwo;
use rothberger::{CompactPiece, ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    let window = Window::range(1);
    let game = GameSpec::new(GameKind::OpenCovers, spec.clone(), window.clone(), 48)?;
    let probes = CompactPiece::new(2).enumerate(&window, &spec, 1_000)?;

    let t = play(&game, &mut RandomCover::new(5, window.iter(), 1), &mut SigmaTwo::default(), 48, 5, probes)?;
    for r in t.innings.iter().take(6) {
        let ins = &r.instrumentation;
        println!(
            "inning {} (piece {:?}): inner {}  TWO {}",
            r.inning,
            ins.piece,
            ins.inner.as_ref().expect("recorded"),
            r.two_move
        );
    }
    let fallbacks = t.innings.iter().filter(|r| r.instrumentation.fallback).count();
    println!("{} fallbacks; {}", fallbacks, validate(&t));
    for (p, hits) in t.probe_coverage() {
        println!("probe ({p}): covered {} times", hits.len());
    }
    Ok(())
}
