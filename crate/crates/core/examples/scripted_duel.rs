//! The interactive duel driven by a script instead of a terminal. Bad or
//! illegal moves are explained and asked for again.

use rothberger::game::{validate, GameKind, GameSpec};
use rothberger::sim::duel;
use rothberger::strategy::NbdTwo;
use rothberger::{ComponentGroup, Element, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    let game = GameSpec::new(GameKind::NbdCovers, spec, Window::range(4), 16)?;
    let script = "0\n0,12\nhelp\n{0, 2}\nnonsense\n1\nquit\n";
    let probes = vec![Element::identity(), "0:1".parse()?];

    let t = duel(&game, &mut NbdTwo::new(), 16, 0, probes, script.as_bytes(), std::io::stdout())?;
    println!("\n{} innings played, {}", t.innings.len(), validate(&t));
    Ok(())
}
