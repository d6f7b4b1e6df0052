//! TWO's strategy in the neighborhood-cover game on the integers over
//! omega_1, with the per-probe claims checked after the play.

use rothberger::game::{play, validate, GameKind, GameSpec};
use rothberger::sim::default_probes;
use rothberger::strategy::adversary::RandomNbd;
use rothberger::strategy::{check_claims_all, NbdTwo};
use rothberger::{ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    let window = Window::range(6);
    let game = GameSpec::new(GameKind::NbdCovers, spec.clone(), window.clone(), 64)?;
    let probes = default_probes(&window, &spec, 1);

    let mut one = RandomNbd::new(7, window.iter(), 1, false);
    let t = play(&game, &mut one, &mut NbdTwo::new(), 64, 7, probes.clone())?;

    for r in t.innings.iter().take(4) {
        println!("inning {}: ONE {}  TWO {}", r.inning, r.one_move, r.two_move);
    }
    println!("{}", validate(&t));
    for report in check_claims_all(&t, &probes) {
        println!(
            "probe ({}): rank {:?}, promised {:?}, covered {} times, {} violations",
            report.probe,
            report.rank,
            report.promised,
            report.coverage.len(),
            report.violations.len()
        );
    }
    Ok(())
}
