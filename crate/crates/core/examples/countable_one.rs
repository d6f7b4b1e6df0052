//! The countable-1 game: ONE names growing sets, TWO picks a point each
//! inning by the pairing schedule and eventually picks every member
//! infinitely often.

use rothberger::game::{play, GameKind, GameSpec, TwoMove};
use rothberger::strategy::adversary::RandomCountable;
use rothberger::strategy::schedule::{bound, unpair};
use rothberger::strategy::BookkeepingTwo;
use rothberger::{ComponentGroup, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    let window = Window::range(4);
    let innings = bound(8, 4) as usize + 1;
    let game = GameSpec::new(GameKind::CountableOne, spec, window.clone(), innings)?;
    let t = play(&game, &mut RandomCountable::new(9, window.iter(), 3), &mut BookkeepingTwo::new(), innings, 9, vec![])?;

    for r in t.innings.iter().take(10) {
        let s = r.instrumentation.schedule.as_ref().expect("recorded");
        let TwoMove::Point { point } = &r.two_move else { unreachable!() };
        println!("inning {:>2} slot {:?}: rank {} -> ({point})", r.inning, unpair(r.inning as u64), s.rank);
    }
    println!("rank 8 is due for the 4th time by inning {}", bound(8, 4));
    Ok(())
}
