//! Finite powers of a direct sum are again direct sums, so the strategies
//! apply to them unchanged.

use rothberger::game::{play, validate, GameKind, GameSpec};
use rothberger::strategy::adversary::RandomNbd;
use rothberger::strategy::NbdTwo;
use rothberger::{ComponentGroup, Element, GroupSpec, Kappa, Track, Window};

fn main() -> rothberger::Result<()> {
    let base = GroupSpec::uniform(Kappa::Finite(4), Track::Product, ComponentGroup::cyclic(3)?);
    let cube = base.power(3, 4)?;
    println!("{cube}");

    let parts: Vec<Element> = ["0:1", "id", "1:2,3:1"].iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    let x = GroupSpec::embed(&parts, 4)?;
    println!("({}) embeds as ({x}); factor 2 projects back to ({})", parts[2], GroupSpec::project(&x, 2, 4));

    let window = Window::range(12);
    let game = GameSpec::new(GameKind::NbdCovers, cube, window.clone(), 32)?;
    let t = play(&game, &mut RandomNbd::new(1, window.iter(), 1, false), &mut NbdTwo::new(), 32, 1, vec![x.clone()])?;
    println!("{}; ({x}) covered at {:?}", validate(&t), t.coverage(&x));
    Ok(())
}
