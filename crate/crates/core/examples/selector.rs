//! A selector for a sequence of neighborhood covers: the element of rank
//! `n` in the enumeration of the union of the pins is picked at step `n`.

use rothberger::strategy::{first_cover, promised_inning, roth_selector};
use rothberger::{ComponentGroup, Element, GroupSpec, Kappa, NbdSubgroup, Track};

fn main() -> rothberger::Result<()> {
    let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
    let nbds: Vec<NbdSubgroup> = (0..40u32).map(|n| NbdSubgroup::new([n % 3, 5])).collect();
    let picks = roth_selector(&nbds, &spec);
    println!("first picks: {}", picks.iter().take(8).map(|x| format!("({x})")).collect::<Vec<_>>().join(" "));

    for x in ["id", "0:1", "5:-1,9:4", "1:2,2:-1"] {
        let x: Element = x.parse()?;
        println!(
            "({x}): promised by step {:?}, first covered at {:?}",
            promised_inning(&nbds, &x, &spec),
            first_cover(&picks, &nbds, &x)
        );
    }
    Ok(())
}
