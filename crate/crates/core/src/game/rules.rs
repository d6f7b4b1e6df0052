//! Legality rules shared by the referee and the offline validator.

use super::moves::{GameKind, OneMove, TwoMove};
use crate::error::{Error, Player};
use crate::group::{GroupSpec, Track, Window};

/// A broken rule, before it is attached to an inning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub player: Player,
    pub rule: &'static str,
    pub detail: String,
}

impl Fault {
    fn one(rule: &'static str, detail: impl Into<String>) -> Self {
        Fault {
            player: Player::One,
            rule,
            detail: detail.into(),
        }
    }

    fn two(rule: &'static str, detail: impl Into<String>) -> Self {
        Fault {
            player: Player::Two,
            rule,
            detail: detail.into(),
        }
    }

    pub fn at(self, inning: usize) -> Error {
        Error::legality(inning, self.player, self.rule, self.detail)
    }
}

/// ONE's move must match the game, stay in the window, respect the track,
/// and (in the countable-1 game) extend the previous move.
pub fn check_one(
    kind: GameKind,
    spec: &GroupSpec,
    window: &Window,
    mv: &OneMove,
    prev: Option<&OneMove>,
) -> Result<(), Fault> {
    if mv.kind() != kind {
        return Err(Fault::one("move-kind", format!("{kind} does not accept {mv}")));
    }
    match mv {
        OneMove::Nbd { nbd } => {
            if !window.covers_set(nbd.pins()) {
                return Err(Fault::one("window", format!("{nbd} pins indices outside the window")));
            }
            if nbd.is_countable() && spec.track == Track::Product {
                return Err(Fault::one(
                    "finite-nbd",
                    "the product topology only has neighborhoods pinning finitely many indices",
                ));
            }
        }
        OneMove::Cover { cover } => {
            cover.check(spec, window).map_err(|e| Fault::one("window", e.to_string()))?;
        }
        OneMove::Countable { set } => {
            if set.is_empty() {
                return Err(Fault::one("nonempty", "W_n must be nonempty"));
            }
            set.check(spec, window).map_err(|e| Fault::one("window", e.to_string()))?;
            if let Some(OneMove::Countable { set: before }) = prev {
                if let Some(x) = set.missing_from(before, spec) {
                    return Err(Fault::one(
                        "monotone",
                        format!("({x}) was in the previous W but is missing now"),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// TWO's move must be a member of ONE's move.
pub fn check_two(
    spec: &GroupSpec,
    window: &Window,
    one: &OneMove,
    two: &TwoMove,
) -> Result<(), Fault> {
    match (one, two) {
        (OneMove::Nbd { nbd }, TwoMove::Member { set, witness }) => {
            check_point(spec, window, witness)?;
            if *set != nbd.coset(witness) {
                return Err(Fault::two(
                    "coset-member",
                    format!("{set} is not the coset ({witness}) * {nbd}"),
                ));
            }
        }
        (OneMove::Cover { cover }, TwoMove::Member { set, witness }) => {
            check_point(spec, window, witness)?;
            match cover.choose(witness, spec) {
                Some(u) if u == *set && u.contains(witness) => {}
                Some(u) => {
                    return Err(Fault::two(
                        "oracle-member",
                        format!("{set} is not the member {u} chosen at ({witness})"),
                    ))
                }
                None => {
                    return Err(Fault::one(
                        "cover",
                        format!("{cover} has no member containing ({witness})"),
                    ))
                }
            }
        }
        (OneMove::Countable { set }, TwoMove::Point { point }) => {
            if !set.contains(point, spec) {
                return Err(Fault::two("point-member", format!("({point}) is not in W_n")));
            }
        }
        _ => return Err(Fault::two("move-kind", format!("{two} does not answer {one}"))),
    }
    Ok(())
}

fn check_point(spec: &GroupSpec, window: &Window, x: &crate::group::Element) -> Result<(), Fault> {
    if !window.covers(x) {
        return Err(Fault::two("window", format!("({x}) is outside the window")));
    }
    spec.check(x).map_err(|e| Fault::two("window", e.to_string()))
}
