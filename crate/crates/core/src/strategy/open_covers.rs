//! TWO's winning strategies in `G1(O, O)`.
//!
//! Both reduce an arbitrary open cover to a neighborhood cover with a
//! Lebesgue lemma, let [`NbdTwo`] answer that, and play a member of ONE's
//! cover containing the answer.

use super::nbd::NbdTwo;
use crate::error::{Error, Player, Result};
use crate::game::{CosetRecord, GameSpec, OneMove, TwoMove, TwoReply, TwoStrategy};
use crate::group::Element;
use crate::topology::{lebesgue_compact, lebesgue_pgroup, CompactPiece, CoverOracle, RefinementMeet, DEFAULT_PIECE_CAP};

fn expect_cover(inning: usize, one: &OneMove) -> Result<&CoverOracle> {
    match one {
        OneMove::Cover { cover } => Ok(cover),
        _ => Err(Error::legality(inning, Player::One, "move-kind", format!("expected an open cover, got {one}"))),
    }
}

fn not_a_cover(inning: usize, cover: &CoverOracle, x: &Element) -> Error {
    Error::legality(inning, Player::One, "cover", format!("{cover} has no member containing ({x})"))
}

/// Lindelöf P-group strategy: `N_n = U_{B*}` from the cover's declared
/// uniform bound, inner coset `c_n * N_n`, play `choose(c_n)`.
#[derive(Clone, Debug, Default)]
pub struct PGroupTwo {
    inner: NbdTwo,
}

impl PGroupTwo {
    pub fn new() -> Self {
        PGroupTwo::default()
    }
}

impl TwoStrategy for PGroupTwo {
    fn label(&self) -> String {
        "pgroup".into()
    }

    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply> {
        let spec = &game.group;
        let cover = expect_cover(inning, one)?;
        let n = lebesgue_pgroup(cover, spec)?;
        let (c, mut instrumentation) = self.inner.answer(inning, &n, spec)?;
        let member = cover.choose(&c, spec).ok_or_else(|| not_a_cover(inning, cover, &c))?;
        instrumentation.nbd = Some(n.clone());
        instrumentation.inner = Some(CosetRecord::new(c.clone(), n));
        Ok(TwoReply {
            mv: TwoMove::member(member, c),
            instrumentation,
        })
    }
}

/// Sigma-compact strategy.
///
/// At inning `n` the running meet `O_0 ∧ ... ∧ O_n` goes through the compact
/// Lebesgue lemma on the piece `G_n`, giving `U_n`. The inner strategy answers
/// `O(U_n)` with `x_n * U_n`. When that coset meets `G_n`, its canonical
/// point `x = x_n` restricted to `U_n`'s pins lies in `G_n`, so
/// `x_n * U_n = x * U_n ⊆ meet.choose(x) ⊆ O_n.choose(x)`; TWO plays the
/// latter. Otherwise `x` is the first element of `G_n` and nothing is
/// promised.
#[derive(Clone, Debug)]
pub struct SigmaTwo {
    inner: NbdTwo,
    meet: RefinementMeet,
    cap: u64,
}

impl Default for SigmaTwo {
    fn default() -> Self {
        SigmaTwo::new(DEFAULT_PIECE_CAP)
    }
}

impl SigmaTwo {
    pub fn new(cap: u64) -> Self {
        SigmaTwo {
            inner: NbdTwo::new(),
            meet: RefinementMeet::new(),
            cap,
        }
    }
}

impl TwoStrategy for SigmaTwo {
    fn label(&self) -> String {
        "sigma".into()
    }

    fn respond(&mut self, game: &GameSpec, inning: usize, one: &OneMove) -> Result<TwoReply> {
        let spec = &game.group;
        let cover = expect_cover(inning, one)?;
        self.meet.push(cover.clone());
        let meet = self.meet.as_oracle();
        let rank = inning as u64;
        let u = lebesgue_compact(&meet, rank, &game.window, spec, self.cap).map_err(|e| match e {
            Error::Contract(d) => Error::legality(inning, Player::One, "cover", d),
            e => e,
        })?;
        let (xn, mut instrumentation) = self.inner.answer(inning, &u, spec)?;
        let piece = CompactPiece::new(rank);
        let canonical = xn.restrict(u.pins());
        let (x, fallback) = if piece.contains(&canonical, spec) {
            (canonical, false)
        } else {
            let first = piece.iter(&game.window, spec).next().expect("pieces contain the identity");
            (first, true)
        };
        let member = cover.choose(&x, spec).ok_or_else(|| not_a_cover(inning, cover, &x))?;
        instrumentation.nbd = Some(u.clone());
        instrumentation.inner = Some(CosetRecord::new(xn, u));
        instrumentation.piece = Some(rank);
        instrumentation.fallback = fallback;
        Ok(TwoReply {
            mv: TwoMove::member(member, x),
            instrumentation,
        })
    }
}
