//! Interactive play: a human types ONE's moves, a configured strategy
//! answers as TWO.
//!
//! Move syntax, one per line:
//!
//! - neighborhood game: `0,1,3`, `{0,1,3}` or `none`; prefix `countable`
//!   on the box track;
//! - open-cover game: `whole`, `coset 0,1`, `pinning 0,1` or
//!   `hashed SEED 0,1 [SPREAD]`;
//! - countable game: `finite id; 0:1; 1:-2` or `supported 0,1`.
//!
//! `quit` ends the session, `help` repeats the syntax. A malformed or
//! illegal move is explained and asked for again.

use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::game::{CountableSet, GameKind, GameSpec, OneMove, Outcome, Referee, Transcript, TwoStrategy};
use crate::group::{Element, Index};
use crate::topology::{CoverOracle, NbdSubgroup};

/// What a line of input asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Move(OneMove),
    Help,
    Quit,
}

pub fn syntax(kind: GameKind) -> &'static str {
    match kind {
        GameKind::NbdCovers => "indices such as `0,1,3` or `{0,1,3}`, `none`, optionally prefixed by `countable`",
        GameKind::OpenCovers => "`whole`, `coset 0,1`, `pinning 0,1` or `hashed SEED 0,1 [SPREAD]`",
        GameKind::CountableOne => "`finite id; 0:1; 1:-2` or `supported 0,1`",
    }
}

fn parse_indices(s: &str) -> Result<BTreeSet<Index>> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if s.is_empty() || s == "none" {
        return Ok(BTreeSet::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<Index>().map_err(|_| Error::Parse(format!("bad index `{}`", p.trim()))))
        .collect()
}

/// Parses one line of input for the game `kind`.
pub fn parse_command(kind: GameKind, line: &str) -> Result<Command> {
    let line = line.trim();
    match line {
        "quit" | "q" | "exit" => return Ok(Command::Quit),
        "help" | "?" => return Ok(Command::Help),
        _ => {}
    }
    let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let mv = match kind {
        GameKind::NbdCovers => {
            if head == "countable" {
                OneMove::nbd(NbdSubgroup::countable(parse_indices(rest)?))
            } else {
                OneMove::nbd(NbdSubgroup::new(parse_indices(line)?))
            }
        }
        GameKind::OpenCovers => OneMove::cover(match head {
            "whole" if rest.trim().is_empty() => CoverOracle::Whole,
            "coset" => CoverOracle::Coset {
                pins: parse_indices(rest)?,
            },
            "pinning" => CoverOracle::Pinning {
                base: parse_indices(rest)?,
            },
            "hashed" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let (seed, pool, spread) = match parts.as_slice() {
                    [seed, pool] => (seed, pool, "1"),
                    [seed, pool, spread] => (seed, pool, *spread),
                    _ => return Err(Error::Parse("expected `hashed SEED POOL [SPREAD]`".into())),
                };
                CoverOracle::hashed(
                    seed.parse().map_err(|_| Error::Parse(format!("bad seed `{seed}`")))?,
                    parse_indices(pool)?,
                    spread.parse().map_err(|_| Error::Parse(format!("bad spread `{spread}`")))?,
                )
            }
            _ => return Err(Error::Parse(format!("unknown cover `{line}`"))),
        }),
        GameKind::CountableOne => OneMove::countable(match head {
            "finite" => CountableSet::finite(
                rest.split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.parse::<Element>())
                    .collect::<Result<_>>()?,
            ),
            "supported" => CountableSet::Supported {
                pins: parse_indices(rest)?,
            },
            _ => return Err(Error::Parse(format!("unknown set `{line}`"))),
        }),
    };
    Ok(Command::Move(mv))
}

/// Runs a session until `innings` innings are played, the cap is reached,
/// the input ends, or the player quits.
pub fn duel<R: BufRead, W: Write>(
    game: &GameSpec,
    two: &mut dyn TwoStrategy,
    innings: usize,
    seed: u64,
    probes: Vec<Element>,
    input: R,
    mut out: W,
) -> Result<Transcript> {
    let mut referee = Referee::new(game.clone(), seed, probes)?.with_labels("human", two.label());
    let mut lines = input.lines();
    let mut outcome = Outcome::Truncated;
    writeln!(out, "{} on {} over window {:?}", game.kind, game.group, game.window.indices())?;
    writeln!(out, "moves: {}; `quit` ends", syntax(game.kind))?;
    while referee.inning() < innings && !referee.is_capped() {
        write!(out, "inning {}> ", referee.inning())?;
        out.flush()?;
        let Some(line) = lines.next() else {
            writeln!(out)?;
            break;
        };
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mv = match parse_command(game.kind, &line) {
            Ok(Command::Quit) => {
                writeln!(out)?;
                outcome = Outcome::Quit;
                break;
            }
            Ok(Command::Help) => {
                writeln!(out, "moves: {}", syntax(game.kind))?;
                continue;
            }
            Ok(Command::Move(mv)) => mv,
            Err(e) => {
                writeln!(out, "cannot read that move: {e}")?;
                continue;
            }
        };
        if let Err(e) = referee.check_one(&mv) {
            writeln!(out, "illegal move: {e}")?;
            continue;
        }
        let record = referee.play_inning(mv, two)?;
        writeln!(out, "TWO plays {}", record.two_move)?;
    }
    let t = referee.finish(outcome);
    for (p, hits) in t.probe_coverage() {
        writeln!(out, "probe ({p}) covered at {hits:?}")?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ComponentGroup, GroupSpec, Kappa, Track, Window};
    use crate::strategy::{BookkeepingTwo, NbdTwo};

    fn game(kind: GameKind) -> GameSpec {
        let spec = GroupSpec::uniform(Kappa::default(), Track::Product, ComponentGroup::Integers);
        GameSpec::new(kind, spec, Window::range(4), 10).unwrap()
    }

    #[test]
    fn parses_moves() {
        assert_eq!(
            parse_command(GameKind::NbdCovers, "{0, 2}").unwrap(),
            Command::Move(OneMove::nbd(NbdSubgroup::new([0, 2])))
        );
        assert_eq!(
            parse_command(GameKind::OpenCovers, "hashed 5 0,1 2").unwrap(),
            Command::Move(OneMove::cover(CoverOracle::hashed(5, [0, 1], 2)))
        );
        assert!(matches!(
            parse_command(GameKind::CountableOne, "finite id; 0:1").unwrap(),
            Command::Move(OneMove::Countable { .. })
        ));
        assert_eq!(parse_command(GameKind::OpenCovers, "quit").unwrap(), Command::Quit);
        assert!(parse_command(GameKind::OpenCovers, "cover me").is_err());
        assert!(parse_command(GameKind::NbdCovers, "0,x").is_err());
    }

    #[test]
    fn reprompts_and_quits() {
        let input = "0\n0,9\nbanana\n0,1\nquit\n";
        let mut out = Vec::new();
        let t = duel(
            &game(GameKind::NbdCovers),
            &mut NbdTwo::new(),
            10,
            0,
            vec![Element::identity()],
            input.as_bytes(),
            &mut out,
        )
        .unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(t.innings.len(), 2);
        assert_eq!(t.header.outcome, Outcome::Quit);
        assert!(text.contains("illegal move"), "{text}");
        assert!(text.contains("cannot read"), "{text}");
    }

    #[test]
    fn shrinking_countable_sets_are_refused() {
        let input = "finite 0:1; 1:1\nfinite 0:1\nfinite 0:1; 1:1; 2:2\n";
        let mut out = Vec::new();
        let t = duel(
            &game(GameKind::CountableOne),
            &mut BookkeepingTwo::new(),
            10,
            0,
            vec![],
            input.as_bytes(),
            &mut out,
        )
        .unwrap();
        assert_eq!(t.innings.len(), 2);
        assert_eq!(t.header.outcome, Outcome::Truncated);
    }
}
