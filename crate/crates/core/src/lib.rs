//! Selection games on direct-sum topological groups.
//!
//! The groups are `{f in prod G_i : support(f) finite}` over a symbolic index
//! set, with integer, cyclic, or table components, carrying either the
//! product topology (sigma-compact) or the countable box topology (a
//! Lindelöf P-group). Every computation runs inside a finite window of
//! coordinates.
//!
//! On top of that the crate provides:
//!
//! - [`topology`]: basic opens, the neighborhood subgroups `U_B`, cosets,
//!   compact pieces, covers given by choice functions, and the two Lebesgue
//!   covering lemmas.
//! - [`game`]: a referee for `G1(O_nbd, O)`, `G1(O, O)`, and the countable-1
//!   game, with transcripts, offline validation, and probe coverage.
//! - [`strategy`]: TWO's winning strategies, the counter-play constructor
//!   that defeats any strategy of ONE, Rothberger selectors, and adversaries.
//! - [`sim`]: run configuration, verification suites, and the interactive
//!   duel behind the `simctl` binary.

pub mod error;
pub mod game;
pub mod group;
pub mod sim;
pub mod strategy;
pub mod topology;

pub use error::{Error, Player, Result};
pub use group::{ComponentGroup, Element, GroupSpec, Index, Kappa, Track, Value, Window};
pub use topology::{BasicOpen, CompactPiece, CoverOracle, NbdSubgroup};
