//! Strategies for both players.
//!
//! TWO's side follows the constructive proofs: the countable-1 bookkeeping,
//! the neighborhood-game strategy built on it, the two open-cover
//! strategies built on that, the counter-play that defeats any strategy of
//! ONE on a sigma-compact group, and Rothberger selectors. ONE's side is a
//! set of seeded adversaries.

pub mod adversary;
mod bookkeeping;
mod claims;
mod counter;
mod descriptor;
mod nbd;
mod open_covers;
pub mod schedule;
mod selector;

pub use bookkeeping::{Bookkeeper, BookkeepingTwo};
pub use claims::{check_claims, check_claims_all, ClaimsReport};
pub use counter::{counter_play, recentre, CounterTwo, TargetSet};
pub use descriptor::{OneSpec, TwoSpec};
pub use nbd::NbdTwo;
pub use open_covers::{PGroupTwo, SigmaTwo};
pub use selector::{first_cover, promised_inning, roth_selector};
