//! Basic opens, neighborhood subgroups, cosets, compact pieces, and covers.

mod cover;
mod enumerate;
mod lebesgue;
mod open;
mod piece;

pub use cover::{CoverOracle, RefinementMeet};
pub use enumerate::{height, SupportedElements};
pub use lebesgue::{lebesgue_compact, lebesgue_pgroup};
pub use open::{coset_equal, BasicOpen, NbdSubgroup};
pub use piece::{CompactPiece, DEFAULT_PIECE_CAP};
