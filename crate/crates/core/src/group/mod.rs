//! Direct-sum groups `{f in prod G_i : support(f) finite}` over a symbolic
//! cardinal, computed inside a finite window of coordinates.

mod component;
mod element;
mod spec;
mod window;

pub use component::{ComponentGroup, TableGroup, Value};
pub use element::{Element, Index};
pub use spec::{GroupSpec, Kappa, Segment, Track};
pub use window::Window;
