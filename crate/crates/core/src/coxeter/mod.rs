//! Coxeter systems, their elements, and finite Coxeter groups.

mod element;
mod finite;
mod subset;
mod system;

pub use element::GroupElement;
pub use finite::FiniteCoxeterGroup;
pub use subset::{Subset, MAX_RANK};
pub use system::{CoxeterJson, CoxeterSystem, INFINITY};
