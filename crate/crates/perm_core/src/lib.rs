//! Permutation groups: Schreier–Sims stabilizer chains, straight-line
//! programs, homomorphisms, operator sets and the usual subgroup
//! constructions.
//!
//! Points are 0-indexed. Products act left to right: `a.mul(b)` applies
//! `a` first.

mod chain;
mod error;
mod group;
mod hom;
mod ops;
mod perm;
mod slp;

pub mod algo;
pub mod catalog;
pub mod quotient;

pub use chain::{SlpBuilder, Word};
pub use error::PermError;
pub use group::{GroupBuilder, PermGroup};
pub use hom::Hom;
pub use ops::{Operator, OperatorSet};
pub use perm::Permutation;
pub use slp::{Line, Slp};
