//! Brute-force answers for small groups, computed from full element
//! tables: normal subgroups, direct decomposition checks, Remak
//! decompositions and isomorphism tests.
//!
//! Nothing here calls the decomposition pipeline. The only shared type is
//! [`perm_core::Permutation`].

mod direct;
mod iso;
mod normal;
mod small;

pub use direct::{brute_remak, is_direct_decomposition, DirectVerdict};
pub use iso::isomorphic_small;
pub use normal::{all_normal_subgroups, conjugacy_classes};
pub use small::{SmallGroup, Subgroup};

/// Default cap on the number of elements enumerated.
pub const DEFAULT_ORDER_BOUND: usize = 5000;
/// Default cap on the order of groups passed to [`isomorphic_small`].
pub const DEFAULT_ISO_BOUND: usize = 512;
/// Default cap on the size of the normal subgroup lattice.
pub const DEFAULT_LATTICE_BOUND: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("group has more than {bound} elements")]
    TooLarge { bound: usize },
    #[error("more than {bound} normal subgroups")]
    LatticeTooLarge { bound: usize },
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("permutations of different degrees")]
    DegreeMismatch,
}

/// Bounds for the brute-force searches.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub order: usize,
    pub iso: usize,
    pub lattice: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { order: DEFAULT_ORDER_BOUND, iso: DEFAULT_ISO_BOUND, lattice: DEFAULT_LATTICE_BOUND }
    }
}
