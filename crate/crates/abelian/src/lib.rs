//! Finite abelian groups with operators: primary decompositions,
//! endomorphism rings, irreducible submodules, Remak decompositions, and
//! minimal normal subgroups.

use thiserror::Error;

mod endo;
mod irreducible;
mod minimal;
mod presentation;
mod remak;

pub use endo::{endomorphism_ring, endomorphism_ring_matrices, operator_matrices, operator_matrix, EndRing, Matrix};
pub use irreducible::{irreducible_submodule, irreducible_subspace, spin, Subspace};
pub use minimal::minimal_normal_subgroup;
pub use presentation::{p_basis, primary_decomposition, AbelianPresentation};
pub use remak::{remak_abelian, splitting_idempotents};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("group is not abelian")]
    NotAbelian,
    #[error("an operator does not stabilize the group")]
    NotStabilized,
    #[error("group is not a p-group")]
    NotPrimary,
    #[error("group is not elementary abelian")]
    NotElementary,
    #[error("group is trivial")]
    Trivial,
}
