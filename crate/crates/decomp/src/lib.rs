//! Direct decompositions of permutation groups with operators: linear
//! equations in abelian normal subgroups, constructive presentations,
//! direct complements, Extend and Merge, and the Remak decomposition
//! algorithm with its class-2 and centerless base cases.

use thiserror::Error;

mod complement;
mod decomposition;
mod merge;
mod module;
mod operators;
mod presentation;
mod remak;

pub use complement::{complement_abelian, direct_complement, Complement, Refusal};
pub use decomposition::{Certificate, Decomposition};
pub use merge::{centralize_refine, extend, merge, Extension};
pub use module::{solve_module_equations, ModuleSolution};
pub use operators::{quotient_operators, restrict_operators};
pub use presentation::{constructive_presentation, enumerate_cosets, Presentation};
pub use remak::{find_remak, reduce_general_operators, remak_class2};

use perm_core::quotient::DEFAULT_COSET_BOUND;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Perm(#[from] perm_core::PermError),
    #[error(transparent)]
    Abelian(#[from] abelian::AbelianError),
    #[error(transparent)]
    Bilinear(#[from] bilinear::BilinearError),
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("subgroup is not invariant: {0}")]
    NotInvariant(perm_core::Permutation),
    #[error("group has nilpotency class greater than 2")]
    ClassTooLarge,
    #[error("operator is not a homomorphism on the quotient")]
    OperatorNotHomomorphism,
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl DecompError {
    /// Whether the failure is a resource limit rather than bad input.
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, DecompError::Perm(perm_core::PermError::CosetBound { .. }))
    }
}

/// Tunable limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Largest permutation degree allowed when realizing a quotient.
    pub coset_bound: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { coset_bound: DEFAULT_COSET_BOUND }
    }
}
