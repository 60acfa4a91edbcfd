use thiserror::Error;

use crate::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("element {0} is not in the group")]
    NotMember(Permutation),
    #[error("subgroup is not normal: the conjugate {0} leaves it")]
    NotNormal(Permutation),
    #[error("quotient realization needs an action on {needed} tuples, above the bound {bound}")]
    CosetBound { needed: u128, bound: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("the group is trivial")]
    Trivial,
}
