//! Biadditive maps `V × V → W` of finite abelian `p`-groups: the commutator
//! map of a class-2 group, radicals, centroids, their frames, and the group
//! `V × W` built from a bilinear map.

use thiserror::Error;

mod centroid;
mod map;

pub use centroid::{centroid, centroid_with, frame_decomposition, frame_decomposition_with, Block, Centroid, CentroidElement};
pub use map::{bi_of_group, grp_of_bilinear, BilinearMap, Module};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BilinearError {
    #[error("group is not a p-group")]
    NotPGroup,
    #[error("group has nilpotency class greater than 2")]
    ClassTooLarge,
    #[error("bilinear map is degenerate")]
    Degenerate,
    #[error("W is not spanned by the values of the map")]
    NotSurjective,
    #[error("structure constants are not well defined")]
    NotWellDefined,
    #[error("{0}")]
    Group(String),
}
