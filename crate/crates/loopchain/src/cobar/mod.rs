//! Adams' cobar construction, group words, and the localized cobar
//! construction whose H₀ is the group ring of π₁.

mod extended;
mod group;
mod plain;

pub use extended::{fundamental_presentation, h0_group_ring, mul_elements, ExtendedCobar, H0Certificate, LocalizedWord};
pub use group::{free_ball_size, reduced_words, GroupType, GroupWord, Letter, Presentation};
pub use plain::{product, Cobar, CobarWord};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CobarError {
    #[error("the cobar construction needs a reduced simplicial set, this one has {0} vertices")]
    NotReduced(usize),
    #[error("degree-0 letters make the complex infinite; a word cutoff is required")]
    CutoffRequired,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
