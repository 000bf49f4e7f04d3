//! E∞-structures on chains of simplicial and cubical sets: graph actions
//! pushed forward along characteristic maps, cup-i coproducts and
//! Steenrod operations.

mod action;
mod steenrod;

pub use action::{chains, push_word, tensor_boundary_with, um_action, Cellular, Cub, Psi, Simp};
pub use steenrod::{
    cup_i, cup_i_defect, nu, steenrod_odd, steenrod_odd_with, steenrod_sq, steenrod_sq_with, OperationResult, PsiFn,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::prop::PropError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EInftyError {
    #[error("operation needs coefficients in F_{expected}, the table was built for p = {got}")]
    WrongRing { expected: u64, got: u64 },
    #[error("representative is not a cycle")]
    NotACycle,
    #[error("lift e_{0} is beyond the tabulated range")]
    TableTooSmall(usize),
    #[error("cell of dimension {0} is beyond the tabulated range")]
    DimensionTooLarge(usize),
    #[error("operation takes one input, graph has {0}")]
    Arity(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Prop(#[from] PropError),
}
