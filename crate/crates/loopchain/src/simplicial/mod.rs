//! Finite simplicial sets, normalized chains, the Alexander–Whitney
//! coalgebra, the join on standard simplices and fixture models.

mod chains;
pub mod json;
pub mod models;
mod set;
mod standard;

pub use chains::{
    aw_cell, aw_coproduct, aw_counit, aw_iterated, boundary, boundary_of, characteristic, normalized_chains,
    SimplicialMap,
};
pub use set::{monotone_surjections, Simplicial, SimplexRef, SimplicialSet, SimplicialSetBuilder};
pub use standard::{mask_cell, vertex_cell, verts, StandardSimplex};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("missing face data: {0}")]
    MissingFace(String),
    #[error("simplicial identity violated: {0}")]
    Identity(String),
    #[error("invalid input: {0}")]
    Schema(String),
    #[error("map is not defined everywhere: {0}")]
    PartialMap(String),
    #[error("operand is not a cell of the standard {0}-simplex")]
    NotOnSimplex(usize),
}
