//! Cubical sets with connections, normalized cubical chains, the Serre
//! diagonal, the join on standard cubes, and triangulation.

mod chains;
pub mod json;
mod map;
mod set;
mod standard;
pub mod triangulate;

pub use chains::{
    boundary, boundary_of, characteristic, cubical_chains, serre_cell, serre_coproduct, serre_counit,
    serre_iterated,
};
pub use map::{constant, join_all, vertices, Coord, CubeMap};
pub use set::{check_identities, restrict_with, CubeRef, Cubical, CubicalSet, CubicalSetBuilder};
pub use standard::{cell_word, concat, format_word, parse_word, split, word_cell, StandardCube, I};
pub use triangulate::{triangulate, unit_cube, Triangulation, UAdjoint, UCube};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CubicalError {
    #[error("missing face data: {0}")]
    MissingFace(String),
    #[error("cubical identity violated: {0}")]
    Identity(String),
    #[error("invalid input: {0}")]
    Schema(String),
    #[error("operand is not a cell of the standard {0}-cube")]
    DimensionMismatch(usize),
    #[error("enumeration of {dim}-cubes exceeded the search budget (about {estimate:.3e} candidates)")]
    ResourceLimit { dim: usize, estimate: f64 },
}
