//! Exact chain-level algebraic topology.
//!
//! Simplicial and cubical chains with their coalgebra and E∞ structures,
//! the cobar and cubical cobar constructions, the extended cobar
//! construction, the Kan loop group and the Cartan–Serre comparison.

pub mod algebra;
pub mod cobar;
pub mod cubical;
pub mod einfty;
pub mod loopspace;
pub mod prop;
pub mod simplicial;
pub mod verify;
