//! Loop space models: necklaces and the cubical cobar construction, the
//! isomorphism φ with the cobar construction, the Kan loop group and the
//! Cartan–Serre comparison.

mod cartan;
mod kan;
mod necklace;
mod phi;
mod transfer;
mod zigzag;

pub use necklace::{
    beads, from_beads, inverse_cell, is_plain, necklace_of, p_functor, CubicalCobar, Necklace, NecklaceMorphism, NecklaceRef,
};
pub use phi::{
    certify_phi, certify_phi_localized, cubical_cobar_complex, phi, phi_element, phi_inverse, phi_inverse_element,
    phi_localized, PhiCertificate,
};
pub use transfer::{coassociativity_defect, counit_defect, phi_tensor, CobarAction};
pub use kan::{pi0_report, KanLoopGroup, KanWord, Pi0Report};
pub use cartan::{
    cartan_serre, cartan_serre_chain, cartan_serre_cube, certify_cartan_serre, collapse_vertex, msl_naturality_defect,
    CartanSerreReport,
};
pub use zigzag::{zigzag_report, ZigzagReport};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::cobar::CobarError;
use crate::cubical::CubicalError;
use crate::einfty::EInftyError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LoopError {
    #[error(transparent)]
    Cobar(#[from] CobarError),
    #[error(transparent)]
    Cubical(#[from] CubicalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    EInfty(#[from] EInftyError),
}
