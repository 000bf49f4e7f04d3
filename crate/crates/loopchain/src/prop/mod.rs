//! The prop M as graphs: composition, differential, evaluation against
//! M-bialgebras, the Hopf coproduct, M_sl generators and the lifts ψ.

mod eval;
mod graph;
mod hopf;
mod msl;
mod psi;

pub use eval::{
    basis_words, evaluate, evaluate_element, hom_boundary, order_sign, shuffle, tensor_boundary, unshuffle, CubeHooks,
    MHooks, SimplexHooks, Standard, TensorHooks,
};
pub use graph::{Gen, PropGraph, Source};
pub use hopf::{
    evaluate_pair, hopf_coproduct, hopf_coproduct_element, hopf_counit, monoidality_sides, pair_boundary,
};
pub use msl::msl_generator;
pub use psi::{
    act, contraction, iterated_coproduct, resolution_d_squared, resolution_differential, rotate, GroupRingElement,
    PsiTable,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropError {
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("grafting creates a cycle")]
    Cycle,
    #[error("graph syntax: {0}")]
    Syntax(String),
    #[error("hook undefined on {0}")]
    HookUndefined(String),
    #[error("leg assignment is not order-preserving: {0}")]
    NotMonotone(String),
}
