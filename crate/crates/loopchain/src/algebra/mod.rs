//! Exact sparse linear algebra: free modules, graded complexes, Koszul
//! signs and Smith-normal-form homology.

mod complex;
mod fp;
mod free;
mod ring;
mod snf;

pub use complex::{
    is_chain_map, smith_homology, ChainComplex, ChainMapFailure, GradedLinearMap, Homology, Rule, Truncation,
};
pub use fp::{fp_homology_basis, kernel, rref, FpHomologyBasis};
pub use free::{
    interleave, koszul_sign, pair_to_word, permute, sign, swap, tensor, tensor_elements, tensor_words, Cell,
    FreeElement, Graded, Key,
};
pub use ring::{is_prime, Ring};
pub use snf::{invariant_factors, mod_inverse, rank_mod_p, rank_over_z, IntMatrix};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse ring '{0}', expected z, q or fp:<p>")]
    BadRing(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("insufficient truncation: H_{degree} needs degree {} but the complex stops at {max_degree}", degree + 1)]
    InsufficientTruncation { degree: i64, max_degree: i64 },
    #[error("differential leaves the listed basis: {0}")]
    LeavesBasis(String),
}
