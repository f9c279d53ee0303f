//! Exact integer linear algebra and 2-local finitely generated abelian groups.

mod extension;
mod group;
mod matrix;

pub use extension::{extension_candidates, extension_middle_group};
pub use group::{cokernel, kernel, subtract_summand, CanonicalGroup, GroupHom, PresentedGroup};
pub use matrix::{integer_kernel, snf, IntMatrix, Snf};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("homomorphism is not well defined: {0}")]
    IllDefined(String),
    #[error("{0} is not a direct summand of {1}")]
    NotASummand(String, String),
    #[error("extension kernel {0} is not cyclic")]
    NonCyclicKernel(String),
}
