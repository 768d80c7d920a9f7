//! Hermitian matrices, spectral calculus, subspaces and the Loewner order.

mod hermitian;
mod order;
pub(crate) mod spectral;
mod subspace;
pub(crate) mod svd;
mod tolerances;

pub use hermitian::HermitianMatrix;
pub(crate) use order::require_psd;
pub use order::{compare, is_psd, loewner_leq, OrderRelation};
pub use spectral::{matrix_function, matrix_function_scaled, spectral, EigDecomposition, MatrixFunction};
pub use subspace::{range_nullspace, range_nullspace_scaled, subspace_intersect, subspace_sum, Subspace};
pub use tolerances::Tolerances;
