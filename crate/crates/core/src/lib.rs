//! Loewner-order toolkit for finite sets of Hermitian matrices: order
//! tests, Schur complements and shorted operators, parallel sums, maximal
//! lower bounds with certificates, and greatest lower bounds.
//!
//! Everything is generic over the real scalar type (`f32` or `f64`); the
//! aliases at the crate root fix it to `f64` or `f32`.

pub mod bounds;
pub mod error;
pub mod fixtures;
pub mod infimum;
pub mod linalg;
pub mod parallel;
pub mod random;
pub mod scalar;
pub mod schur;
pub mod set;

pub use bounds::{
    certify_maximal, constrained_at_vector, is_extreme_certified, is_lower_bound, maximal_in_lu, mlb_mt,
    normalize_pair, signature_matrix, stott_mx, stott_recover_x, ConstrainedBounds, MaximalityCertificate,
    PairNormalization, StottParam,
};
pub use error::{Error, Result};
pub use infimum::{
    commutant_glb, commuting_glb, distinct_maximals, extend_to_maximal, finite_infimum, maximal_lower_bound,
    positive_glb_family, positive_maximal_lb, CommutantGlbReport, CommutingGlbReport, InfimumReport, PositiveGlbReport,
};
pub use linalg::{
    compare, is_psd, loewner_leq, matrix_function, range_nullspace, spectral, subspace_intersect, subspace_sum,
    EigDecomposition, HermitianMatrix, MatrixFunction, OrderRelation, Subspace, Tolerances,
};
pub use parallel::{ando_limit, ando_onto, parallel_sum, parallel_sum_family, two_op_positive_glb, TwoOpGlbResult};
pub use scalar::{CMatrix, CVector, Real};
pub use schur::{
    albert_is_psd, partition_blocks, quotient_set, schur_complement, AlbertCondition, AlbertVerdict, BlockPartition,
    SchurComplement,
};
pub use set::MatrixSet;

pub type Hermitian64 = HermitianMatrix<f64>;
pub type Hermitian32 = HermitianMatrix<f32>;
pub type MatrixSet64 = MatrixSet<f64>;
pub type MatrixSet32 = MatrixSet<f32>;
pub type Subspace64 = Subspace<f64>;
pub type Subspace32 = Subspace<f32>;
pub type Tolerances64 = Tolerances<f64>;
pub type Tolerances32 = Tolerances<f32>;
pub type StottParam64 = StottParam<f64>;
