use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures reported by the toolkit. Numeric payloads are widened to `f64`
/// regardless of the working precision.
#[derive(Debug, Clone, PartialEq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("matrix of shape ({rows}, {cols}) is not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix deviates from Hermitian symmetry by {deviation:e} (allowed {allowed:e})")]
    NotHermitianWithinTolerance { deviation: f64, allowed: f64 },
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("eigen or singular value iteration did not converge")]
    ConvergenceFailure,
    #[error("matrix{} is not positive semidefinite (smallest eigenvalue {min_eigenvalue:e})", member_suffix(*index))]
    NotPositiveSemidefinite { min_eigenvalue: f64, index: Option<usize> },
    #[error("subspaces live in different ambient spaces ({expected} vs {found})")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace of dimension {dim} is not a proper nontrivial subspace of C^{ambient}")]
    TrivialSubspace { dim: usize, ambient: usize },
    #[error("range condition of the Schur complement violated{}: residual {residual:e} exceeds {allowed:e}", member_suffix(*index))]
    RangeConditionViolated {
        index: Option<usize>,
        residual: f64,
        allowed: f64,
    },
    #[error("transform is numerically singular (singular values {min_singular:e} / {max_singular:e})")]
    SingularTransform { min_singular: f64, max_singular: f64 },
    #[error("matrix is not a certified maximal lower bound of {{J, 0}}")]
    NotMaximalForJZero,
    #[error("angular operator extraction failed: {0}")]
    AngularExtractionFailed(&'static str),
    #[error("vector norm {norm} differs from 1")]
    NotUnitVector { norm: f64 },
    #[error("members {i} and {j} do not commute (commutator norm {commutator:e})")]
    NotCommutingFamily { i: usize, j: usize, commutator: f64 },
    #[error("candidate is not a lower bound (fails against member {index})")]
    NotLowerBound { index: usize },
    #[error("the set has an infimum (member {index}); its maximal lower bound is unique")]
    InfimumExists { index: usize },
    #[error("could not separate two maximal lower bounds after {attempts} attempts")]
    DistinctnessFailure { attempts: usize },
    #[error("matrix set is empty")]
    EmptySet,
    #[error("tolerances must be finite and nonnegative")]
    InvalidTolerance,
    #[error("parameter shape invalid: {0}")]
    InvalidShape(&'static str),
}

fn member_suffix(index: Option<usize>) -> String {
    match index {
        Some(i) => format!(" (member {i})"),
        None => String::new(),
    }
}
