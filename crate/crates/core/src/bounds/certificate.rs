use crate::error::{Error, Result};
use crate::linalg::{
    loewner_leq, range_nullspace_scaled, subspace_intersect, subspace_sum, HermitianMatrix, Subspace, Tolerances,
};
use crate::scalar::Real;
use crate::set::MatrixSet;

/// `L ≤ A` for every member `A`.
pub fn is_lower_bound<R: Real>(l: &HermitianMatrix<R>, m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<bool> {
    Ok(first_violation(l, m, tol)?.is_none())
}

/// Index of the first member `A` with `L ≰ A`.
pub(crate) fn first_violation<R: Real>(
    l: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<Option<usize>> {
    m.check_dim(l)?;
    for (i, a) in m.iter().enumerate() {
        if !loewner_leq(l, a, tol)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Null-space certificate for maximality of a lower bound.
///
/// In finite dimension a lower bound `M` is maximal iff the null spaces
/// `N(A − M)` jointly span the whole space, equivalently iff the ranges
/// `R(A − M)` intersect trivially. Both are computed independently.
#[derive(Clone, Debug, PartialEq)]
pub struct MaximalityCertificate {
    pub per_member_nullspace_dims: Vec<usize>,
    /// `dim Σ N(A − M)`.
    pub span_dim: usize,
    /// `dim ∩ R(A − M)`.
    pub range_intersection_dim: usize,
    pub ambient_dim: usize,
    pub is_lower_bound: bool,
    pub is_maximal: bool,
}

impl MaximalityCertificate {
    /// Whether the span and range-intersection evaluations agree.
    pub fn criteria_agree(&self) -> bool {
        self.span_dim + self.range_intersection_dim == self.ambient_dim
    }
}

/// Null spaces of `A − M` per member, judged relative to `max(‖A‖, ‖M‖)`.
fn member_kernels<R: Real>(
    mcand: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<Vec<(Subspace<R>, Subspace<R>)>> {
    m.iter()
        .map(|a| range_nullspace_scaled(&(a - mcand), a.norm().max(mcand.norm()), tol))
        .collect()
}

pub fn certify_maximal<R: Real>(
    mcand: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<MaximalityCertificate> {
    let is_lower_bound = is_lower_bound(mcand, m, tol)?;
    let parts = member_kernels(mcand, m, tol)?;
    let (ranges, nulls): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
    let n = m.dim();
    let span_dim = subspace_sum(&nulls, tol)?.dim();
    let range_intersection_dim = subspace_intersect(&ranges, tol)?.dim();
    Ok(MaximalityCertificate {
        per_member_nullspace_dims: nulls.iter().map(Subspace::dim).collect(),
        span_dim,
        range_intersection_dim,
        ambient_dim: n,
        is_lower_bound,
        is_maximal: is_lower_bound && span_dim == n,
    })
}

/// `true` when `M` carries the spanning certificate, which is sufficient for
/// `M` to be an extreme point of the lower-bound set; `false` when `M` is not
/// a maximal lower bound. Maximal bounds without the certificate do not occur
/// in finite dimension, so no third outcome is reported.
pub fn is_extreme_certified<R: Real>(
    mcand: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<bool> {
    Ok(certify_maximal(mcand, m, tol)?.is_maximal)
}

/// Fails with the index of the first member not dominating `L`.
pub(crate) fn require_lower_bound<R: Real>(
    l: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<()> {
    match first_violation(l, m, tol)? {
        Some(index) => Err(Error::NotLowerBound { index }),
        None => Ok(()),
    }
}
