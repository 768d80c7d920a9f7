use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::spectral::spectral;
use crate::linalg::{HermitianMatrix, Tolerances};
use crate::scalar::Real;

/// Outcome of comparing `S` with `T` in the Loewner order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderRelation {
    /// `S ≤ T` and not `T ≤ S`.
    Below,
    /// `T ≤ S` and not `S ≤ T`.
    Above,
    Equal,
    Incomparable,
}

impl OrderRelation {
    pub fn is_comparable(self) -> bool {
        self != OrderRelation::Incomparable
    }

    /// `S ≤ T` holds (including equality).
    pub fn is_le(self) -> bool {
        matches!(self, OrderRelation::Below | OrderRelation::Equal)
    }

    pub fn is_ge(self) -> bool {
        matches!(self, OrderRelation::Above | OrderRelation::Equal)
    }
}

impl fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderRelation::Below => "S <= T",
            OrderRelation::Above => "T <= S",
            OrderRelation::Equal => "equal",
            OrderRelation::Incomparable => "incomparable",
        })
    }
}

fn check_dims<R: Real>(s: &HermitianMatrix<R>, t: &HermitianMatrix<R>) -> Result<()> {
    if s.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: t.dim(),
        });
    }
    Ok(())
}

/// Compares both directions with one eigendecomposition of `T − S`.
///
/// `S ≤ T` iff `λ_min(T − S) ≥ −psd_rel · (1 + ‖T − S‖₂)`.
pub fn compare<R: Real>(s: &HermitianMatrix<R>, t: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<OrderRelation> {
    check_dims(s, t)?;
    let eig = spectral(&(t - s))?;
    let slack = tol.psd_slack(eig.max_abs());
    let le = eig.min() >= -slack;
    let ge = eig.max() <= slack;
    Ok(match (le, ge) {
        (true, true) => OrderRelation::Equal,
        (true, false) => OrderRelation::Below,
        (false, true) => OrderRelation::Above,
        (false, false) => OrderRelation::Incomparable,
    })
}

/// `S ≤ T` in the Loewner order, at tolerance.
pub fn loewner_leq<R: Real>(s: &HermitianMatrix<R>, t: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<bool> {
    check_dims(s, t)?;
    let eig = spectral(&(t - s))?;
    Ok(eig.min() >= -tol.psd_slack(eig.max_abs()))
}

/// `0 ≤ S`.
pub fn is_psd<R: Real>(s: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<bool> {
    let eig = spectral(s)?;
    Ok(eig.min() >= -tol.psd_slack(eig.max_abs()))
}

/// Errors with the smallest eigenvalue when `S` is not PSD.
pub(crate) fn require_psd<R: Real>(s: &HermitianMatrix<R>, index: Option<usize>, tol: &Tolerances<R>) -> Result<()> {
    let eig = spectral(s)?;
    if eig.min() >= -tol.psd_slack(eig.max_abs()) {
        Ok(())
    } else {
        Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: eig.min().as_f64(),
            index,
        })
    }
}
