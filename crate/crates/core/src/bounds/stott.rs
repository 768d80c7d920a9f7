//! Bijective parametrization `X ↦ M(X)` of the maximal lower bounds of
//! `{J, 0}`, `J = diag(I_p, −I_q)`.

use crate::error::{Error, Result};
use crate::linalg::{range_nullspace_scaled, spectral, HermitianMatrix, Tolerances};
use crate::scalar::{CMatrix, Real};
use crate::set::MatrixSet;

use super::certificate::certify_maximal;
use super::pair::signature_matrix;

/// A `p × q` complex matrix `X` labelling one maximal lower bound of `{J, 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct StottParam<R: Real> {
    pub p: usize,
    pub q: usize,
    pub x: CMatrix<R>,
}

impl<R: Real> StottParam<R> {
    pub fn new(x: CMatrix<R>) -> Result<Self> {
        let (p, q) = x.shape();
        if p == 0 || q == 0 {
            return Err(Error::InvalidShape("X must have at least one row and one column"));
        }
        Ok(Self { p, q, x })
    }

    pub fn zero(p: usize, q: usize) -> Result<Self> {
        Self::new(CMatrix::zeros(p, q))
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }
}

/// `S(X) = [[I + XXᴴ, (I + XXᴴ)^{1/2} X], [Xᴴ (I + XXᴴ)^{1/2}, XᴴX]]` and
/// `M(X) = J − S(X)`.
pub fn stott_mx<R: Real>(
    param: &StottParam<R>,
    tol: &Tolerances<R>,
) -> Result<(HermitianMatrix<R>, HermitianMatrix<R>)> {
    let (p, q) = (param.p, param.q);
    let x = &param.x;
    let gram = HermitianMatrix::symmetrize(CMatrix::identity(p, p) + x * x.adjoint());
    let root = gram.sqrt_psd(tol)?;
    let corner = root.as_matrix() * x;
    let mut s = CMatrix::zeros(p + q, p + q);
    s.view_mut((0, 0), (p, p)).copy_from(gram.as_matrix());
    s.view_mut((0, p), (p, q)).copy_from(&corner);
    s.view_mut((p, 0), (q, p)).copy_from(&corner.adjoint());
    s.view_mut((p, p), (q, q)).copy_from(&(x.adjoint() * x));
    let sx = HermitianMatrix::symmetrize(s);
    let mx = &signature_matrix(p, q) - &sx;
    Ok((sx, mx))
}

/// Inverse of [`stott_mx`]: from a certified maximal lower bound `M` of
/// `{J, 0}` reads off the angular operator `K` of `N(M) = {(x₁, K x₁)}` and
/// returns `X = −(I − KᴴK)^{−1/2} Kᴴ`.
pub fn stott_recover_x<R: Real>(
    m: &HermitianMatrix<R>,
    p: usize,
    q: usize,
    tol: &Tolerances<R>,
) -> Result<StottParam<R>> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidShape("p and q must be positive"));
    }
    if m.dim() != p + q {
        return Err(Error::DimensionMismatch {
            expected: p + q,
            found: m.dim(),
        });
    }
    let j = signature_matrix(p, q);
    let pair = MatrixSet::new(vec![j, HermitianMatrix::zeros(p + q)])?;
    if !certify_maximal(m, &pair, tol)?.is_maximal {
        return Err(Error::NotMaximalForJZero);
    }
    let (_, null) = range_nullspace_scaled(m, R::one(), tol)?;
    if null.dim() != p {
        return Err(Error::AngularExtractionFailed(
            "null space of M does not have dimension p",
        ));
    }
    let basis = null.basis();
    let top = basis.rows(0, p).into_owned();
    let bottom = basis.rows(p, q).into_owned();
    let top_inv = top.try_inverse().ok_or(Error::AngularExtractionFailed(
        "null space of M is not a graph over the first block",
    ))?;
    let k = bottom * top_inv;
    let defect = HermitianMatrix::symmetrize(CMatrix::identity(p, p) - k.adjoint() * &k);
    let eig = spectral(&defect)?;
    if eig.min() <= R::zero() {
        return Err(Error::AngularExtractionFailed(
            "angular operator is not a strict contraction",
        ));
    }
    let inv_root = eig.map(|x| R::one() / x.sqrt());
    let x = -(inv_root.as_matrix() * k.adjoint());
    StottParam::new(x)
}
