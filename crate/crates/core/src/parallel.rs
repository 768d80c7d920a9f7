//! Parallel sums and Ando's limit `[A]B = lim (mA):B`.

use crate::error::{Error, Result};
use crate::linalg::spectral::{apply_function, MatrixFunction};
use crate::linalg::svd::svd;
use crate::linalg::{
    compare, range_nullspace_scaled, require_psd, spectral, HermitianMatrix, OrderRelation, Subspace, Tolerances,
};
use crate::scalar::{CMatrix, Real};
use crate::set::MatrixSet;

fn check_dims<R: Real>(a: &HermitianMatrix<R>, b: &HermitianMatrix<R>) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

fn require_pair<R: Real>(a: &HermitianMatrix<R>, b: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<()> {
    check_dims(a, b)?;
    require_psd(a, Some(0), tol)?;
    require_psd(b, Some(1), tol)
}

/// `A : B = A (A + B)^# B`, symmetrized, with eigenvalues below the rank
/// cutoff of the inputs' scale set to zero so that the range is exactly
/// `R(A) ∩ R(B)` at tolerance.
pub fn parallel_sum<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    require_pair(a, b, tol)?;
    parallel_sum_unchecked(a, b, tol)
}

fn parallel_sum_unchecked<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    let scale = a.norm().max(b.norm());
    let sum_pinv = apply_function(&spectral(&(a + b))?, MatrixFunction::Pinv, scale, tol)?;
    let raw = a.as_matrix() * sum_pinv.as_matrix() * b.as_matrix();
    let eig = spectral(&HermitianMatrix::symmetrize(raw))?;
    let cutoff = tol.rank_cutoff(eig.max_abs(), scale);
    Ok(eig.map(|x| if x <= cutoff { R::zero() } else { x }))
}

/// Left fold `((A₁ : A₂) : A₃) : …` over the set.
pub fn parallel_sum_family<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    m.require_psd(tol)?;
    let mut acc = m.members()[0].clone();
    for a in &m.members()[1..] {
        acc = parallel_sum_unchecked(&acc, a, tol)?;
    }
    Ok(acc)
}

/// `[A]B = B^{1/2} P_V B^{1/2}` with `V = N((I − P_{R(A)}) B^{1/2})`.
pub fn ando_limit<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    require_pair(a, b, tol)?;
    let (range, _) = range_nullspace_scaled(a, R::zero(), tol)?;
    ando_onto_unchecked(&range, b, tol)
}

/// Ando's limit with `R(A)` given directly as a subspace `K`:
/// `B^{1/2} P_V B^{1/2}`, `V = N((I − P_K) B^{1/2})`.
pub fn ando_onto<R: Real>(k: &Subspace<R>, b: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    if k.ambient_dim() != b.dim() {
        return Err(Error::AmbientMismatch {
            expected: b.dim(),
            found: k.ambient_dim(),
        });
    }
    require_psd(b, None, tol)?;
    ando_onto_unchecked(k, b, tol)
}

fn ando_onto_unchecked<R: Real>(
    k: &Subspace<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    let n = b.dim();
    let root = b.sqrt_psd(tol)?;
    let off_k = HermitianMatrix::identity(n) - k.projector();
    let x: CMatrix<R> = off_k.as_matrix() * root.as_matrix();
    let d = svd(&x)?;
    let v = d.null_columns(tol.rank_cutoff(d.max(), root.norm()));
    if v.ncols() == 0 {
        return Ok(HermitianMatrix::zeros(n));
    }
    let p_v = HermitianMatrix::symmetrize(&v * v.adjoint());
    Ok(HermitianMatrix::symmetrize(
        root.as_matrix() * p_v.as_matrix() * root.as_matrix(),
    ))
}

/// Both Ando limits of a PSD pair and the resulting greatest positive
/// lower bound, which exists iff `[A]B` and `[B]A` are comparable.
#[derive(Clone, Debug)]
pub struct TwoOpGlbResult<R: Real> {
    pub exists: bool,
    pub glb: Option<HermitianMatrix<R>>,
    /// `[A]B`.
    pub ando_ab: HermitianMatrix<R>,
    /// `[B]A`.
    pub ando_ba: HermitianMatrix<R>,
    /// Relation of `[A]B` to `[B]A`.
    pub comparability: OrderRelation,
}

pub fn two_op_positive_glb<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<TwoOpGlbResult<R>> {
    require_pair(a, b, tol)?;
    let (range_a, _) = range_nullspace_scaled(a, R::zero(), tol)?;
    let (range_b, _) = range_nullspace_scaled(b, R::zero(), tol)?;
    let ando_ab = ando_onto_unchecked(&range_a, b, tol)?;
    let ando_ba = ando_onto_unchecked(&range_b, a, tol)?;
    let comparability = compare(&ando_ab, &ando_ba, tol)?;
    let glb = match comparability {
        OrderRelation::Below | OrderRelation::Equal => Some(ando_ab.clone()),
        OrderRelation::Above => Some(ando_ba.clone()),
        OrderRelation::Incomparable => None,
    };
    Ok(TwoOpGlbResult {
        exists: glb.is_some(),
        glb,
        ando_ab,
        ando_ba,
        comparability,
    })
}
