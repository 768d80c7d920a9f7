use crate::error::{Error, Result};
use crate::linalg::spectral::{fix_phase, spectral};
use crate::linalg::svd::svd;
use crate::linalg::{HermitianMatrix, Tolerances};
use crate::scalar::{fro, CMatrix, CVector, Real};

/// Subspace of `C^n` stored as an orthonormal column basis (possibly empty).
#[derive(Clone, Debug)]
pub struct Subspace<R: Real> {
    ambient_dim: usize,
    basis: CMatrix<R>,
}

impl<R: Real> Subspace<R> {
    pub fn zero(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: CMatrix::zeros(n, 0),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: CMatrix::identity(n, n),
        }
    }

    /// Wraps columns already known to be orthonormal.
    pub(crate) fn from_orthonormal(basis: CMatrix<R>) -> Self {
        Self {
            ambient_dim: basis.nrows(),
            basis,
        }
    }

    /// Orthonormal basis of the column span of `columns`, with numerical rank
    /// decided at `rank_rel · σ_max`.
    pub fn span(columns: &CMatrix<R>, tol: &Tolerances<R>) -> Result<Self> {
        let n = columns.nrows();
        if columns.ncols() == 0 {
            return Ok(Self::zero(n));
        }
        let d = svd(columns)?;
        let mut basis = d.range_columns(tol.rank_cutoff(d.max(), R::zero()));
        for j in 0..basis.ncols() {
            fix_phase(&mut basis, j);
        }
        Ok(Self::from_orthonormal(basis))
    }

    pub fn from_vectors(n: usize, vectors: &[CVector<R>], tol: &Tolerances<R>) -> Result<Self> {
        for v in vectors {
            if v.len() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let cols = CMatrix::from_columns(vectors);
        if vectors.is_empty() {
            return Ok(Self::zero(n));
        }
        Self::span(&cols, tol)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn basis(&self) -> &CMatrix<R> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Orthogonal projector onto the subspace.
    pub fn projector(&self) -> HermitianMatrix<R> {
        HermitianMatrix::symmetrize(&self.basis * self.basis.adjoint())
    }

    /// Orthogonal complement, as the top eigenvectors of `I − P`.
    pub fn complement(&self) -> Result<Self> {
        let n = self.ambient_dim;
        let k = self.dim();
        if k == 0 {
            return Ok(Self::full(n));
        }
        if k == n {
            return Ok(Self::zero(n));
        }
        let q = &HermitianMatrix::identity(n) - &self.projector();
        let eig = spectral(&q)?;
        let cols: Vec<usize> = (k..n).collect();
        Ok(Self::from_orthonormal(eig.eigenvectors.select_columns(cols.iter())))
    }

    /// `‖v − P v‖`.
    pub fn residual(&self, v: &CVector<R>) -> R {
        let coeff = self.basis.adjoint() * v;
        (v - &self.basis * coeff).norm()
    }

    /// Whether `v` lies in the subspace up to `eq_rel · (1 + ‖v‖)`.
    pub fn contains(&self, v: &CVector<R>, tol: &Tolerances<R>) -> bool {
        self.residual(v) <= tol.eq_slack(v.norm())
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Self, tol: &Tolerances<R>) -> bool {
        other.basis.column_iter().all(|c| self.contains(&c.into_owned(), tol))
    }

    /// `‖Bᴴ B − I‖_F`.
    pub fn orthonormality_defect(&self) -> R {
        let k = self.dim();
        fro(&(self.basis.adjoint() * &self.basis - CMatrix::identity(k, k)))
    }
}

fn check_ambient<R: Real>(subspaces: &[Subspace<R>]) -> Result<usize> {
    let first = subspaces.first().ok_or(Error::EmptySet)?;
    let n = first.ambient_dim;
    for s in subspaces {
        if s.ambient_dim != n {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: s.ambient_dim,
            });
        }
    }
    Ok(n)
}

/// Span of the union of all bases.
pub fn subspace_sum<R: Real>(subspaces: &[Subspace<R>], tol: &Tolerances<R>) -> Result<Subspace<R>> {
    let n = check_ambient(subspaces)?;
    let total: usize = subspaces.iter().map(Subspace::dim).sum();
    let mut stacked = CMatrix::zeros(n, total);
    let mut at = 0;
    for s in subspaces {
        stacked.columns_mut(at, s.dim()).copy_from(&s.basis);
        at += s.dim();
    }
    Subspace::span(&stacked, tol)
}

/// Intersection via principal angles, folded left to right: directions whose
/// principal cosine is at least `1 − rank_rel` are shared.
pub fn subspace_intersect<R: Real>(subspaces: &[Subspace<R>], tol: &Tolerances<R>) -> Result<Subspace<R>> {
    check_ambient(subspaces)?;
    let mut acc = subspaces[0].clone();
    for s in &subspaces[1..] {
        acc = intersect_pair(&acc, s, tol)?;
    }
    Ok(acc)
}

fn intersect_pair<R: Real>(u: &Subspace<R>, v: &Subspace<R>, tol: &Tolerances<R>) -> Result<Subspace<R>> {
    let n = u.ambient_dim;
    if u.is_zero() || v.is_zero() {
        return Ok(Subspace::zero(n));
    }
    let cross = u.basis.adjoint() * &v.basis;
    // Left singular vectors of Uᴴ V are right singular vectors of Vᴴ U.
    let d = svd(&cross.adjoint())?;
    let threshold = R::one() - tol.rank_rel;
    let keep: Vec<usize> = (0..d.sigma.len()).filter(|&i| d.sigma[i] >= threshold).collect();
    if keep.is_empty() {
        return Ok(Subspace::zero(n));
    }
    let mut basis = &u.basis * d.v.select_columns(keep.iter());
    for j in 0..basis.ncols() {
        fix_phase(&mut basis, j);
    }
    Ok(Subspace::from_orthonormal(basis))
}

/// Range and null space of `S` from its eigendecomposition: eigenvectors with
/// `|λ| > rank_rel · max|λ|` span the range, the rest the null space.
pub fn range_nullspace<R: Real>(s: &HermitianMatrix<R>, tol: &Tolerances<R>) -> Result<(Subspace<R>, Subspace<R>)> {
    range_nullspace_scaled(s, R::zero(), tol)
}

/// [`range_nullspace`] with the cutoff taken relative to
/// `max(max|λ|, scale)`.
pub fn range_nullspace_scaled<R: Real>(
    s: &HermitianMatrix<R>,
    scale: R,
    tol: &Tolerances<R>,
) -> Result<(Subspace<R>, Subspace<R>)> {
    let eig = spectral(s)?;
    let cutoff = tol.rank_cutoff(eig.max_abs(), scale);
    let range = eig.columns_where(|x| x.abs() > cutoff);
    let null = eig.columns_where(|x| x.abs() <= cutoff);
    Ok((Subspace::from_orthonormal(range), Subspace::from_orthonormal(null)))
}
