use nalgebra::{DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix, Tolerances};
use crate::scalar::{modulus, CMatrix, CVector, Real};

const MAX_SWEEPS: usize = 100_000;

/// Spectral decomposition `S = U diag(λ) Uᴴ` with `λ` ascending.
///
/// Each eigenvector column is phase-normalized so that its entry of largest
/// modulus is real and positive (lowest row index wins ties).
#[derive(Clone, Debug)]
pub struct EigDecomposition<R: Real> {
    pub eigenvalues: DVector<R>,
    pub eigenvectors: CMatrix<R>,
}

impl<R: Real> EigDecomposition<R> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min(&self) -> R {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> R {
        self.eigenvalues[self.dim() - 1]
    }

    /// Spectral norm, `max |λ|`.
    pub fn max_abs(&self) -> R {
        self.min().abs().max(self.max().abs())
    }

    pub fn vector(&self, i: usize) -> CVector<R> {
        self.eigenvectors.column(i).into_owned()
    }

    pub fn reconstruct(&self) -> HermitianMatrix<R> {
        HermitianMatrix::from_spectrum(&self.eigenvalues, &self.eigenvectors)
    }

    /// `U diag(f(λ)) Uᴴ`.
    pub fn map(&self, f: impl Fn(R) -> R) -> HermitianMatrix<R> {
        HermitianMatrix::from_spectrum(&self.eigenvalues.map(f), &self.eigenvectors)
    }

    /// Columns of `U` selected by a predicate on the eigenvalue.
    pub fn columns_where(&self, keep: impl Fn(R) -> bool) -> CMatrix<R> {
        let idx: Vec<usize> = (0..self.dim()).filter(|&i| keep(self.eigenvalues[i])).collect();
        self.eigenvectors.select_columns(idx.iter())
    }
}

/// Hermitian eigendecomposition, eigenvalues ascending, phases fixed.
pub fn spectral<R: Real>(s: &HermitianMatrix<R>) -> Result<EigDecomposition<R>> {
    let m = s.as_matrix();
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let n = s.dim();
    if n == 1 {
        return Ok(EigDecomposition {
            eigenvalues: DVector::from_element(1, m[(0, 0)].re),
            eigenvectors: CMatrix::identity(1, 1),
        });
    }
    let eig = SymmetricEigen::try_new(m.clone(), R::default_epsilon(), MAX_SWEEPS).ok_or(Error::ConvergenceFailure)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("finite eigenvalues")
    });
    let eigenvalues = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let mut eigenvectors = eig.eigenvectors.select_columns(order.iter());
    for j in 0..n {
        fix_phase(&mut eigenvectors, j);
    }
    Ok(EigDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

pub(crate) fn fix_phase<R: Real>(u: &mut CMatrix<R>, j: usize) {
    let col = u.column(j);
    let max_mod = col.iter().fold(R::zero(), |acc, z| acc.max(modulus(z)));
    if max_mod == R::zero() {
        return;
    }
    // Near-equal moduli count as ties so that (1, -1)/sqrt(2) style vectors
    // normalize on their first entry regardless of rounding.
    let near = max_mod * (R::one() - R::lit(1e3) * R::default_epsilon());
    let pivot = col.iter().position(|z| modulus(z) >= near).unwrap_or(0);
    let z = col[pivot];
    let phase = z.conj() / modulus(&z);
    u.column_mut(j).iter_mut().for_each(|w| *w *= phase);
    u[(pivot, j)] = num_complex::Complex::new(modulus(&z), R::zero());
}

/// Eigenvalue functions available through [`matrix_function`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFunction {
    /// Positive square root of a positive semidefinite matrix.
    SqrtPsd,
    /// `|S| = (S²)^{1/2}`.
    Abs,
    /// Moore–Penrose inverse.
    Pinv,
}

/// Applies `f` through the spectral decomposition. Eigenvalues with
/// `|λ| ≤ rank_rel · max|λ|` are set to zero first.
pub fn matrix_function<R: Real>(
    s: &HermitianMatrix<R>,
    f: MatrixFunction,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    matrix_function_scaled(s, f, R::zero(), tol)
}

/// Like [`matrix_function`], but zero eigenvalues are judged relative to
/// `max(max|λ|, scale)`.
pub fn matrix_function_scaled<R: Real>(
    s: &HermitianMatrix<R>,
    f: MatrixFunction,
    scale: R,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    let eig = spectral(s)?;
    apply_function(&eig, f, scale, tol)
}

pub(crate) fn apply_function<R: Real>(
    eig: &EigDecomposition<R>,
    f: MatrixFunction,
    scale: R,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    let max_abs = eig.max_abs();
    let cutoff = tol.rank_cutoff(max_abs, scale);
    let clamp = move |x: R| if x.abs() <= cutoff { R::zero() } else { x };
    match f {
        MatrixFunction::SqrtPsd => {
            if eig.min() < -tol.psd_slack(max_abs) {
                return Err(Error::NotPositiveSemidefinite {
                    min_eigenvalue: eig.min().as_f64(),
                    index: None,
                });
            }
            Ok(eig.map(|x| clamp(x).max(R::zero()).sqrt()))
        }
        MatrixFunction::Abs => Ok(eig.map(|x| clamp(x).abs())),
        MatrixFunction::Pinv => Ok(eig.map(|x| {
            let x = clamp(x);
            if x == R::zero() {
                R::zero()
            } else {
                R::one() / x
            }
        })),
    }
}

impl<R: Real> HermitianMatrix<R> {
    pub fn spectral(&self) -> Result<EigDecomposition<R>> {
        spectral(self)
    }

    pub fn sqrt_psd(&self, tol: &Tolerances<R>) -> Result<Self> {
        matrix_function(self, MatrixFunction::SqrtPsd, tol)
    }

    pub fn abs(&self, tol: &Tolerances<R>) -> Result<Self> {
        matrix_function(self, MatrixFunction::Abs, tol)
    }

    pub fn pinv(&self, tol: &Tolerances<R>) -> Result<Self> {
        matrix_function(self, MatrixFunction::Pinv, tol)
    }
}
