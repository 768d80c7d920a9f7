use std::ops::{Add, Neg, Sub};

use nalgebra::DVector;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::Tolerances;
use crate::scalar::{fro, re, CMatrix, CVector, Real};

/// Dense complex Hermitian matrix.
///
/// Symmetry is exact: every constructor routes through symmetrization, so
/// `m[(i, j)] == conj(m[(j, i)])` bit for bit and the diagonal is real.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<R: Real> {
    m: CMatrix<R>,
}

impl<R: Real> HermitianMatrix<R> {
    /// Validates `raw` against its adjoint and returns `(raw + rawᴴ) / 2`.
    pub fn hermitize(raw: CMatrix<R>, tol: &Tolerances<R>) -> Result<Self> {
        let (rows, cols) = raw.shape();
        if rows != cols || rows == 0 {
            return Err(Error::NonSquare { rows, cols });
        }
        if raw.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let deviation = fro(&(&raw - raw.adjoint()));
        let allowed = tol.eq_slack(fro(&raw));
        if deviation > allowed {
            return Err(Error::NotHermitianWithinTolerance {
                deviation: deviation.as_f64(),
                allowed: allowed.as_f64(),
            });
        }
        Ok(Self::symmetrize(raw))
    }

    /// Symmetrizes without validation; for matrices that are Hermitian up to
    /// rounding by construction.
    pub(crate) fn symmetrize(raw: CMatrix<R>) -> Self {
        let n = raw.nrows();
        let half = R::lit(0.5);
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(raw[(i, i)].re);
            for j in (i + 1)..n {
                let z = (raw[(i, j)] + raw[(j, i)].conj()) * half;
                m[(i, j)] = z;
                m[(j, i)] = z.conj();
            }
        }
        Self { m }
    }

    /// Builds from a row-major slice of real entries, checking symmetry with
    /// default tolerances.
    pub fn from_real(n: usize, row_major: &[R]) -> Result<Self> {
        if row_major.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: row_major.len(),
            });
        }
        let raw = CMatrix::from_row_iterator(n, n, row_major.iter().map(|&x| re(x)));
        Self::hermitize(raw, &Tolerances::default())
    }

    /// Builds from a row-major slice of complex entries.
    pub fn from_complex(n: usize, row_major: &[Complex<R>]) -> Result<Self> {
        if row_major.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: row_major.len(),
            });
        }
        let raw = CMatrix::from_row_slice(n, n, row_major);
        Self::hermitize(raw, &Tolerances::default())
    }

    pub fn diag(values: &[R]) -> Self {
        let v = DVector::from_iterator(values.len(), values.iter().map(|&x| re(x)));
        Self {
            m: CMatrix::from_diagonal(&v),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            m: CMatrix::identity(n, n),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            m: CMatrix::zeros(n, n),
        }
    }

    pub fn scalar(n: usize, c: R) -> Self {
        Self::identity(n).scale(c)
    }

    /// `v vᴴ`.
    pub fn rank_one(v: &CVector<R>) -> Self {
        Self::symmetrize(v * v.adjoint())
    }

    /// `U diag(values) Uᴴ`.
    pub fn from_spectrum(values: &DVector<R>, vectors: &CMatrix<R>) -> Self {
        let mut scaled = vectors.clone();
        for (j, &lam) in values.iter().enumerate() {
            scaled.column_mut(j).scale_mut(lam);
        }
        Self::symmetrize(scaled * vectors.adjoint())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    #[inline]
    pub fn as_matrix(&self) -> &CMatrix<R> {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix<R> {
        self.m
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex<R> {
        self.m[(i, j)]
    }

    /// Frobenius norm. All scale factors in the crate use this norm.
    pub fn norm(&self) -> R {
        fro(&self.m)
    }

    pub fn trace(&self) -> R {
        (0..self.dim()).fold(R::zero(), |acc, i| acc + self.m[(i, i)].re)
    }

    pub fn scale(&self, c: R) -> Self {
        Self {
            m: self.m.map(|z| z * c),
        }
    }

    /// `Tᴴ S T`; `t` may be rectangular (compression onto its column span).
    pub fn congruence(&self, t: &CMatrix<R>) -> Self {
        Self::symmetrize(t.adjoint() * &self.m * t)
    }

    /// `U S Uᴴ`; the inverse direction of [`congruence`](Self::congruence).
    pub fn conjugate(&self, u: &CMatrix<R>) -> Self {
        Self::symmetrize(u * &self.m * u.adjoint())
    }

    /// Frobenius norm of `S T − T S`.
    pub fn commutator_norm(&self, other: &Self) -> R {
        let st = &self.m * &other.m;
        let ts = &other.m * &self.m;
        fro(&(st - ts))
    }

    pub fn distance(&self, other: &Self) -> R {
        fro(&(&self.m - &other.m))
    }

    /// `Re (S u, u)`.
    pub fn quadratic_form(&self, u: &CVector<R>) -> R {
        u.dotc(&(&self.m * u)).re
    }

    pub fn apply(&self, v: &CVector<R>) -> CVector<R> {
        &self.m * v
    }

    /// Matrix product `S T` (not Hermitian in general).
    pub fn mul(&self, other: &Self) -> CMatrix<R> {
        &self.m * &other.m
    }

    /// True when no entry has a nonzero imaginary part.
    pub fn is_real(&self) -> bool {
        self.m.iter().all(|z| z.im == R::zero())
    }
}

impl<'a, R: Real> Add<&'a HermitianMatrix<R>> for &'a HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn add(self, rhs: &'a HermitianMatrix<R>) -> HermitianMatrix<R> {
        HermitianMatrix { m: &self.m + &rhs.m }
    }
}

impl<'a, R: Real> Sub<&'a HermitianMatrix<R>> for &'a HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn sub(self, rhs: &'a HermitianMatrix<R>) -> HermitianMatrix<R> {
        HermitianMatrix { m: &self.m - &rhs.m }
    }
}

impl<R: Real> Add for HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Real> Sub for HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Real> Neg for &HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn neg(self) -> HermitianMatrix<R> {
        HermitianMatrix { m: -&self.m }
    }
}

impl<R: Real> Neg for HermitianMatrix<R> {
    type Output = HermitianMatrix<R>;
    fn neg(self) -> Self {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn hermitize_keeps_hermitian_inputs() {
        let s = HermitianMatrix::from_real(2, &[1.0, 2.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.entry(0, 1), c(2.0, 0.0));
        let raw = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., 1.), c(0., -1.), c(0., 0.)]);
        let h = HermitianMatrix::hermitize(raw.clone(), &Tolerances::default()).unwrap();
        assert_eq!(h.as_matrix(), &raw);
    }

    #[test]
    fn hermitize_averages_tiny_asymmetry() {
        let raw = CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(1e-14, 0.), c(0., 0.), c(1., 0.)]);
        let h = HermitianMatrix::hermitize(raw, &Tolerances::default()).unwrap();
        assert_eq!(h.entry(0, 1), c(5e-15, 0.0));
        assert_eq!(h.entry(1, 0), c(5e-15, 0.0));
        assert_eq!(h.entry(0, 0), c(1.0, 0.0));
    }

    #[test]
    fn hermitize_rejects_bad_inputs() {
        let raw = CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(1., 0.), c(0., 0.), c(1., 0.)]);
        assert!(matches!(
            HermitianMatrix::hermitize(raw, &Tolerances::default()),
            Err(Error::NotHermitianWithinTolerance { .. })
        ));
        let raw = CMatrix::<f64>::zeros(2, 3);
        assert!(matches!(
            HermitianMatrix::hermitize(raw, &Tolerances::default()),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
        let raw = CMatrix::from_row_slice(1, 1, &[c(f64::NAN, 0.)]);
        assert_eq!(
            HermitianMatrix::hermitize(raw, &Tolerances::default()),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn diagonal_imaginary_parts_are_dropped() {
        let raw = CMatrix::from_row_slice(1, 1, &[c(2.0, 1e-12)]);
        let h = HermitianMatrix::hermitize(raw, &Tolerances::default()).unwrap();
        assert_eq!(h.entry(0, 0), c(2.0, 0.0));
    }

    #[test]
    fn congruence_and_commutator() {
        let a = HermitianMatrix::diag(&[1.0, 2.0]);
        let b = HermitianMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!(a.commutator_norm(&a.scale(3.0)) == 0.0);
        assert!(a.commutator_norm(&b) > 1.0);
        let t = CMatrix::from_row_slice(2, 2, &[c(2., 0.), c(0., 0.), c(0., 0.), c(1., 0.)]);
        assert_eq!(a.congruence(&t), HermitianMatrix::diag(&[4.0, 2.0]));
    }
}
