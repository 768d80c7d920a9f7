//! Scalar abstraction: every routine is generic over the real field `R`
//! (`f32` or `f64`), with matrix entries in `Complex<R>`.

use std::fmt::{Debug, Display};

use nalgebra::{DMatrix, DVector, RealField};
use num_complex::Complex;
use num_traits::ToPrimitive;

/// Real scalar type backing a computation.
pub trait Real: RealField + Copy + ToPrimitive + Display + Debug {
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    #[inline]
    fn infinity() -> Self {
        Self::lit(f64::INFINITY)
    }

    /// Lossy conversion used for error payloads and reports.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type CMatrix<R> = DMatrix<Complex<R>>;
pub type CVector<R> = DVector<Complex<R>>;

#[inline]
pub(crate) fn re<R: Real>(x: R) -> Complex<R> {
    Complex::new(x, R::zero())
}

/// Frobenius norm of a complex matrix.
pub(crate) fn fro<R: Real>(m: &CMatrix<R>) -> R {
    m.iter().fold(R::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

/// Modulus of a complex number.
#[inline]
pub(crate) fn modulus<R: Real>(z: &num_complex::Complex<R>) -> R {
    z.norm_sqr().sqrt()
}
