//! One-sided (Hestenes) Jacobi SVD for complex matrices.
//!
//! nalgebra's bidiagonal SVD returns inconsistent factors for some
//! rank-deficient complex inputs, so rank and null-space decisions go
//! through this routine instead.

use nalgebra::DVector;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{modulus, CMatrix, Real};

const MAX_SWEEPS: usize = 200;

/// `A V = U Σ` with `V` square unitary (`cols × cols`) and `σ` descending.
/// Columns of `U` belonging to zero singular values are zero.
#[derive(Clone, Debug)]
pub(crate) struct Svd<R: Real> {
    pub u: CMatrix<R>,
    pub sigma: DVector<R>,
    pub v: CMatrix<R>,
}

impl<R: Real> Svd<R> {
    pub fn max(&self) -> R {
        if self.sigma.is_empty() {
            R::zero()
        } else {
            self.sigma[0]
        }
    }

    /// Columns of `V` whose singular value is at most `cutoff`. Spans the
    /// numerical null space of `A`.
    pub fn null_columns(&self, cutoff: R) -> CMatrix<R> {
        let keep: Vec<usize> = (0..self.sigma.len()).filter(|&i| self.sigma[i] <= cutoff).collect();
        self.v.select_columns(keep.iter())
    }

    /// Orthonormal columns of `U` whose singular value exceeds `cutoff`.
    pub fn range_columns(&self, cutoff: R) -> CMatrix<R> {
        let keep: Vec<usize> = (0..self.sigma.len()).filter(|&i| self.sigma[i] > cutoff).collect();
        let mut u = self.u.select_columns(keep.iter());
        reorthonormalize(&mut u);
        u
    }
}

pub(crate) fn svd<R: Real>(a: &CMatrix<R>) -> Result<Svd<R>> {
    if a.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let (m, n) = a.shape();
    let mut w = a.clone();
    let mut v = CMatrix::<R>::identity(n, n);
    let eps = R::default_epsilon();
    // Columns already at rounding level carry no information and may never
    // pass the relative orthogonality test.
    let floor = {
        let f = eps * a.norm();
        f * f
    };
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        converged = true;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                if alpha <= floor || beta <= floor {
                    continue;
                }
                let gamma = w.column(p).dotc(&w.column(q));
                let g = modulus(&gamma);
                if g == R::zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                converged = false;
                let phase = gamma.conj() / g;
                let zeta = (beta - alpha) / (R::lit(2.0) * g);
                let t = zeta.signum() / (zeta.abs() + (R::one() + zeta * zeta).sqrt());
                let c = R::one() / (R::one() + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure);
    }

    let norms: Vec<R> = (0..n).map(|j| w.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).expect("finite norms"));
    let sigma = DVector::from_iterator(n, order.iter().map(|&j| norms[j]));
    let v = v.select_columns(order.iter());
    let mut u = CMatrix::zeros(m, n);
    for (k, &j) in order.iter().enumerate() {
        if norms[j] > R::zero() {
            u.set_column(k, &(w.column(j) / Complex::new(norms[j], R::zero())));
        }
    }
    Ok(Svd { u, sigma, v })
}

// Columns (x, y) -> (c x − s e y, s x + c e y) with e = conj(phase of xᴴy),
// which zeroes the inner product of the two columns.
fn rotate<R: Real>(a: &mut CMatrix<R>, p: usize, q: usize, c: R, s: R, e: Complex<R>) {
    let c = Complex::new(c, R::zero());
    let s = Complex::new(s, R::zero());
    for i in 0..a.nrows() {
        let x = a[(i, p)];
        let y = a[(i, q)] * e;
        a[(i, p)] = c * x - s * y;
        a[(i, q)] = s * x + c * y;
    }
}

/// Two passes of modified Gram–Schmidt; restores orthogonality lost when
/// dividing by small singular values.
fn reorthonormalize<R: Real>(u: &mut CMatrix<R>) {
    for _ in 0..2 {
        for j in 0..u.ncols() {
            for k in 0..j {
                let proj = u.column(k).dotc(&u.column(j));
                let ck = u.column(k).into_owned();
                u.column_mut(j).axpy(-proj, &ck, Complex::new(R::one(), R::zero()));
            }
            let norm = u.column(j).norm();
            u.column_mut(j).unscale_mut(norm);
        }
    }
}
