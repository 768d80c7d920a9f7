//! Seeded random generators for test families and ensembles.

use nalgebra::DVector;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::HermitianMatrix;
use crate::scalar::{re, CMatrix, CVector, Real};

fn gaussian<R: Real, G: Rng + ?Sized>(rng: &mut G) -> R {
    R::lit(rng.sample::<f64, _>(StandardNormal))
}

fn complex_gaussian<R: Real, G: Rng + ?Sized>(rng: &mut G) -> Complex<R> {
    let h = R::lit(std::f64::consts::FRAC_1_SQRT_2);
    Complex::new(gaussian::<R, G>(rng) * h, gaussian::<R, G>(rng) * h)
}

/// `rows × cols` matrix of standard complex Gaussians.
pub fn random_complex<R: Real, G: Rng + ?Sized>(rng: &mut G, rows: usize, cols: usize) -> CMatrix<R> {
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// `(G + Gᴴ)/2` for complex Gaussian `G`.
pub fn random_hermitian<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize) -> HermitianMatrix<R> {
    HermitianMatrix::symmetrize(random_complex(rng, n, n))
}

/// Gram matrix `G Gᴴ / rank` with `G` of size `n × rank`.
pub fn random_psd<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize, rank: usize) -> HermitianMatrix<R> {
    let g = random_complex::<R, G>(rng, n, rank);
    let k = R::lit(rank.max(1) as f64);
    HermitianMatrix::symmetrize(&g * g.adjoint()).scale(R::one() / k)
}

/// Haar-distributed unitary from the QR factorization of a Gaussian matrix.
pub fn random_unitary<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize) -> CMatrix<R> {
    let qr = random_complex::<R, G>(rng, n, n).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let m = crate::scalar::modulus(&d);
        if m > R::zero() {
            let phase = d / re(m);
            let mut col = q.column_mut(j);
            col *= phase;
        }
    }
    q
}

pub fn random_unit_vector<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize) -> CVector<R> {
    let v = CVector::from_fn(n, |_, _| complex_gaussian(rng));
    v.normalize()
}

/// `count` matrices `U Dⱼ Uᴴ` sharing one random unitary `U`. Each diagonal
/// entry is drawn from `{-2, -1, 0, 1, 2}` with probability `repeat` and from
/// a Gaussian otherwise, so repeated eigenvalues occur.
pub fn random_commuting_family<R: Real, G: Rng + ?Sized>(
    rng: &mut G,
    n: usize,
    count: usize,
    repeat: f64,
) -> Vec<HermitianMatrix<R>> {
    let u = random_unitary::<R, G>(rng, n);
    (0..count)
        .map(|_| {
            let d: Vec<R> = (0..n)
                .map(|_| {
                    if rng.random_bool(repeat) {
                        R::lit(rng.random_range(-2i32..=2) as f64)
                    } else {
                        gaussian(rng)
                    }
                })
                .collect();
            HermitianMatrix::diag(&d).conjugate(&u)
        })
        .collect()
}

/// `U Σ Vᴴ` with singular values uniform in `[0.2, 2]`.
pub fn random_invertible<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize) -> CMatrix<R> {
    let u = random_unitary::<R, G>(rng, n);
    let v = random_unitary::<R, G>(rng, n);
    let s = DVector::from_fn(n, |_, _| re(R::lit(rng.random_range(0.2..2.0))));
    u * CMatrix::from_diagonal(&s) * v.adjoint()
}

/// Orthogonal projection onto a random `rank`-dimensional subspace.
pub fn random_projection<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize, rank: usize) -> HermitianMatrix<R> {
    let u = random_unitary::<R, G>(rng, n);
    let b = u.columns(0, rank.min(n)).into_owned();
    HermitianMatrix::symmetrize(&b * b.adjoint())
}

/// `U D Uᴴ` with `D` uniform in `[0, 1]`: a positive contraction.
pub fn random_contraction<R: Real, G: Rng + ?Sized>(rng: &mut G, n: usize) -> HermitianMatrix<R> {
    let u = random_unitary::<R, G>(rng, n);
    let d: Vec<R> = (0..n).map(|_| R::lit(rng.random_range(0.0..1.0))).collect();
    HermitianMatrix::diag(&d).conjugate(&u)
}
