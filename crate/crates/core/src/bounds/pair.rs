use crate::error::{Error, Result};
use crate::linalg::svd::svd;
use crate::linalg::{spectral, HermitianMatrix, Tolerances};
use crate::scalar::{re, CMatrix, Real};

/// Inverse of `T`, provided `σ_min(T) > rank_rel · σ_max(T)`.
pub(crate) fn invert_checked<R: Real>(t: &CMatrix<R>, tol: &Tolerances<R>) -> Result<CMatrix<R>> {
    if !t.is_square() || t.nrows() == 0 {
        return Err(Error::NonSquare {
            rows: t.nrows(),
            cols: t.ncols(),
        });
    }
    let s = svd(t)?.sigma;
    let (smax, smin) = (s.max(), s.min());
    if smin <= tol.rank_rel * smax {
        return Err(Error::SingularTransform {
            min_singular: smin.as_f64(),
            max_singular: smax.as_f64(),
        });
    }
    t.clone().try_inverse().ok_or(Error::SingularTransform {
        min_singular: smin.as_f64(),
        max_singular: smax.as_f64(),
    })
}

/// `M_T = ½(A + B − Tᴴ |T^{−ᴴ}(A − B)T^{−1}| T)`, a maximal lower bound of
/// `{A, B}` for every invertible `T`. With `T = I` this is
/// `½(A + B − |A − B|)`.
pub fn mlb_mt<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    t: &CMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    if t.nrows() != a.dim() || t.ncols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: t.nrows().max(t.ncols()),
        });
    }
    let t_inv = invert_checked(t, tol)?;
    let inner = (a - b).congruence(&t_inv).abs(tol)?;
    let correction = inner.congruence(t);
    Ok((&(a + b) - &correction).scale(R::lit(0.5)))
}

/// Inertia and normalizing congruence of the pair `{A − B, 0}`.
#[derive(Clone, Debug)]
pub struct PairNormalization<R: Real> {
    /// Number of positive eigenvalues of `A − B`.
    pub positive: usize,
    /// Number of eigenvalues judged zero.
    pub zeros: usize,
    pub negative: usize,
    /// `T` with `T^{−ᴴ}(A − B)T^{−1} = J = diag(I_p, −I_q)`; absent when
    /// `A − B` is singular.
    pub t: Option<CMatrix<R>>,
}

impl<R: Real> PairNormalization<R> {
    pub fn is_j_form(&self) -> bool {
        self.t.is_some()
    }

    /// `(p, zeros, q)`.
    pub fn inertia(&self) -> (usize, usize, usize) {
        (self.positive, self.zeros, self.negative)
    }
}

/// Shifts `{A, B}` to `{A − B, 0}` and, when `A − B` is invertible, scales
/// its eigenvalues to `±1`. Positive eigenvectors come first, each group in
/// ascending eigenvalue order.
pub fn normalize_pair<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<PairNormalization<R>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let eig = spectral(&(a - b))?;
    let cutoff = tol.rank_cutoff(eig.max_abs(), a.norm().max(b.norm()));
    let n = eig.dim();
    let pos: Vec<usize> = (0..n).filter(|&i| eig.eigenvalues[i] > cutoff).collect();
    let neg: Vec<usize> = (0..n).filter(|&i| eig.eigenvalues[i] < -cutoff).collect();
    let zeros = n - pos.len() - neg.len();
    let t = (zeros == 0).then(|| {
        let order: Vec<usize> = pos.iter().chain(neg.iter()).copied().collect();
        let mut t = CMatrix::zeros(n, n);
        for (row, &i) in order.iter().enumerate() {
            let w = eig.eigenvalues[i].abs().sqrt();
            let v = eig.eigenvectors.column(i);
            for j in 0..n {
                t[(row, j)] = v[j].conj() * re(w);
            }
        }
        t
    });
    Ok(PairNormalization {
        positive: pos.len(),
        zeros,
        negative: neg.len(),
        t,
    })
}

/// `J = diag(I_p, −I_q)`.
pub fn signature_matrix<R: Real>(p: usize, q: usize) -> HermitianMatrix<R> {
    let mut d = vec![R::one(); p];
    d.extend(std::iter::repeat_n(-R::one(), q));
    HermitianMatrix::diag(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::certify_maximal;
    use crate::set::MatrixSet;

    fn tol() -> Tolerances<f64> {
        Tolerances::default()
    }

    fn d(v: &[f64]) -> HermitianMatrix<f64> {
        HermitianMatrix::diag(v)
    }

    #[test]
    fn mt_examples() {
        let i = CMatrix::identity(2, 2);
        let r = mlb_mt(&d(&[2.0, 0.0]), &d(&[0.0, 2.0]), &i, &tol()).unwrap();
        assert!(r.norm() < 1e-15);
        let r = mlb_mt(
            &d(&[1.0, 5.0, -2.0]),
            &d(&[3.0, 4.0, -1.0]),
            &CMatrix::identity(3, 3),
            &tol(),
        )
        .unwrap();
        assert!(r.distance(&d(&[1.0, 4.0, -2.0])) < 1e-14);

        let ex = crate::fixtures::commutant_scalar_pair::<f64>().set;
        let r = mlb_mt(&ex.members()[0], &ex.members()[1], &i, &tol()).unwrap();
        assert!(certify_maximal(&r, &ex, &tol()).unwrap().is_maximal);
    }

    #[test]
    fn singular_transform_rejected() {
        let t = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![re(1.0), re(0.0)]));
        assert!(matches!(
            mlb_mt(&d(&[1.0, 0.0]), &d(&[0.0, 1.0]), &t, &tol()),
            Err(Error::SingularTransform { .. })
        ));
    }

    #[test]
    fn normalization_examples() {
        let r = normalize_pair(&d(&[2.0, -3.0]), &HermitianMatrix::zeros(2), &tol()).unwrap();
        assert_eq!(r.inertia(), (1, 0, 1));
        let t = r.t.unwrap();
        let want = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![re(2f64.sqrt()), re(3f64.sqrt())]));
        assert!(crate::scalar::fro(&(t - want)) < 1e-14);

        let a = HermitianMatrix::from_real(2, &[1.0, 2.0, 2.0, 1.0]).unwrap();
        let r = normalize_pair(&a, &a, &tol()).unwrap();
        assert_eq!((r.inertia(), r.is_j_form()), ((0, 2, 0), false));

        let r = normalize_pair(&d(&[1.0, 0.0]), &HermitianMatrix::zeros(2), &tol()).unwrap();
        assert_eq!((r.zeros, r.is_j_form()), (1, false));
    }

    #[test]
    fn normalization_reaches_signature() {
        let a = HermitianMatrix::from_real(3, &[1., 2., 0., 2., -1., 1., 0., 1., 3.]).unwrap();
        let b = d(&[0.5, 0.0, 1.0]);
        let r = normalize_pair(&a, &b, &tol()).unwrap();
        let t_inv = r.t.clone().unwrap().try_inverse().unwrap();
        let j = signature_matrix::<f64>(r.positive, r.negative);
        assert!((&a - &b).congruence(&t_inv).distance(&j) < 1e-12);
        let set = MatrixSet::new(vec![a, b]).unwrap();
        assert!(set.congruence(&t_inv).is_ok());
    }
}
