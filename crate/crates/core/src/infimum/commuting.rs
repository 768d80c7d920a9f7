use crate::error::{Error, Result};
use crate::linalg::svd::svd;
use crate::linalg::{spectral, HermitianMatrix, Tolerances};
use num_complex::Complex;

use crate::scalar::{re, CMatrix, Real};
use crate::set::MatrixSet;

/// Greatest lower bound among operators commuting with a commuting family,
/// computed by two independent routes.
#[derive(Clone, Debug)]
pub struct CommutingGlbReport<R: Real> {
    /// Result of the pairwise recursion (returned as the answer).
    pub glb: HermitianMatrix<R>,
    /// Entrywise minimum in a joint eigenbasis.
    pub diagonalized: HermitianMatrix<R>,
    /// `‖glb − diagonalized‖_F`.
    pub route_gap: R,
    pub routes_agree: bool,
}

/// `½(A + B − |A − B|)`.
fn pair_glb<R: Real>(
    a: &HermitianMatrix<R>,
    b: &HermitianMatrix<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    Ok((&(a + b) - &(a - b).abs(tol)?).scale(R::lit(0.5)))
}

pub(crate) fn require_commuting<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<()> {
    for (i, a) in m.iter().enumerate() {
        for (j, b) in m.iter().enumerate().skip(i + 1) {
            let c = a.commutator_norm(b);
            if c > tol.eq_rel * (R::one() + a.norm() * b.norm()) {
                return Err(Error::NotCommutingFamily {
                    i,
                    j,
                    commutator: c.as_f64(),
                });
            }
        }
    }
    Ok(())
}

/// Splits `C^n` into joint eigenspaces: each member refines every current
/// block by the eigenspaces of its restriction, merging eigenvalues closer
/// than `eq_rel · (1 + ‖A‖)`.
fn joint_eigenspaces<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<Vec<CMatrix<R>>> {
    let n = m.dim();
    let mut blocks = vec![CMatrix::<R>::identity(n, n)];
    for a in m {
        let gap = tol.eq_slack(a.norm());
        let mut refined = Vec::with_capacity(blocks.len());
        for q in &blocks {
            let eig = spectral(&a.congruence(q))?;
            let mut start = 0;
            for k in 1..=eig.dim() {
                if k == eig.dim() || eig.eigenvalues[k] - eig.eigenvalues[k - 1] > gap {
                    refined.push(q * eig.eigenvectors.columns(start, k - start));
                    start = k;
                }
            }
        }
        blocks = refined;
    }
    Ok(blocks)
}

fn diagonal_route<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    let n = m.dim();
    let mut total = CMatrix::zeros(n, n);
    for q in joint_eigenspaces(m, tol)? {
        let k = R::from_usize(q.ncols()).expect("block size fits");
        let value = m
            .iter()
            .map(|a| a.congruence(&q).trace() / k)
            .fold(R::infinity(), R::min);
        total += &q * q.adjoint() * re(value);
    }
    Ok(HermitianMatrix::symmetrize(total))
}

pub fn commuting_glb<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<CommutingGlbReport<R>> {
    require_commuting(m, tol)?;
    let mut glb = m.members()[0].clone();
    for a in &m.members()[1..] {
        glb = pair_glb(&glb, a, tol)?;
    }
    let diagonalized = diagonal_route(m, tol)?;
    let route_gap = glb.distance(&diagonalized);
    let routes_agree = route_gap <= tol.eq_slack(m.scale());
    Ok(CommutingGlbReport {
        glb,
        diagonalized,
        route_gap,
        routes_agree,
    })
}

/// Greatest lower bound among Hermitian matrices commuting with every
/// member, for arbitrary finite sets.
#[derive(Clone, Debug)]
pub struct CommutantGlbReport<R: Real> {
    /// Dimension of the commutant algebra `{X : XA = AX for all A}`.
    pub commutant_dim: usize,
    /// Dimensions of the central blocks of the commutant.
    pub block_dims: Vec<usize>,
    /// Whether only scalar matrices commute with the set.
    pub scalar_only: bool,
    pub glb: HermitianMatrix<R>,
}

/// Orthonormal basis of the null space of a `rows × cols` matrix, returned
/// as coefficient columns.
fn kernel<R: Real>(a: CMatrix<R>, cutoff: R) -> Result<CMatrix<R>> {
    Ok(svd(&a)?.null_columns(cutoff))
}

fn commutator_operator<R: Real>(a: &CMatrix<R>) -> CMatrix<R> {
    // vec(XA − AX) = (Aᵀ ⊗ I − I ⊗ A) vec(X) for column-major vec.
    let n = a.nrows();
    let id = CMatrix::<R>::identity(n, n);
    a.transpose().kronecker(&id) - id.kronecker(a)
}

fn unvec<R: Real>(v: nalgebra::DVectorView<'_, Complex<R>>, n: usize) -> CMatrix<R> {
    CMatrix::from_column_slice(n, n, v.as_slice())
}

/// The commutant of a *-closed set is a direct sum of full matrix algebras;
/// on each central block every member acts as `I ⊗ B`, so the greatest
/// commuting lower bound is the smallest member eigenvalue on that block,
/// times the block projection.
pub fn commutant_glb<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<CommutantGlbReport<R>> {
    let n = m.dim();
    let nn = n * n;
    let cutoff = tol.eq_slack(m.scale());
    let mut stacked = CMatrix::zeros(nn * m.len(), nn);
    for (j, a) in m.iter().enumerate() {
        stacked
            .rows_mut(j * nn, nn)
            .copy_from(&commutator_operator(a.as_matrix()));
    }
    let commutant = kernel(stacked, cutoff)?;
    let d = commutant.ncols();
    let basis: Vec<CMatrix<R>> = (0..d).map(|i| unvec(commutant.column(i), n)).collect();

    // Center: combinations of the basis commuting with every basis element.
    let mut central_eqs = CMatrix::zeros(nn * d, d);
    for (k, ck) in basis.iter().enumerate() {
        for (i, ci) in basis.iter().enumerate() {
            let c = ci * ck - ck * ci;
            central_eqs.view_mut((k * nn, i), (nn, 1)).copy_from_slice(c.as_slice());
        }
    }
    let center_coeffs = kernel(central_eqs, R::lit(1e2) * cutoff)?;
    let mut generic = CMatrix::zeros(n, n);
    for c in 0..center_coeffs.ncols() {
        let mut z = CMatrix::zeros(n, n);
        for (i, bi) in basis.iter().enumerate() {
            z += bi * center_coeffs[(i, c)];
        }
        // Hermitian and skew parts of a central element are central.
        let w1 = R::lit(1.0 / (1.0 + c as f64 * std::f64::consts::E));
        let w2 = R::lit(1.0 / (2.0 + c as f64 * std::f64::consts::PI));
        let herm = (&z + z.adjoint()) * re(w1);
        let skew = (&z - z.adjoint()) * Complex::new(R::zero(), -w2);
        generic += herm + skew;
    }
    let eig = spectral(&HermitianMatrix::symmetrize(generic))?;
    let gap = tol.eq_slack(eig.max_abs()) * R::lit(1e2);
    let mut glb = CMatrix::zeros(n, n);
    let mut block_dims = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || eig.eigenvalues[k] - eig.eigenvalues[k - 1] > gap {
            let q = eig.eigenvectors.columns(start, k - start).into_owned();
            let mut value = R::infinity();
            for a in m {
                value = value.min(spectral(&a.congruence(&q))?.min());
            }
            glb += &q * q.adjoint() * re(value);
            block_dims.push(k - start);
            start = k;
        }
    }
    Ok(CommutantGlbReport {
        commutant_dim: d,
        scalar_only: d == 1,
        block_dims,
        glb: HermitianMatrix::symmetrize(glb),
    })
}
