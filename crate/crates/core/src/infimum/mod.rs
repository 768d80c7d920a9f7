//! Infimum existence, maximal lower bounds by recursive Schur reduction, and
//! greatest lower bounds for commuting and positive families.

mod commuting;
mod distinct;
mod positive_glb;

pub use commuting::{commutant_glb, commuting_glb, CommutantGlbReport, CommutingGlbReport};
pub use distinct::distinct_maximals;
pub use positive_glb::{positive_glb_family, PositiveGlbReport};

use crate::bounds::require_lower_bound;
use crate::error::{Error, Result};
use crate::linalg::{loewner_leq, spectral, HermitianMatrix, Subspace, Tolerances};
use crate::scalar::Real;
use crate::schur::{quotient_with, Splitting};
use crate::set::MatrixSet;

/// Outcome of the infimum test for a finite set.
#[derive(Clone, Debug)]
pub struct InfimumReport<R: Real> {
    pub exists: bool,
    pub infimum: Option<HermitianMatrix<R>>,
    /// Lowest index of a member below all others.
    pub minimizing_index: Option<usize>,
}

/// The infimum of a finite set exists iff some member is below all members,
/// and is then that member. For two members this is the anti-lattice
/// criterion: an infimum exists only for comparable pairs.
pub fn finite_infimum<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<InfimumReport<R>> {
    for (i, g) in m.iter().enumerate() {
        let mut below_all = true;
        for (j, a) in m.iter().enumerate() {
            if i != j && !loewner_leq(g, a, tol)? {
                below_all = false;
                break;
            }
        }
        if below_all {
            return Ok(InfimumReport {
                exists: true,
                infimum: Some(g.clone()),
                minimizing_index: Some(i),
            });
        }
    }
    Ok(InfimumReport {
        exists: false,
        infimum: None,
        minimizing_index: None,
    })
}

/// A maximal lower bound `M ≥ γI` of a set of PSD matrices, where `γ` is the
/// smallest eigenvalue over all members.
///
/// Shift by `γI`, pick the lowest-index member attaining `γ` and its first
/// eigenvector `u`, pass to the quotient set over `span(u)`, recurse on `u⊥`
/// and lift the result back.
pub fn positive_maximal_lb<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    m.require_psd(tol)?;
    reduce(m, m.scale(), tol)
}

/// The same recursion for an arbitrary finite Hermitian set, which needs no
/// positivity since the first step shifts by the smallest eigenvalue.
pub fn maximal_lower_bound<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    reduce(m, m.scale(), tol)
}

fn reduce<R: Real>(m: &MatrixSet<R>, scale: R, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    let n = m.dim();
    let eigs = m.iter().map(spectral).collect::<Result<Vec<_>>>()?;
    let gamma = eigs.iter().map(|e| e.min()).fold(R::infinity(), R::min);
    if n == 1 {
        return Ok(HermitianMatrix::scalar(1, gamma));
    }
    let cutoff = tol.rank_cutoff(R::zero(), scale);
    let attaining = eigs
        .iter()
        .position(|e| e.min() - gamma <= cutoff)
        .expect("the minimum is attained by some member");
    let u = eigs[attaining].vector(0);
    let shift = HermitianMatrix::scalar(n, gamma);
    let shifted = m.shifted(&shift)?;
    let splitting = Splitting::new(&Subspace::from_vectors(n, &[u], tol)?)?;
    let quotient = quotient_with(&splitting, &shifted, scale, tol)?;
    let inner = reduce(&quotient, scale, tol)?;
    Ok(&splitting.embed_h2(&inner) + &shift)
}

/// A maximal lower bound above the lower bound `L`: `L` plus the recursive
/// maximal lower bound of the PSD set `𝔐 − L`.
pub fn extend_to_maximal<R: Real>(
    l: &HermitianMatrix<R>,
    m: &MatrixSet<R>,
    tol: &Tolerances<R>,
) -> Result<HermitianMatrix<R>> {
    require_lower_bound(l, m, tol)?;
    let shifted = m.shifted(l)?;
    let scale = m.scale().max(l.norm());
    Ok(l + &reduce(&shifted, scale, tol)?)
}

pub(crate) fn require_no_infimum<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<()> {
    match finite_infimum(m, tol)?.minimizing_index {
        Some(index) => Err(Error::InfimumExists { index }),
        None => Ok(()),
    }
}
