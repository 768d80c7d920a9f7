//! Lower bounds `L` constrained by `(Lu, u) = α`, where `α` is the smallest
//! value of `(Au, u)` over the set.

use crate::error::{Error, Result};
use crate::infimum::maximal_lower_bound;
use crate::linalg::{HermitianMatrix, Subspace, Tolerances};
use crate::scalar::{CMatrix, CVector, Real};
use crate::schur::Splitting;
use crate::set::MatrixSet;

/// Block data of the constrained problem in the `(span u, u⊥)` partition.
#[derive(Clone, Debug)]
pub struct ConstrainedBounds<R: Real> {
    /// `min (Au, u)` over the members.
    pub alpha: R,
    /// Members attaining `alpha`, in index order.
    pub attaining: Vec<usize>,
    /// Whether all attaining members agree on `u`: `Au = Bu`.
    pub condition_holds: bool,
    /// `{A₂ − (a₁ − α)^# (A₁₂ − B₁₂)ᴴ(A₁₂ − B₁₂)}` on `u⊥`; `None` when the
    /// condition fails or `u⊥ = {0}`.
    pub reduced_set: Option<MatrixSet<R>>,
    /// `B₁₂` of the lowest-index attaining member (`1 × (n−1)`).
    pub witness_coupling: Option<CMatrix<R>>,
    /// `span(u) ⊕ u⊥` with the basis used for the blocks; `None` in
    /// dimension 1.
    pub splitting: Option<Splitting<R>>,
}

impl<R: Real> ConstrainedBounds<R> {
    /// Whether some lower bound `L` with `(Lu, u) = α` can exist.
    pub fn admits_bounds(&self) -> bool {
        self.condition_holds
    }
}

fn check_unit<R: Real>(m: &MatrixSet<R>, u: &CVector<R>, tol: &Tolerances<R>) -> Result<()> {
    if u.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: u.len(),
        });
    }
    let norm = u.norm();
    if !norm.is_finite() || (norm - R::one()).abs() > tol.eq_rel {
        return Err(Error::NotUnitVector { norm: norm.as_f64() });
    }
    Ok(())
}

pub fn constrained_at_vector<R: Real>(
    m: &MatrixSet<R>,
    u: &CVector<R>,
    tol: &Tolerances<R>,
) -> Result<ConstrainedBounds<R>> {
    check_unit(m, u, tol)?;
    let u = u.normalize();
    let values: Vec<R> = m.iter().map(|a| a.quadratic_form(&u)).collect();
    let alpha = values.iter().copied().fold(R::infinity(), R::min);
    let slack = tol.eq_slack(m.scale());
    let attaining: Vec<usize> = (0..m.len()).filter(|&i| values[i] - alpha <= slack).collect();
    let images: Vec<CVector<R>> = attaining.iter().map(|&i| m.members()[i].apply(&u)).collect();
    let condition_holds = images.iter().all(|v| (v - &images[0]).norm() <= slack);

    let n = m.dim();
    if n == 1 || !condition_holds {
        let splitting = if n == 1 {
            None
        } else {
            Some(Splitting::new(&Subspace::from_vectors(n, &[u], tol)?)?)
        };
        return Ok(ConstrainedBounds {
            alpha,
            attaining,
            condition_holds,
            reduced_set: None,
            witness_coupling: None,
            splitting,
        });
    }

    let splitting = Splitting::new(&Subspace::from_vectors(n, &[u], tol)?)?;
    let parts = m.iter().map(|a| splitting.partition(a)).collect::<Result<Vec<_>>>()?;
    let witness = parts[attaining[0]].s12.clone();
    let reduced = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if attaining.contains(&i) {
                return p.s2.clone();
            }
            let gap = p.s1.entry(0, 0).re - alpha;
            let diff = &p.s12 - &witness;
            let coupling = HermitianMatrix::symmetrize(diff.adjoint() * diff);
            &p.s2 - &coupling.scale(R::one() / gap)
        })
        .collect();
    Ok(ConstrainedBounds {
        alpha,
        attaining,
        condition_holds,
        reduced_set: Some(MatrixSet::new(reduced)?),
        witness_coupling: Some(witness),
        splitting: Some(splitting),
    })
}

/// A maximal element of `{L lower bound : (Lu, u) = α}`, assembled as
/// `[[α, B₁₂], [B₁₂ᴴ, M₂]]` with `M₂` a maximal lower bound of the reduced
/// set. `None` when that constrained set is empty.
pub fn maximal_in_lu<R: Real>(
    m: &MatrixSet<R>,
    u: &CVector<R>,
    tol: &Tolerances<R>,
) -> Result<Option<HermitianMatrix<R>>> {
    let c = constrained_at_vector(m, u, tol)?;
    if !c.condition_holds {
        return Ok(None);
    }
    let (Some(reduced), Some(witness), Some(splitting)) = (&c.reduced_set, &c.witness_coupling, &c.splitting) else {
        return Ok(Some(HermitianMatrix::rank_one(&u.normalize()).scale(c.alpha)));
    };
    let m2 = maximal_lower_bound(reduced, tol)?;
    let n = m.dim();
    let mut blocks = CMatrix::zeros(n, n);
    blocks[(0, 0)] = crate::scalar::re(c.alpha);
    blocks.view_mut((0, 1), (1, n - 1)).copy_from(witness);
    blocks.view_mut((1, 0), (n - 1, 1)).copy_from(&witness.adjoint());
    blocks.view_mut((1, 1), (n - 1, n - 1)).copy_from(m2.as_matrix());
    Ok(Some(
        HermitianMatrix::symmetrize(blocks).conjugate(splitting.rotation()),
    ))
}
