use crate::error::Result;
use crate::linalg::{range_nullspace_scaled, subspace_intersect, HermitianMatrix, Subspace, Tolerances};
use crate::parallel::{ando_onto, parallel_sum_family};
use crate::scalar::Real;
use crate::set::MatrixSet;

use super::finite_infimum;

/// Greatest positive lower bound of a finite PSD family.
#[derive(Clone, Debug)]
pub struct PositiveGlbReport<R: Real> {
    /// `𝒦 = ∩ R(Aⱼ)`.
    pub k_subspace: Subspace<R>,
    /// Parallel sum `S` of the family; its range is `𝒦`.
    pub s_parallel: HermitianMatrix<R>,
    /// `{[S]Aⱼ}` in member order.
    pub tilde_set: MatrixSet<R>,
    pub exists: bool,
    pub glb: Option<HermitianMatrix<R>>,
    /// Index of the smallest tilde member.
    pub minimizing_index: Option<usize>,
    /// Whether `R(glb) ⊆ 𝒦`; vacuously true when no glb exists.
    pub glb_supported_on_k: bool,
}

/// The greatest positive lower bound exists iff the set `{[S]Aⱼ}` has a
/// smallest member, which is then the answer. Existence is automatic when
/// `dim 𝒦 ≤ 1`.
pub fn positive_glb_family<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<PositiveGlbReport<R>> {
    m.require_psd(tol)?;
    let s_parallel = parallel_sum_family(m, tol)?;
    let ranges = m
        .iter()
        .map(|a| range_nullspace_scaled(a, R::zero(), tol).map(|(r, _)| r))
        .collect::<Result<Vec<_>>>()?;
    let k_subspace = subspace_intersect(&ranges, tol)?;
    let tilde = m
        .iter()
        .map(|a| ando_onto(&k_subspace, a, tol))
        .collect::<Result<Vec<_>>>()?;
    let tilde_set = MatrixSet::new(tilde)?;
    let inf = finite_infimum(&tilde_set, tol)?;
    let glb_supported_on_k = match &inf.infimum {
        Some(g) => {
            let (range, _) = range_nullspace_scaled(g, m.scale(), tol)?;
            k_subspace.contains_subspace(&range, tol)
        }
        None => true,
    };
    Ok(PositiveGlbReport {
        k_subspace,
        s_parallel,
        tilde_set,
        exists: inf.exists,
        glb: inf.infimum,
        minimizing_index: inf.minimizing_index,
        glb_supported_on_k,
    })
}
