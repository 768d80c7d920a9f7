//! Block partitions, Albert's positivity criterion, generalized Schur
//! complements, shorted operators and quotient sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::spectral::{apply_function, MatrixFunction};
use crate::linalg::{range_nullspace_scaled, spectral, HermitianMatrix, Subspace, Tolerances};
use crate::scalar::{fro, CMatrix, Real};
use crate::set::MatrixSet;

/// Orthogonal splitting `C^n = h1 ⊕ h2` with the rotation `Q = [h1 | h2]`.
#[derive(Clone, Debug)]
pub struct Splitting<R: Real> {
    pub h1: Subspace<R>,
    pub h2: Subspace<R>,
    rotation: CMatrix<R>,
}

impl<R: Real> Splitting<R> {
    /// `h1` must be proper and nontrivial.
    pub fn new(h1: &Subspace<R>) -> Result<Self> {
        let (k, n) = (h1.dim(), h1.ambient_dim());
        if k == 0 || k == n {
            return Err(Error::TrivialSubspace { dim: k, ambient: n });
        }
        let h2 = h1.complement()?;
        let mut rotation = CMatrix::zeros(n, n);
        rotation.columns_mut(0, k).copy_from(h1.basis());
        rotation.columns_mut(k, n - k).copy_from(h2.basis());
        Ok(Self {
            h1: h1.clone(),
            h2,
            rotation,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.rotation.nrows()
    }

    /// Unitary `[h1-basis | h2-basis]`.
    pub fn rotation(&self) -> &CMatrix<R> {
        &self.rotation
    }

    pub fn partition(&self, s: &HermitianMatrix<R>) -> Result<BlockPartition<R>> {
        if s.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: s.dim(),
            });
        }
        let b1 = self.h1.basis();
        let b2 = self.h2.basis();
        Ok(BlockPartition {
            splitting: self.clone(),
            s1: s.congruence(b1),
            s12: b1.adjoint() * s.as_matrix() * b2,
            s2: s.congruence(b2),
        })
    }

    /// Embeds an `h2` operator as `[[0, 0], [0, X]]` in standard coordinates.
    pub fn embed_h2(&self, x: &HermitianMatrix<R>) -> HermitianMatrix<R> {
        x.conjugate(self.h2.basis())
    }
}

/// `S = [[S₁, S₁₂], [S₁₂ᴴ, S₂]]` in `(h1, h2)` coordinates.
#[derive(Clone, Debug)]
pub struct BlockPartition<R: Real> {
    pub splitting: Splitting<R>,
    pub s1: HermitianMatrix<R>,
    pub s12: CMatrix<R>,
    pub s2: HermitianMatrix<R>,
}

impl<R: Real> BlockPartition<R> {
    /// Reassembles the blocks and rotates back to standard coordinates.
    pub fn reassemble(&self) -> HermitianMatrix<R> {
        let k = self.s1.dim();
        let n = self.splitting.ambient_dim();
        let mut m = CMatrix::zeros(n, n);
        m.view_mut((0, 0), (k, k)).copy_from(self.s1.as_matrix());
        m.view_mut((0, k), (k, n - k)).copy_from(&self.s12);
        m.view_mut((k, 0), (n - k, k)).copy_from(&self.s12.adjoint());
        m.view_mut((k, k), (n - k, n - k)).copy_from(self.s2.as_matrix());
        HermitianMatrix::symmetrize(m).conjugate(self.splitting.rotation())
    }
}

/// Block partition of `S` along `h1 ⊕ h1⊥`.
pub fn partition_blocks<R: Real>(s: &HermitianMatrix<R>, h1: &Subspace<R>) -> Result<BlockPartition<R>> {
    Splitting::new(h1)?.partition(s)
}

/// Which of the three block conditions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlbertCondition {
    /// `S₁ ≥ 0`.
    CornerPositive,
    /// `R(S₁₂) ⊆ R(S₁^{1/2})`.
    RangeInclusion,
    /// `S₂ − S₁₂ᴴ S₁^# S₁₂ ≥ 0`.
    ComplementPositive,
}

impl fmt::Display for AlbertCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlbertCondition::CornerPositive => "(i)",
            AlbertCondition::RangeInclusion => "(ii)",
            AlbertCondition::ComplementPositive => "(iii)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct AlbertVerdict<R: Real> {
    pub is_psd: bool,
    pub failed: Option<AlbertCondition>,
    /// Present once conditions (i) and (ii) hold.
    pub complement: Option<HermitianMatrix<R>>,
    pub range_residual: R,
}

struct CornerAnalysis<R: Real> {
    corner_min: R,
    residual: R,
    allowed: R,
    pinv: HermitianMatrix<R>,
}

/// Spectral analysis of `S₁`: its smallest eigenvalue, the range residual of
/// `S₁₂`, and `S₁^#`. Zero eigenvalues are judged against `scale`.
fn analyze_corner<R: Real>(p: &BlockPartition<R>, scale: R, tol: &Tolerances<R>) -> Result<CornerAnalysis<R>> {
    let eig = spectral(&p.s1)?;
    let (range, _) = range_nullspace_scaled(&p.s1, scale, tol)?;
    let proj = range.basis() * (range.basis().adjoint() * &p.s12);
    let residual = fro(&(&p.s12 - proj));
    let allowed = tol.psd_slack(fro(&p.s12));
    let pinv = apply_function(&eig, MatrixFunction::Pinv, scale, tol)?;
    Ok(CornerAnalysis {
        corner_min: eig.min(),
        residual,
        allowed,
        pinv,
    })
}

fn complement_from<R: Real>(p: &BlockPartition<R>, pinv: &HermitianMatrix<R>) -> HermitianMatrix<R> {
    let coupling = p.s12.adjoint() * pinv.as_matrix() * &p.s12;
    HermitianMatrix::symmetrize(p.s2.as_matrix() - coupling)
}

/// Decides `S ≥ 0` through the three block conditions instead of the
/// spectrum of `S`.
pub fn albert_is_psd<R: Real>(
    s: &HermitianMatrix<R>,
    h1: &Subspace<R>,
    tol: &Tolerances<R>,
) -> Result<AlbertVerdict<R>> {
    let p = partition_blocks(s, h1)?;
    let scale = s.norm();
    let slack = tol.psd_slack(scale);
    let corner = analyze_corner(&p, scale, tol)?;
    let fail = |c, complement| AlbertVerdict {
        is_psd: false,
        failed: Some(c),
        complement,
        range_residual: corner.residual,
    };
    if corner.corner_min < -slack {
        return Ok(fail(AlbertCondition::CornerPositive, None));
    }
    if corner.residual > corner.allowed {
        return Ok(fail(AlbertCondition::RangeInclusion, None));
    }
    let complement = complement_from(&p, &corner.pinv);
    if spectral(&complement)?.min() < -slack {
        return Ok(fail(AlbertCondition::ComplementPositive, Some(complement)));
    }
    Ok(AlbertVerdict {
        is_psd: true,
        failed: None,
        complement: Some(complement),
        range_residual: corner.residual,
    })
}

/// `S/S₁` on `h2` together with the shorted operator `[[0, 0], [0, S/S₁]]`.
#[derive(Clone, Debug)]
pub struct SchurComplement<R: Real> {
    pub complement: HermitianMatrix<R>,
    pub shorted: HermitianMatrix<R>,
    pub partition: BlockPartition<R>,
}

/// Generalized Schur complement `S₂ − S₁₂ᴴ S₁^# S₁₂`.
///
/// Errors when `R(S₁₂) ⊄ R(S₁)` at tolerance; nothing is projected away.
pub fn schur_complement<R: Real>(
    s: &HermitianMatrix<R>,
    h1: &Subspace<R>,
    tol: &Tolerances<R>,
) -> Result<SchurComplement<R>> {
    let splitting = Splitting::new(h1)?;
    schur_with(&splitting, s, s.norm(), tol)
}

pub(crate) fn schur_with<R: Real>(
    splitting: &Splitting<R>,
    s: &HermitianMatrix<R>,
    scale: R,
    tol: &Tolerances<R>,
) -> Result<SchurComplement<R>> {
    let p = splitting.partition(s)?;
    let corner = analyze_corner(&p, scale.max(s.norm()), tol)?;
    if corner.residual > corner.allowed {
        return Err(Error::RangeConditionViolated {
            index: None,
            residual: corner.residual.as_f64(),
            allowed: corner.allowed.as_f64(),
        });
    }
    let complement = complement_from(&p, &corner.pinv);
    let shorted = splitting.embed_h2(&complement);
    Ok(SchurComplement {
        complement,
        shorted,
        partition: p,
    })
}

/// `𝔐/h1 = {S/S₁ : S ∈ 𝔐}`, in member order.
pub fn quotient_set<R: Real>(m: &MatrixSet<R>, h1: &Subspace<R>, tol: &Tolerances<R>) -> Result<MatrixSet<R>> {
    let splitting = Splitting::new(h1)?;
    quotient_with(&splitting, m, m.scale(), tol)
}

pub(crate) fn quotient_with<R: Real>(
    splitting: &Splitting<R>,
    m: &MatrixSet<R>,
    scale: R,
    tol: &Tolerances<R>,
) -> Result<MatrixSet<R>> {
    let members = m
        .iter()
        .enumerate()
        .map(|(i, a)| {
            schur_with(splitting, a, scale, tol)
                .map(|c| c.complement)
                .map_err(|e| match e {
                    Error::RangeConditionViolated { residual, allowed, .. } => Error::RangeConditionViolated {
                        index: Some(i),
                        residual,
                        allowed,
                    },
                    other => other,
                })
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixSet::new(members)
}
