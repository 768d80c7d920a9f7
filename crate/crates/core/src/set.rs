use crate::error::{Error, Result};
use crate::linalg::{require_psd, HermitianMatrix, Tolerances};
use crate::scalar::{CMatrix, Real};

/// Ordered, nonempty, finite family of Hermitian matrices of one dimension.
///
/// Order is significant: algorithms break ties by member index.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSet<R: Real> {
    dim: usize,
    members: Vec<HermitianMatrix<R>>,
}

impl<R: Real> MatrixSet<R> {
    pub fn new(members: Vec<HermitianMatrix<R>>) -> Result<Self> {
        let dim = members.first().ok_or(Error::EmptySet)?.dim();
        if let Some(bad) = members.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[HermitianMatrix<R>] {
        &self.members
    }

    pub fn get(&self, i: usize) -> Option<&HermitianMatrix<R>> {
        self.members.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HermitianMatrix<R>> {
        self.members.iter()
    }

    pub fn into_members(self) -> Vec<HermitianMatrix<R>> {
        self.members
    }

    pub(crate) fn check_dim(&self, m: &HermitianMatrix<R>) -> Result<()> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.dim(),
            });
        }
        Ok(())
    }

    /// `{A − L : A ∈ 𝔐}`.
    pub fn shifted(&self, l: &HermitianMatrix<R>) -> Result<Self> {
        self.check_dim(l)?;
        Ok(Self {
            dim: self.dim,
            members: self.members.iter().map(|a| a - l).collect(),
        })
    }

    /// `{A + S : A ∈ 𝔐}`.
    pub fn translated(&self, s: &HermitianMatrix<R>) -> Result<Self> {
        self.check_dim(s)?;
        Ok(Self {
            dim: self.dim,
            members: self.members.iter().map(|a| a + s).collect(),
        })
    }

    /// `{Tᴴ A T : A ∈ 𝔐}` for square `T`.
    pub fn congruence(&self, t: &CMatrix<R>) -> Result<Self> {
        if t.nrows() != self.dim || t.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: t.nrows().max(t.ncols()),
            });
        }
        Ok(Self {
            dim: self.dim,
            members: self.members.iter().map(|a| a.congruence(t)).collect(),
        })
    }

    /// Largest member norm; the reference scale for rank decisions.
    pub fn scale(&self) -> R {
        self.members.iter().fold(R::zero(), |acc, m| acc.max(m.norm()))
    }

    /// Fails with the index of the first member that is not PSD.
    pub fn require_psd(&self, tol: &Tolerances<R>) -> Result<()> {
        for (i, a) in self.members.iter().enumerate() {
            require_psd(a, Some(i), tol)?;
        }
        Ok(())
    }
}

impl<'a, R: Real> IntoIterator for &'a MatrixSet<R> {
    type Item = &'a HermitianMatrix<R>;
    type IntoIter = std::slice::Iter<'a, HermitianMatrix<R>>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert_eq!(MatrixSet::<f64>::new(vec![]).unwrap_err(), Error::EmptySet);
        let r = MatrixSet::new(vec![HermitianMatrix::<f64>::zeros(2), HermitianMatrix::zeros(3)]);
        assert_eq!(r.unwrap_err(), Error::DimensionMismatch { expected: 2, found: 3 });
        let s = MatrixSet::new(vec![HermitianMatrix::diag(&[1.0, -1.0])]).unwrap();
        assert!(matches!(
            s.require_psd(&Tolerances::default()),
            Err(Error::NotPositiveSemidefinite { index: Some(0), .. })
        ));
    }
}
