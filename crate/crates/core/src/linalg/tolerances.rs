use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative thresholds for the three kinds of numerical decision.
///
/// `rank_rel` separates zero from nonzero eigen/singular values relative to
/// the largest one, `psd_rel` decides Loewner comparisons, `eq_rel` decides
/// equality of matrices and vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<R> {
    pub rank_rel: R,
    pub psd_rel: R,
    pub eq_rel: R,
}

impl<R: Real> Tolerances<R> {
    pub fn new(rank_rel: R, psd_rel: R, eq_rel: R) -> Result<Self> {
        let t = Self {
            rank_rel,
            psd_rel,
            eq_rel,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |x: R| x.is_finite() && x >= R::zero();
        if ok(self.rank_rel) && ok(self.psd_rel) && ok(self.eq_rel) {
            Ok(())
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    /// Cutoff below which an eigen/singular value counts as zero.
    ///
    /// `scale` lets callers decide rank relative to the problem rather than
    /// to the (possibly tiny) matrix at hand.
    #[inline]
    pub fn rank_cutoff(&self, max_abs: R, scale: R) -> R {
        self.rank_rel * max_abs.max(scale)
    }

    #[inline]
    pub fn psd_slack(&self, norm: R) -> R {
        self.psd_rel * (R::one() + norm)
    }

    #[inline]
    pub fn eq_slack(&self, norm: R) -> R {
        self.eq_rel * (R::one() + norm)
    }
}

/// `1e-10 / 1e-9 / 1e-8` for `f64`. For `f32` these are raised to
/// `1e3·ε / 1e3·ε / 1e4·ε` so that round-off is not mistaken for signal.
impl<R: Real> Default for Tolerances<R> {
    fn default() -> Self {
        let eps = R::default_epsilon();
        Self {
            rank_rel: R::lit(1e-10).max(eps * R::lit(1e3)),
            psd_rel: R::lit(1e-9).max(eps * R::lit(1e3)),
            eq_rel: R::lit(1e-8).max(eps * R::lit(1e4)),
        }
    }
}
