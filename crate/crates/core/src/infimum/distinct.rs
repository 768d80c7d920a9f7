use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{invert_checked, mlb_mt};
use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix, Tolerances};
use crate::random::random_invertible;
use crate::scalar::{CMatrix, Real};
use crate::set::MatrixSet;

use super::{extend_to_maximal, maximal_lower_bound, require_no_infimum};

const MAX_ATTEMPTS: u64 = 16;
const SEED_BASE: u64 = 0x6d61_7869_6d61_6c73;

/// First maximal lower bound: `½(A + B − |A − B|)` for pairs, the recursive
/// construction otherwise.
fn base_bound<R: Real>(m: &MatrixSet<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    if m.len() == 2 {
        let n = m.dim();
        mlb_mt(&m.members()[0], &m.members()[1], &CMatrix::identity(n, n), tol)
    } else {
        maximal_lower_bound(m, tol)
    }
}

/// A maximal lower bound transported through the congruence `T`:
/// `M_T` for pairs, `T⁻¹ · M(T 𝔐 Tᴴ) · T^{−ᴴ}` otherwise.
fn transported_bound<R: Real>(m: &MatrixSet<R>, t: &CMatrix<R>, tol: &Tolerances<R>) -> Result<HermitianMatrix<R>> {
    if m.len() == 2 {
        mlb_mt(&m.members()[0], &m.members()[1], t, tol)
    } else {
        let t_inv = invert_checked(t, tol)?;
        let moved = m.congruence(&t.adjoint())?;
        Ok(maximal_lower_bound(&moved, tol)?.congruence(&t_inv.adjoint()))
    }
}

/// `count` pairwise distinct maximal lower bounds of a set without infimum.
///
/// Two distinct bounds `M₁`, `M₂` come from different congruences; further
/// ones are `Mₖ₊₁ = extend(½(M₁ + Mₖ))`, which cannot coincide with any
/// earlier bound. Deterministic: the random congruences use fixed seeds.
pub fn distinct_maximals<R: Real>(
    m: &MatrixSet<R>,
    count: usize,
    tol: &Tolerances<R>,
) -> Result<Vec<HermitianMatrix<R>>> {
    if count < 2 {
        return Err(Error::InvalidShape("count must be at least 2"));
    }
    require_no_infimum(m, tol)?;
    let separation = tol.eq_slack(m.scale()) * R::lit(1e3);
    let first = base_bound(m, tol)?;
    let mut second = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE + attempt);
        let t = random_invertible::<R, _>(&mut rng, m.dim());
        let candidate = match transported_bound(m, &t, tol) {
            Ok(c) => c,
            Err(Error::SingularTransform { .. }) => continue,
            Err(e) => return Err(e),
        };
        if candidate.distance(&first) > separation {
            second = Some(candidate);
            break;
        }
    }
    let second = second.ok_or(Error::DistinctnessFailure {
        attempts: MAX_ATTEMPTS as usize,
    })?;
    let mut out = vec![first, second];
    while out.len() < count {
        let mid = (&out[0] + out.last().expect("nonempty")).scale(R::lit(0.5));
        let next = extend_to_maximal(&mid, m, tol)?;
        let floor = tol.eq_rel * m.scale();
        if out.iter().any(|o| o.distance(&next) <= floor) {
            return Err(Error::DistinctnessFailure { attempts: out.len() });
        }
        out.push(next);
    }
    Ok(out)
}
