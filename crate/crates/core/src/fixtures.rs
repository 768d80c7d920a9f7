//! Finite truncations of the classical example families.

use num_complex::Complex;

use crate::linalg::HermitianMatrix;
use crate::scalar::{CVector, Real};
use crate::set::MatrixSet;

/// A named example set with per-member labels and a note on the behavior of
/// the untruncated family.
#[derive(Clone, Debug)]
pub struct Fixture<R: Real> {
    pub name: &'static str,
    pub set: MatrixSet<R>,
    pub labels: Vec<String>,
    /// Truncation parameter, for families indexed by `n ∈ ℕ`.
    pub truncation: Option<usize>,
    pub note: String,
}

pub const FIXTURE_NAMES: [&str; 9] = [
    "ex3.2", "ex3.5i", "ex3.5ii", "ex3.5iii", "ex4.3", "ex4.7", "ex4.8i", "ex4.8ii", "ex6.2",
];

/// Builds a fixture by name; `n` is the truncation for indexed families and
/// is clamped to at least 1.
pub fn fixture<R: Real>(name: &str, n: usize) -> Option<Fixture<R>> {
    let n = n.max(1);
    Some(match name {
        "ex3.2" => scaled_coordinate_projections(n),
        "ex3.5i" => dense_sphere_projections(n),
        "ex3.5ii" => equispaced_projections(n),
        "ex3.5iii" => Fixture {
            name: "ex3.5iii",
            ..scaled_coordinate_projections(n)
        },
        "ex4.3" => sqrt_coupled_family(n),
        "ex4.7" => square_decay_family(n),
        "ex4.8i" => unit_coupled_family(n),
        "ex4.8ii" => two_sided_coupled_family(n),
        "ex6.2" => commutant_scalar_pair(),
        _ => return None,
    })
}

fn lit<R: Real>(x: f64) -> R {
    R::lit(x)
}

fn real2<R: Real>(a: f64, b: f64, d: f64) -> HermitianMatrix<R> {
    HermitianMatrix::from_real(2, &[lit(a), lit(b), lit(b), lit(d)]).expect("2x2 entries")
}

fn build<R: Real>(
    name: &'static str,
    members: Vec<(String, HermitianMatrix<R>)>,
    truncation: Option<usize>,
    note: &str,
) -> Fixture<R> {
    let (labels, mats): (Vec<_>, Vec<_>) = members.into_iter().unzip();
    Fixture {
        name,
        set: MatrixSet::new(mats).expect("fixture members share a dimension"),
        labels,
        truncation,
        note: note.to_string(),
    }
}

/// `{n² Pₙ : n ≤ N}` with `Pₙ` the projection onto the `n`-th basis vector.
pub fn scaled_coordinate_projections<R: Real>(n_max: usize) -> Fixture<R> {
    let members = (1..=n_max)
        .map(|n| {
            let mut d = vec![R::zero(); n_max];
            d[n - 1] = lit((n * n) as f64);
            (format!("n={n}"), HermitianMatrix::diag(&d))
        })
        .collect();
    build(
        "ex3.2",
        members,
        Some(n_max),
        "unbounded family n^2 P_n; the full family has infimum 0, which is not a member",
    )
}

fn projection<R: Real>(v: CVector<R>) -> HermitianMatrix<R> {
    HermitianMatrix::rank_one(&v.normalize())
}

/// Projections onto `uₙ = (cos n, e^{i n√2} sin n)`, a sequence dense in the
/// unit sphere of `C²` up to phase.
pub fn dense_sphere_projections<R: Real>(n_max: usize) -> Fixture<R> {
    let members = (1..=n_max)
        .map(|n| {
            let t = n as f64;
            let phase = t * std::f64::consts::SQRT_2;
            let v = CVector::from_vec(vec![
                Complex::new(lit(t.cos()), R::zero()),
                Complex::new(lit(phase.cos() * t.sin()), lit(phase.sin() * t.sin())),
            ]);
            (format!("n={n}"), projection(v))
        })
        .collect();
    build(
        "ex3.5i",
        members,
        Some(n_max),
        "projections onto a dense sequence of unit vectors; the full family has infimum 0, which is not a member",
    )
}

/// Projections onto `N` equally spaced real unit vectors `(cos kπ/N, sin kπ/N)`.
pub fn equispaced_projections<R: Real>(n_max: usize) -> Fixture<R> {
    let members = (0..n_max)
        .map(|k| {
            let t = k as f64 * std::f64::consts::PI / n_max as f64;
            let v = CVector::from_vec(vec![
                Complex::new(lit(t.cos()), R::zero()),
                Complex::new(lit(t.sin()), R::zero()),
            ]);
            (format!("k={k}"), projection(v))
        })
        .collect();
    build(
        "ex3.5ii",
        members,
        Some(n_max),
        "sample of all rank-one projections on C^2; the full compact family has infimum 0, which is not a member",
    )
}

/// `{[[1+1/n, 1/√n], [1/√n, 1/n]] : n ≤ N} ∪ {diag(1, 0)}`.
pub fn sqrt_coupled_family<R: Real>(n_max: usize) -> Fixture<R> {
    let mut members: Vec<_> = (1..=n_max)
        .map(|n| {
            let t = n as f64;
            (format!("n={n}"), real2(1.0 + 1.0 / t, 1.0 / t.sqrt(), 1.0 / t))
        })
        .collect();
    members.push(("limit".into(), real2(1.0, 0.0, 0.0)));
    build(
        "ex4.3",
        members,
        Some(n_max),
        "greatest positive lower bound of the truncation is diag(1/N, 0), tending to 0, the only positive lower bound of the full family",
    )
}

/// `{[[1+1/n², 1/√n], [1/√n, 1/n]] : n ≤ N} ∪ {diag(1, 0)}`.
pub fn square_decay_family<R: Real>(n_max: usize) -> Fixture<R> {
    let mut members: Vec<_> = (1..=n_max)
        .map(|n| {
            let t = n as f64;
            (format!("n={n}"), real2(1.0 + 1.0 / (t * t), 1.0 / t.sqrt(), 1.0 / t))
        })
        .collect();
    members.push(("limit".into(), real2(1.0, 0.0, 0.0)));
    build(
        "ex4.7",
        members,
        Some(n_max),
        "at u = e1 the reduced set is {1/n - n} together with 0, unbounded below as N grows, so the full family has no lower bound L with (Lu,u) = 1",
    )
}

fn family_4_8<R: Real>(n_max: usize, off: f64, corner: f64, tag: &str) -> Vec<(String, HermitianMatrix<R>)> {
    (1..=n_max)
        .map(|n| (format!("{tag}n={n}"), real2(1.0 + 1.0 / n as f64, off, corner)))
        .collect()
}

/// `{[[1+1/n, 1], [1, 1]] : n ≤ N}`.
pub fn unit_coupled_family<R: Real>(n_max: usize) -> Fixture<R> {
    build(
        "ex4.8i",
        family_4_8(n_max, 1.0, 1.0, ""),
        Some(n_max),
        "in the full family no member attains alpha = 1 at u = e1, yet [[1,1],[1,1]] is a lower bound with (Lu,u) = 1",
    )
}

/// Both families of the second variant plus their two closure points.
pub fn two_sided_coupled_family<R: Real>(n_max: usize) -> Fixture<R> {
    let mut members = family_4_8(n_max, 1.0, 1.0, "a:");
    members.extend(family_4_8(n_max, 2.0, 4.0, "b:"));
    members.push(("a:limit".into(), real2(1.0, 1.0, 1.0)));
    members.push(("b:limit".into(), real2(1.0, 2.0, 4.0)));
    build(
        "ex4.8ii",
        members,
        Some(n_max),
        "at u = e1 the closure points attain alpha = 1 but map u differently, so no lower bound L with (Lu,u) = 1 exists",
    )
}

/// `{diag(1, 0), [[1, 1], [1, 2]]}`.
pub fn commutant_scalar_pair<R: Real>() -> Fixture<R> {
    build(
        "ex6.2",
        vec![("A".into(), real2(1.0, 0.0, 0.0)), ("B".into(), real2(1.0, 1.0, 2.0))],
        None,
        "only scalars commute with both members, so the greatest commuting lower bound is 0; diag(1/2, 0) is a larger lower bound, hence no maximal lower bound commutes with the set",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let f = fixture::<f64>("ex4.3", 3).unwrap();
        assert_eq!(f.set.len(), 4);
        assert_eq!(f.set.members()[3], HermitianMatrix::diag(&[1.0, 0.0]));
        let f = fixture::<f64>("ex3.2", 5).unwrap();
        assert_eq!((f.set.len(), f.set.dim()), (5, 5));
        assert_eq!(f.set.members()[4].entry(4, 4).re, 25.0);
        assert_eq!(fixture::<f64>("ex4.8ii", 4).unwrap().set.len(), 10);
        assert!(fixture::<f64>("ex9.9", 3).is_none());
        for name in FIXTURE_NAMES {
            assert_eq!(fixture::<f64>(name, 3).unwrap().name, name);
        }
    }
}
