//! Seeded randomized invariant suites.
//!
//! Trial `i` draws from `ChaCha8Rng::seed_from_u64(seed)` on stream `i`, so
//! every trial sees the same numbers whether trials run in parallel or not,
//! and results are aggregated in trial order.

use loewner_core::random::{
    random_commuting_family, random_complex, random_contraction, random_hermitian, random_invertible, random_psd,
    random_unitary,
};
use loewner_core::{
    albert_is_psd, certify_maximal, commuting_glb, compare, distinct_maximals, finite_infimum, is_lower_bound, mlb_mt,
    parallel_sum, positive_glb_family, positive_maximal_lb, range_nullspace, schur_complement, signature_matrix,
    spectral, stott_mx, stott_recover_x, subspace_intersect, CVector, HermitianMatrix, MatrixSet, Result as CoreResult,
    StottParam, Subspace, Tolerances,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

type H = HermitianMatrix<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Worst {
    Largest,
    Smallest,
}

/// One trial: pass/fail plus the suite's metric.
type Trial = fn(&mut ChaCha8Rng, usize, &Tolerances<f64>) -> CoreResult<(bool, f64)>;

struct Suite {
    name: &'static str,
    /// Classical result the suite exercises, for the human report.
    about: &'static str,
    metric: Option<(&'static str, Worst)>,
    min_dim: usize,
    trial: Trial,
}

const SUITES: [Suite; 8] = [
    Suite {
        name: "anti-lattice",
        about: "Kadison anti-lattice: incomparable pairs have no infimum and several maximal lower bounds",
        metric: Some(("min pairwise separation of 3 maximal bounds / scale", Worst::Smallest)),
        min_dim: 2,
        trial: anti_lattice,
    },
    Suite {
        name: "stott-roundtrip",
        about: "Stott parametrization of the maximal lower bounds of {J, 0}",
        metric: Some(("max |X − X'|", Worst::Largest)),
        min_dim: 2,
        trial: stott_roundtrip,
    },
    Suite {
        name: "albert-vs-spectral",
        about: "Albert positivity criterion against the spectrum",
        metric: None,
        min_dim: 2,
        trial: albert_vs_spectral,
    },
    Suite {
        name: "mt-family",
        about: "congruence family M_T of maximal lower bounds of a pair",
        metric: Some(("congruence equivariance residual / scale", Worst::Largest)),
        min_dim: 1,
        trial: mt_family,
    },
    Suite {
        name: "commuting-routes",
        about: "commuting greatest lower bound, recursion vs joint diagonalization",
        metric: Some(("route gap / scale", Worst::Largest)),
        min_dim: 1,
        trial: commuting_routes,
    },
    Suite {
        name: "positive-mlb",
        about: "recursive maximal lower bound of a positive family, null-space spanning certificate",
        metric: Some(("−λ_min(M) / scale", Worst::Largest)),
        min_dim: 1,
        trial: positive_mlb,
    },
    Suite {
        name: "parallel-rank",
        about: "range of a parallel sum is the intersection of ranges",
        metric: None,
        min_dim: 1,
        trial: parallel_rank,
    },
    Suite {
        name: "contraction-projection",
        about: "greatest positive lower bound of a contraction and a projection is the shorted operator",
        metric: Some(("distance to the shorted operator", Worst::Largest)),
        min_dim: 2,
        trial: contraction_projection,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Parses `lo-hi`, `lo..=hi` or a single dimension.
pub fn parse_dims(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("--dims expects lo-hi or a single dimension, got '{s}'"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub struct EnsembleResult {
    pub verdicts: Value,
    pub lines: Vec<String>,
}

pub fn run(
    suite: &str,
    trials: usize,
    dims: (usize, usize),
    seed: u64,
    serial: bool,
    tol: &Tolerances<f64>,
) -> CliResult<EnsembleResult> {
    let s = SUITES
        .iter()
        .find(|s| s.name == suite)
        .ok_or_else(|| CliError::UnknownSuite(suite.to_string()))?;
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if dims.1 < s.min_dim {
        return Err(CliError::Usage(format!(
            "suite {} needs dimension at least {}",
            s.name, s.min_dim
        )));
    }
    let lo = dims.0.max(s.min_dim);
    let one = |i: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let n = rng.random_range(lo..=dims.1);
        (s.trial)(&mut rng, n, tol).map_err(|e| e.to_string())
    };
    let results: Vec<Result<(bool, f64), String>> = if serial {
        (0..trials).map(one).collect()
    } else {
        (0..trials).into_par_iter().map(one).collect()
    };

    let mut passed = 0;
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    let mut worst: Option<f64> = None;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok((ok, metric)) => {
                if *ok {
                    passed += 1;
                } else {
                    failures.push(i);
                }
                if let Some((_, dir)) = s.metric {
                    worst = Some(match (worst, dir) {
                        (None, _) => *metric,
                        (Some(w), Worst::Largest) => w.max(*metric),
                        (Some(w), Worst::Smallest) => w.min(*metric),
                    });
                }
            }
            Err(msg) => {
                failures.push(i);
                errors.push(json!({ "trial": i, "error": msg }));
            }
        }
    }
    let mut lines = vec![
        format!("suite {} ({})", s.name, s.about),
        format!("trials {trials}, dimensions {lo}..={}, seed {seed}", dims.1),
        format!("passed {passed}/{trials}"),
    ];
    let mut metric = Value::Null;
    if let (Some((name, _)), Some(w)) = (s.metric, worst) {
        lines.push(format!("worst {name}: {w:.3e}"));
        metric = json!({ "name": name, "worst": w });
    }
    if !failures.is_empty() {
        let shown: Vec<String> = failures.iter().take(10).map(usize::to_string).collect();
        lines.push(format!(
            "failed trials: {}{}",
            shown.join(", "),
            if failures.len() > 10 { ", …" } else { "" }
        ));
    }
    Ok(EnsembleResult {
        verdicts: json!({
            "suite": s.name,
            "trials": trials,
            "dims": [lo, dims.1],
            "passed": passed,
            "failed": failures.len(),
            "failed_trials": failures,
            "errors": errors,
            "metric": metric,
        }),
        lines,
    })
}

fn lambda_min(m: &H) -> CoreResult<f64> {
    Ok(spectral(m)?.min())
}

fn anti_lattice(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    // Rejection sampling of an incomparable pair.
    let set = loop {
        let a: H = random_hermitian(r, n);
        let b: H = random_hermitian(r, n);
        if !compare(&a, &b, tol)?.is_comparable() {
            break MatrixSet::new(vec![a, b])?;
        }
    };
    let scale = set.scale();
    if finite_infimum(&set, tol)?.exists {
        return Ok((false, 0.0));
    }
    let ms = distinct_maximals(&set, 3, tol)?;
    let mut certified = true;
    for m in &ms {
        certified &= certify_maximal(m, &set, tol)?.is_maximal;
    }
    let mut sep = f64::INFINITY;
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            sep = sep.min(ms[i].distance(&ms[j]) / scale);
        }
    }
    Ok((certified && sep > 1e-6, sep))
}

fn stott_roundtrip(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let p = r.random_range(1..n);
    let q = n - p;
    let x = StottParam::new(random_complex::<f64, _>(r, p, q))?;
    let (_, mx) = stott_mx(&x, tol)?;
    let pair = MatrixSet::new(vec![signature_matrix(p, q), H::zeros(n)])?;
    let certified = certify_maximal(&mx, &pair, tol)?.is_maximal;
    let back = stott_recover_x(&mx, p, q, tol)?;
    let err = (&back.x - &x.x).iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok((certified && err <= 1e-8, err))
}

fn albert_vs_spectral(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let s: H = match r.random_range(0..3) {
        0 => random_hermitian(r, n),
        1 => {
            let rk = r.random_range(1..=n);
            random_psd(r, n, rk)
        }
        _ => {
            let g: H = random_psd(r, n, n);
            let shift = lambda_min(&g)? + r.random_range(-0.05..0.05);
            &g - &H::scalar(n, shift)
        }
    };
    let k = r.random_range(1..n);
    let vs: Vec<CVector<f64>> = (0..k)
        .map(|_| random_complex::<f64, _>(r, n, 1).column(0).into_owned())
        .collect();
    let h1 = Subspace::from_vectors(n, &vs, tol)?;
    let eig = spectral(&s)?;
    let by_spectrum = eig.min() >= -1e-9 * eig.max_abs();
    Ok((albert_is_psd(&s, &h1, tol)?.is_psd == by_spectrum, 0.0))
}

fn mt_family(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let a: H = random_hermitian(r, n);
    let b: H = random_hermitian(r, n);
    let t = random_invertible::<f64, _>(r, n);
    let set = MatrixSet::new(vec![a.clone(), b.clone()])?;
    let m = mlb_mt(&a, &b, &t, tol)?;
    let ok = is_lower_bound(&m, &set, tol)? && certify_maximal(&m, &set, tol)?.is_maximal;
    // M_T(A, B) = Tᴴ · M_I(T^{-ᴴ}AT^{-1}, T^{-ᴴ}BT^{-1}) · T
    let ti = t.clone().try_inverse().expect("random_invertible is invertible");
    let inner = mlb_mt(
        &a.congruence(&ti),
        &b.congruence(&ti),
        &loewner_core::CMatrix::identity(n, n),
        tol,
    )?;
    let residual = inner.congruence(&t).distance(&m) / (a.norm() + b.norm());
    Ok((ok && residual <= 1e-8, residual))
}

fn commuting_routes(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let k = r.random_range(2..=5);
    let set = MatrixSet::new(random_commuting_family(r, n, k, 0.3))?;
    let scale = set.scale();
    let rep = commuting_glb(&set, tol)?;
    let comm = set.iter().map(|a| a.commutator_norm(&rep.glb)).fold(0.0, f64::max);
    let gap = rep.route_gap / scale;
    let ok = rep.routes_agree && gap <= 1e-10 && comm <= 1e-9 * scale && is_lower_bound(&rep.glb, &set, tol)?;
    Ok((ok, gap))
}

fn positive_mlb(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let k = r.random_range(2..=5);
    let members: Vec<H> = (0..k)
        .map(|_| {
            let rk = r.random_range(1..=n);
            random_psd(r, n, rk)
        })
        .collect();
    let set = MatrixSet::new(members)?;
    let scale = set.scale();
    let m = positive_maximal_lb(&set, tol)?;
    let neg = -lambda_min(&m)? / scale;
    let ok = neg <= 1e-9 && certify_maximal(&m, &set, tol)?.is_maximal;
    Ok((ok, neg))
}

fn parallel_rank(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let ra = r.random_range(1..=n);
    let rb = r.random_range(1..=n);
    let a: H = random_psd(r, n, ra);
    let b: H = if r.random_bool(0.5) {
        random_psd(r, n, rb)
    } else {
        &a + &random_psd(r, n, rb)
    };
    let s = parallel_sum(&a, &b, tol)?;
    let (rs, _) = range_nullspace(&s, tol)?;
    let (ra, _) = range_nullspace(&a, tol)?;
    let (rb, _) = range_nullspace(&b, tol)?;
    let common = subspace_intersect(&[ra, rb], tol)?;
    Ok((rs.dim() == common.dim(), 0.0))
}

fn contraction_projection(r: &mut ChaCha8Rng, n: usize, tol: &Tolerances<f64>) -> CoreResult<(bool, f64)> {
    let k = r.random_range(1..n);
    let a: H = random_contraction(r, n);
    let u = random_unitary::<f64, _>(r, n);
    let w = u.columns(0, k).into_owned();
    let z = u.columns(k, n - k).into_owned();
    let p = HermitianMatrix::hermitize(&w * w.adjoint(), tol)?;
    // Shorted onto span(W) is the Schur complement with respect to span(Z).
    let h1 = Subspace::span(&z, tol)?;
    let shorted = schur_complement(&a, &h1, tol)?.shorted;
    let rep = positive_glb_family(&MatrixSet::new(vec![a, p])?, tol)?;
    match rep.glb {
        Some(g) => {
            let err = g.distance(&shorted);
            Ok((rep.exists && err <= 1e-9, err))
        }
        None => Ok((false, f64::INFINITY)),
    }
}
