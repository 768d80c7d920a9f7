//! Acceptance suite: each criterion prints one PASS/FAIL line with its
//! runtime and worst observed residual. Exits nonzero if any criterion fails.
//!
//! Oracles (eigenvalues, ranks, shorted operators, equivariance transports)
//! are computed here directly with nalgebra rather than through the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use loewner_core::fixtures;
use loewner_core::random::{
    random_complex, random_contraction, random_hermitian, random_invertible, random_psd, random_unitary,
};
use loewner_core::{
    albert_is_psd, ando_limit, certify_maximal, commutant_glb, commuting_glb, constrained_at_vector, distinct_maximals,
    finite_infimum, is_lower_bound, maximal_in_lu, mlb_mt, parallel_sum, positive_glb_family, positive_maximal_lb,
    range_nullspace, signature_matrix, stott_mx, stott_recover_x, two_op_positive_glb, CMatrix, CVector,
    HermitianMatrix, MatrixSet, StottParam, Subspace, Tolerances,
};
use nalgebra::SymmetricEigen;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type H = HermitianMatrix<f64>;
type C = Complex<f64>;

fn tol() -> Tolerances<f64> {
    Tolerances::default()
}

// ---------- oracles ----------

fn eigvals(m: &CMatrix<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn lambda_min(m: &CMatrix<f64>) -> f64 {
    eigvals(m)[0]
}

// Every matrix passed to these two is Hermitian, so |λ| are the singular
// values.
fn spectral_norm(m: &CMatrix<f64>) -> f64 {
    eigvals(m).iter().fold(0.0, |a, x| a.max(x.abs()))
}

fn rank(m: &CMatrix<f64>, cutoff: f64) -> usize {
    eigvals(m).iter().filter(|x| x.abs() > cutoff).count()
}

fn fro(m: &CMatrix<f64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn herm(m: CMatrix<f64>) -> H {
    H::hermitize(m, &tol()).expect("oracle matrix is Hermitian")
}

/// Hermitian square root of a PSD matrix by eigendecomposition.
fn oracle_sqrt(m: &CMatrix<f64>) -> CMatrix<f64> {
    let e = SymmetricEigen::new(m.clone());
    let d = e.eigenvalues.map(|x| C::new(x.max(0.0).sqrt(), 0.0));
    &e.eigenvectors * CMatrix::from_diagonal(&d) * e.eigenvectors.adjoint()
}

fn oracle_abs(m: &CMatrix<f64>) -> CMatrix<f64> {
    let e = SymmetricEigen::new(m.clone());
    let d = e.eigenvalues.map(|x| C::new(x.abs(), 0.0));
    &e.eigenvectors * CMatrix::from_diagonal(&d) * e.eigenvectors.adjoint()
}

fn is_lb_oracle(l: &CMatrix<f64>, set: &MatrixSet<f64>, slack: f64) -> bool {
    set.iter().all(|a| lambda_min(&(a.as_matrix() - l)) >= -slack)
}

// ---------- harness ----------

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(id: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let pass = out.pass && in_time;
    let budget = limit
        .map(|l| format!(" (budget {:.1}s)", l.as_secs_f64()))
        .unwrap_or_default();
    println!(
        "criterion {id:>2} {:<4} {name}: {} [{:.3}s{budget}]",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64()
    );
    pass
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------- criteria ----------

fn commutant_scalar_pair() -> Outcome {
    let ex = fixtures::commutant_scalar_pair::<f64>().set;
    let m = positive_maximal_lb(&ex, &tol()).unwrap();
    let want = H::diag(&[0.5, 0.0]);
    let err = m.distance(&want);
    let commuting = commutant_glb(&ex, &tol()).unwrap();
    let zero_cert = certify_maximal(&commuting.glb, &ex, &tol()).unwrap();
    let m_cert = certify_maximal(&m, &ex, &tol()).unwrap();
    let pass = err <= 1e-12
        && commuting.scalar_only
        && commuting.glb.norm() <= 1e-12
        && zero_cert.is_lower_bound
        && !zero_cert.is_maximal
        && m_cert.is_maximal;
    Outcome {
        pass,
        detail: format!(
            "|M - diag(1/2,0)| = {err:.1e}; commuting glb norm {:.1e}, scalar commutant {}, 0 maximal: {}",
            commuting.glb.norm(),
            commuting.scalar_only,
            zero_cert.is_maximal
        ),
    }
}

fn anti_lattice() -> Outcome {
    let mut r = rng(0xa11);
    let mut ok = 0;
    let trials = 500;
    let mut min_sep = f64::INFINITY;
    let mut generated = 0;
    while generated < trials {
        let n = r.random_range(2..=5);
        let a: H = random_hermitian(&mut r, n);
        let b: H = random_hermitian(&mut r, n);
        let d = eigvals((&a - &b).as_matrix());
        if d[0] >= 0.0 || d[n - 1] <= 0.0 {
            continue;
        }
        generated += 1;
        let set = MatrixSet::new(vec![a.clone(), b.clone()]).unwrap();
        let scale = set.scale();
        if finite_infimum(&set, &tol()).unwrap().exists {
            continue;
        }
        let Ok(ms) = distinct_maximals(&set, 3, &tol()) else {
            continue;
        };
        let certified = ms.iter().all(|m| {
            is_lb_oracle(m.as_matrix(), &set, 1e-9 * (1.0 + scale))
                && certify_maximal(m, &set, &tol()).unwrap().is_maximal
        });
        let mut sep = f64::INFINITY;
        for i in 0..3 {
            for j in i + 1..3 {
                sep = sep.min(ms[i].distance(&ms[j]) / scale);
            }
        }
        min_sep = min_sep.min(sep);
        if certified && sep > 1e-6 {
            ok += 1;
        }
    }
    Outcome {
        pass: ok == trials,
        detail: format!("{ok}/{trials} pairs without infimum and 3 distinct certified maximal bounds; min separation {min_sep:.2e}·scale"),
    }
}

fn stott_bijection() -> Outcome {
    let mut r = rng(0x5707);
    let trials = 200;
    let mut worst: f64 = 0.0;
    let mut certified = 0;
    for _ in 0..trials {
        let p = r.random_range(1..=4);
        let q = r.random_range(1..=4);
        let x = StottParam::new(random_complex::<f64, _>(&mut r, p, q)).unwrap();
        let (_, mx) = stott_mx(&x, &tol()).unwrap();
        let pair = MatrixSet::new(vec![signature_matrix(p, q), H::zeros(p + q)]).unwrap();
        if certify_maximal(&mx, &pair, &tol()).unwrap().is_maximal {
            certified += 1;
        }
        match stott_recover_x(&mx, p, q, &tol()) {
            Ok(back) => {
                let err = (&back.x - &x.x).iter().map(|z| z.norm()).fold(0.0, f64::max);
                worst = worst.max(err);
            }
            Err(_) => worst = f64::INFINITY,
        }
    }
    Outcome {
        pass: worst <= 1e-8 && certified == trials,
        detail: format!("max |X - X'| = {worst:.2e}; {certified}/{trials} M(X) certified maximal for {{J, 0}}"),
    }
}

fn mt_family() -> Outcome {
    let mut r = rng(0x3717);
    let trials = 300;
    let (mut certified, mut worst_cong, mut worst_polar) = (0, 0.0f64, 0.0f64);
    for _ in 0..trials {
        let n = r.random_range(2..=6);
        let a: H = random_hermitian(&mut r, n);
        let b: H = random_hermitian(&mut r, n);
        let t = random_invertible::<f64, _>(&mut r, n);
        let set = MatrixSet::new(vec![a.clone(), b.clone()]).unwrap();
        let scale = a.norm() + b.norm();
        let m = mlb_mt(&a, &b, &t, &tol()).unwrap();
        if is_lower_bound(&m, &set, &tol()).unwrap() && certify_maximal(&m, &set, &tol()).unwrap().is_maximal {
            certified += 1;
        }
        // Transport: Tᴴ · ½(A' + B' − |A' − B'|) · T with A' = T^{−ᴴ} A T^{−1}.
        let ti = t.clone().try_inverse().unwrap();
        let ap = ti.adjoint() * a.as_matrix() * &ti;
        let bp = ti.adjoint() * b.as_matrix() * &ti;
        let inner = (&ap + &bp - oracle_abs(&(&ap - &bp))) * C::new(0.5, 0.0);
        let transported = t.adjoint() * inner * &t;
        worst_cong = worst_cong.max(fro(&(m.as_matrix() - transported)) / scale);
        let polar = oracle_sqrt(&(t.adjoint() * &t));
        let mp = mlb_mt(&a, &b, &polar, &tol()).unwrap();
        worst_polar = worst_polar.max(m.distance(&mp) / scale);
    }
    Outcome {
        pass: certified == trials && worst_cong <= 1e-8 && worst_polar <= 1e-8,
        detail: format!(
            "{certified}/{trials} certified; congruence residual {worst_cong:.2e}, polar residual {worst_polar:.2e} (relative)"
        ),
    }
}

fn commuting_routes() -> Outcome {
    let mut r = rng(0xc0);
    let trials = 200;
    let (mut ok, mut worst_gap, mut worst_comm) = (0, 0.0f64, 0.0f64);
    let mut dominated_all = true;
    for _ in 0..trials {
        let n = r.random_range(2..=6);
        let k = r.random_range(2..=5);
        let u = random_unitary::<f64, _>(&mut r, n);
        let diags: Vec<Vec<f64>> = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if r.random_bool(0.3) {
                            r.random_range(-2i32..=2) as f64
                        } else {
                            r.random_range(-3.0..3.0)
                        }
                    })
                    .collect()
            })
            .collect();
        let members: Vec<H> = diags.iter().map(|d| H::diag(d).conjugate(&u)).collect();
        let set = MatrixSet::new(members).unwrap();
        let scale = set.scale();
        let rep = commuting_glb(&set, &tol()).unwrap();
        let gap = rep.route_gap / scale;
        worst_gap = worst_gap.max(gap);
        let g = &rep.glb;
        let comm = set.iter().map(|a| a.commutator_norm(g)).fold(0.0, f64::max) / scale;
        worst_comm = worst_comm.max(comm);
        let entry_min: Vec<f64> = (0..n)
            .map(|i| diags.iter().map(|d| d[i]).fold(f64::INFINITY, f64::min))
            .collect();
        let oracle = H::diag(&entry_min).conjugate(&u);
        let lower = is_lb_oracle(g.as_matrix(), &set, 1e-9 * (1.0 + scale));
        let mut dominated = true;
        for _ in 0..50 {
            let cand: Vec<f64> = entry_min.iter().map(|m| m - r.random_range(0.0..1.0)).collect();
            let l = H::diag(&cand).conjugate(&u);
            if lambda_min(&(g.as_matrix() - l.as_matrix())) < -1e-9 * (1.0 + scale) {
                dominated = false;
            }
        }
        dominated_all &= dominated;
        if gap <= 1e-10 && comm <= 1e-9 && lower && dominated && g.distance(&oracle) <= 1e-9 * scale {
            ok += 1;
        }
    }
    Outcome {
        pass: ok == trials,
        detail: format!(
            "{ok}/{trials}; worst route gap {worst_gap:.2e}, worst commutator {worst_comm:.2e} (relative), candidates dominated: {dominated_all}"
        ),
    }
}

fn recursive_mlb() -> Outcome {
    let mut r = rng(0x411);
    let trials = 500;
    let mut ok = 0;
    let mut worst_psd: f64 = 0.0;
    let mut escapes = 0;
    for _ in 0..trials {
        let n = r.random_range(2..=6);
        let k = r.random_range(2..=5);
        let members: Vec<H> = (0..k)
            .map(|_| {
                let rk = r.random_range(1..=n);
                random_psd(&mut r, n, rk)
            })
            .collect();
        let set = MatrixSet::new(members).unwrap();
        let scale = set.scale();
        let Ok(m) = positive_maximal_lb(&set, &tol()) else {
            continue;
        };
        let lmin = lambda_min(m.as_matrix());
        worst_psd = worst_psd.min(lmin / scale);
        let psd = lmin >= -1e-9 * scale;
        let lower = is_lb_oracle(m.as_matrix(), &set, 1e-9 * (1.0 + scale));
        let cert = certify_maximal(&m, &set, &tol()).unwrap().is_maximal;
        let mut survived = true;
        for _ in 0..334 {
            let rk = r.random_range(1..=n);
            let p: H = random_psd(&mut r, n, rk);
            let p = p.scale(scale / p.trace());
            for t in [1e-3, 1e-2, 1e-1] {
                let lifted = m.as_matrix() + p.as_matrix() * C::new(t, 0.0);
                if is_lb_oracle(&lifted, &set, 0.0) {
                    survived = false;
                }
            }
        }
        if !survived {
            escapes += 1;
        }
        if psd && lower && cert && survived {
            ok += 1;
        }
    }
    Outcome {
        pass: ok == trials,
        detail: format!(
            "{ok}/{trials} PSD, lower bound, certified, non-dominated; worst lambda_min {worst_psd:.2e}·scale; {escapes} instances dominated"
        ),
    }
}

fn random_split(r: &mut ChaCha8Rng, n: usize) -> Subspace<f64> {
    let k = r.random_range(1..n);
    let vs: Vec<CVector<f64>> = (0..k)
        .map(|_| random_complex::<f64, _>(r, n, 1).column(0).into_owned())
        .collect();
    Subspace::from_vectors(n, &vs, &tol()).unwrap()
}

fn albert_vs_spectral() -> Outcome {
    let mut r = rng(0xa1be);
    let trials = 1000;
    let mut agree = 0;
    let mut psd_count = 0;
    for i in 0..trials {
        let n = r.random_range(2..=6);
        let s: H = match i % 4 {
            0 => random_hermitian(&mut r, n),
            1 => {
                let rk = r.random_range(1..=n);
                random_psd(&mut r, n, rk)
            }
            2 => {
                let g: H = random_psd(&mut r, n, n);
                let shift = lambda_min(g.as_matrix()) + r.random_range(-0.05..0.05);
                &g - &H::scalar(n, shift)
            }
            _ => {
                let rk = r.random_range(1..n);
                let g: H = random_psd(&mut r, n, rk);
                let v = random_complex::<f64, _>(&mut r, n, 1).column(0).normalize();
                &g - &H::rank_one(&v).scale(0.01)
            }
        };
        let h1 = random_split(&mut r, n);
        let sigma = spectral_norm(s.as_matrix());
        let spectral_verdict = lambda_min(s.as_matrix()) >= -1e-9 * sigma;
        psd_count += spectral_verdict as usize;
        let v = albert_is_psd(&s, &h1, &tol()).unwrap();
        if v.is_psd == spectral_verdict {
            agree += 1;
        }
    }
    Outcome {
        pass: agree == trials,
        detail: format!("{agree}/{trials} verdicts agree ({psd_count} PSD by spectrum)"),
    }
}

fn parallel_and_ando() -> Outcome {
    let mut r = rng(0x9a7);
    let mut worst_scalar: f64 = 0.0;
    for _ in 0..300 {
        let a = r.random_range(0.01..10.0);
        let b = r.random_range(0.01..10.0);
        let s = parallel_sum(&H::diag(&[a]), &H::diag(&[b]), &tol()).unwrap();
        worst_scalar = worst_scalar.max((s.entry(0, 0).re - a * b / (a + b)).abs());
    }
    let trials = 300;
    let (mut rank_ok, mut worst_ando, mut glb_agree) = (0, 0.0f64, 0);
    for i in 0..trials {
        let n = r.random_range(2..=6);
        let ra = r.random_range(1..=n);
        let rb = r.random_range(1..=n);
        let a: H = random_psd(&mut r, n, ra);
        let b: H = match i % 3 {
            0 => random_psd(&mut r, n, rb),
            1 => a.scale(r.random_range(0.2..0.9)),
            _ => &a + &random_psd(&mut r, n, rb),
        };
        let scale = a.norm().max(b.norm());
        let s = parallel_sum(&a, &b, &tol()).unwrap();
        let (range, _) = range_nullspace(&s, &tol()).unwrap();
        // dim(R(A) ∩ R(B)) = rank A + rank B − rank(A + B) for PSD A, B,
        // since R(A + B) = R(A) + R(B).
        let cut = 1e-9 * scale;
        let inter = rank(a.as_matrix(), cut) + rank(b.as_matrix(), cut) - rank((&a + &b).as_matrix(), cut);
        let s_rank = if s.norm() <= cut { 0 } else { range.dim() };
        if s_rank == inter {
            rank_ok += 1;
        }
        let lhs = ando_limit(&s, &b, &tol()).unwrap();
        let rhs = ando_limit(&a, &b, &tol()).unwrap();
        worst_ando = worst_ando.max(lhs.distance(&rhs) / scale);
        let two = two_op_positive_glb(&a, &b, &tol()).unwrap();
        let fam = positive_glb_family(&MatrixSet::new(vec![a.clone(), b.clone()]).unwrap(), &tol()).unwrap();
        let same = match (&two.glb, &fam.glb) {
            (Some(x), Some(y)) => x.distance(y) <= 1e-9 * scale,
            (None, None) => true,
            _ => false,
        };
        if same && two.exists == fam.exists {
            glb_agree += 1;
        }
    }
    Outcome {
        pass: worst_scalar <= 1e-12 && rank_ok == trials && worst_ando <= 1e-9 && glb_agree == trials,
        detail: format!(
            "scalar err {worst_scalar:.1e}; rank identity {rank_ok}/{trials}; [A:B]B vs [A]B {worst_ando:.1e}; two-op vs family {glb_agree}/{trials}"
        ),
    }
}

fn contraction_projection() -> Outcome {
    let mut r = rng(0xc610);
    let trials = 100;
    let (mut ok, mut worst) = (0, 0.0f64);
    for _ in 0..trials {
        let n = r.random_range(2..=6);
        let k = r.random_range(1..n);
        let a: H = random_contraction(&mut r, n);
        let u = random_unitary::<f64, _>(&mut r, n);
        let w = u.columns(0, k).into_owned();
        let z = u.columns(k, n - k).into_owned();
        let p = herm(&w * w.adjoint());
        // Shorted operator of A onto span(W): W (A_ww − A_wz A_zz⁻¹ A_zw) Wᴴ.
        let am = a.as_matrix();
        let a_ww = w.adjoint() * am * &w;
        let a_wz = w.adjoint() * am * &z;
        let a_zz = z.adjoint() * am * &z;
        let compl = a_ww - &a_wz * a_zz.try_inverse().unwrap() * a_wz.adjoint();
        let shorted = &w * compl * w.adjoint();
        let rep = positive_glb_family(&MatrixSet::new(vec![a, p]).unwrap(), &tol()).unwrap();
        if let Some(g) = &rep.glb {
            let err = fro(&(g.as_matrix() - &shorted));
            worst = worst.max(err);
            if rep.exists && err <= 1e-9 {
                ok += 1;
            }
        } else {
            worst = f64::INFINITY;
        }
    }
    Outcome {
        pass: ok == trials,
        detail: format!("{ok}/{trials} exist and equal the shorted operator; worst error {worst:.2e}"),
    }
}

fn truncation_law() -> Outcome {
    let mut prev = f64::INFINITY;
    let mut worst: f64 = 0.0;
    let mut monotone = true;
    let mut all_exist = true;
    for n in [2usize, 5, 10, 50, 100] {
        let f = fixtures::sqrt_coupled_family::<f64>(n);
        let rep = positive_glb_family(&f.set, &tol()).unwrap();
        let Some(g) = rep.glb else {
            all_exist = false;
            continue;
        };
        worst = worst.max(g.distance(&H::diag(&[1.0 / n as f64, 0.0])));
        let top = g.entry(0, 0).re;
        monotone &= top < prev;
        prev = top;
    }
    Outcome {
        pass: all_exist && monotone && worst <= 1e-10,
        detail: format!("max |G_N - diag(1/N,0)| = {worst:.2e}; strictly decreasing: {monotone}"),
    }
}

fn constrained_emptiness() -> Outcome {
    let core = MatrixSet::new(vec![
        H::from_real(2, &[1., 1., 1., 1.]).unwrap(),
        H::from_real(2, &[1., 2., 2., 4.]).unwrap(),
    ])
    .unwrap();
    let mut e1 = CVector::zeros(2);
    e1[0] = C::new(1.0, 0.0);
    let c = constrained_at_vector(&core, &e1, &tol()).unwrap();
    let none = maximal_in_lu(&core, &e1, &tol()).unwrap().is_none();
    let full = fixtures::two_sided_coupled_family::<f64>(20).set;
    let cf = constrained_at_vector(&full, &e1, &tol()).unwrap();
    let pass = (c.alpha - 1.0).abs() < 1e-15
        && c.attaining == vec![0, 1]
        && !c.condition_holds
        && c.reduced_set.is_none()
        && none
        && !cf.condition_holds;
    Outcome {
        pass,
        detail: format!(
            "alpha = {}, attaining {:?}, Au = Bu holds: {}, constrained set empty: {}",
            c.alpha, c.attaining, c.condition_holds, none
        ),
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs_f64;
    let results = [
        run(
            1,
            "fixture ex6.2 (scalar commutant pair)",
            Some(secs(0.1)),
            commutant_scalar_pair,
        ),
        run(2, "anti-lattice on incomparable pairs", Some(secs(30.0)), anti_lattice),
        run(3, "Stott bijection round trip", Some(secs(10.0)), stott_bijection),
        run(4, "congruence family of maximal bounds", None, mt_family),
        run(5, "commuting glb two-route equality", None, commuting_routes),
        run(
            6,
            "recursive positive maximal lower bound",
            Some(secs(60.0)),
            recursive_mlb,
        ),
        run(7, "Albert criterion vs spectrum", None, albert_vs_spectral),
        run(8, "parallel sum and Ando limit", None, parallel_and_ando),
        run(9, "contraction and projection glb", None, contraction_projection),
        run(10, "fixture ex4.3 truncation law", None, truncation_law),
        run(11, "fixture ex4.8ii constrained emptiness", None, constrained_emptiness),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
