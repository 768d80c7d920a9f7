//! Randomized invariants. proptest picks seeds and sizes; matrices are drawn
//! from seeded generators so failures shrink to a reproducible seed.

use loewner_core::random::{
    random_commuting_family, random_complex, random_contraction, random_hermitian, random_invertible, random_psd,
    random_unit_vector, random_unitary,
};
use loewner_core::{
    albert_is_psd, ando_limit, certify_maximal, commuting_glb, compare, distinct_maximals, extend_to_maximal,
    finite_infimum, is_lower_bound, loewner_leq, maximal_in_lu, mlb_mt, parallel_sum, positive_glb_family,
    range_nullspace, schur_complement, spectral, stott_mx, subspace_intersect, subspace_sum, two_op_positive_glb,
    CMatrix, Error, HermitianMatrix, MatrixSet, OrderRelation, StottParam, Subspace, Tolerances,
};
use nalgebra::SymmetricEigen;
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type H = HermitianMatrix<f64>;

fn tol() -> Tolerances<f64> {
    Tolerances::default()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fro(m: &CMatrix<f64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn lambda_min(m: &CMatrix<f64>) -> f64 {
    SymmetricEigen::new(m.clone()).eigenvalues.min()
}

fn random_subspace(r: &mut ChaCha8Rng, n: usize, k: usize) -> Subspace<f64> {
    let cols = random_complex::<f64, _>(r, n, k);
    Subspace::span(&cols, &tol()).unwrap()
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn spectral_reconstruction(seed: u64, n in 1usize..7) {
        let s: H = random_hermitian(&mut rng(seed), n);
        let e = spectral(&s).unwrap();
        prop_assert!(e.reconstruct().distance(&s) <= tol().eq_rel * (1.0 + e.max_abs()));
    }

    #[test]
    fn square_root_and_absolute_value(seed: u64, n in 1usize..7) {
        let mut r = rng(seed);
        let rk = r.random_range(1..=n);
        let p: H = random_psd(&mut r, n, rk);
        let root = p.sqrt_psd(&tol()).unwrap();
        prop_assert!(fro(&(root.as_matrix() * root.as_matrix() - p.as_matrix())) <= 1e-10 * (1.0 + p.norm()));
        let s: H = random_hermitian(&mut r, n);
        let a = s.abs(&tol()).unwrap();
        let sq = s.as_matrix() * s.as_matrix();
        prop_assert!(fro(&(a.as_matrix() * a.as_matrix() - sq)) <= 1e-10 * (1.0 + s.norm() * s.norm()));
    }

    #[test]
    fn moore_penrose_identities(seed: u64, n in 2usize..7) {
        let mut r = rng(seed);
        let rk = r.random_range(1..n);
        let s: H = random_psd(&mut r, n, rk);
        let p = s.pinv(&tol()).unwrap();
        let (a, b) = (s.as_matrix(), p.as_matrix());
        let bound = 1e-9 * (1.0 + s.norm() + p.norm());
        prop_assert!(fro(&(a * b * a - a)) <= bound);
        prop_assert!(fro(&(b * a * b - b)) <= bound);
        let ab = a * b;
        let ba = b * a;
        prop_assert!(fro(&(&ab - ab.adjoint())) <= bound);
        prop_assert!(fro(&(&ba - ba.adjoint())) <= bound);
    }

    #[test]
    fn range_and_null_dimensions_add_up(seed: u64, n in 1usize..7) {
        let mut r = rng(seed);
        let rk = r.random_range(0..=n);
        let s: H = random_psd(&mut r, n, rk);
        let (range, null) = range_nullspace(&s, &tol()).unwrap();
        prop_assert_eq!(range.dim() + null.dim(), n);
        if rk > 0 { prop_assert_eq!(range.dim(), rk); }
    }

    #[test]
    fn loewner_order_axioms(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let a: H = random_hermitian(&mut r, n);
        prop_assert!(loewner_leq(&a, &a, &tol()).unwrap());
        let b = &a + &random_psd(&mut r, n, n);
        let c = &b + &random_psd(&mut r, n, 1);
        prop_assert!(loewner_leq(&a, &b, &tol()).unwrap());
        prop_assert!(loewner_leq(&b, &c, &tol()).unwrap());
        prop_assert!(loewner_leq(&a, &c, &tol()).unwrap());
        prop_assert!(!loewner_leq(&b, &a, &tol()).unwrap());
        let nudged = &a + &H::identity(n).scale(1e-13);
        prop_assert_eq!(compare(&a, &nudged, &tol()).unwrap(), OrderRelation::Equal);
    }

    #[test]
    fn intersection_dimension_formula(seed: u64, n in 2usize..7) {
        let mut r = rng(seed);
        let ku = r.random_range(1..=n);
        let kv = r.random_range(1..=n);
        let u = random_subspace(&mut r, n, ku);
        let v = if r.random_bool(0.3) {
            // Force a shared direction.
            let mut cols = random_complex::<f64, _>(&mut r, n, kv);
            cols.set_column(0, &u.basis().column(0));
            Subspace::span(&cols, &tol()).unwrap()
        } else {
            random_subspace(&mut r, n, kv)
        };
        let cap = subspace_intersect(&[u.clone(), v.clone()], &tol()).unwrap();
        let sum = subspace_sum(&[u.clone(), v.clone()], &tol()).unwrap();
        prop_assert_eq!(cap.dim(), u.dim() + v.dim() - sum.dim());
    }

    #[test]
    fn albert_matches_spectrum(seed: u64, n in 2usize..7) {
        let mut r = rng(seed);
        let s: H = if r.random_bool(0.5) {
            let rk = r.random_range(1..=n);
            random_psd(&mut r, n, rk)
        } else {
            random_hermitian(&mut r, n)
        };
        let k = r.random_range(1..n);
        let h1 = random_subspace(&mut r, n, k);
        let spectral_psd = lambda_min(s.as_matrix()) >= -1e-9 * (1.0 + s.norm());
        prop_assert_eq!(albert_is_psd(&s, &h1, &tol()).unwrap().is_psd, spectral_psd);
    }

    #[test]
    fn shorted_operator_bounds(seed: u64, n in 2usize..7) {
        let mut r = rng(seed);
        let rk = r.random_range(1..=n);
        let s: H = random_psd(&mut r, n, rk);
        let k = r.random_range(1..n);
        let h1 = random_subspace(&mut r, n, k);
        let c = schur_complement(&s, &h1, &tol()).unwrap();
        prop_assert!(lambda_min(c.shorted.as_matrix()) >= -1e-9 * (1.0 + s.norm()));
        prop_assert!(loewner_leq(&c.shorted, &s, &tol()).unwrap());

        let contraction: H = random_contraction(&mut r, n);
        let cc = schur_complement(&contraction, &h1, &tol()).unwrap();
        let e = spectral(&cc.complement).unwrap();
        prop_assert!(e.min() >= -1e-9 && e.max() <= 1.0 + 1e-9);
    }

    #[test]
    fn schur_complement_ignores_basis_inside_h1(seed: u64, n in 2usize..7) {
        let mut r = rng(seed);
        let s: H = random_psd(&mut r, n, n);
        let k = r.random_range(1..n);
        let h1 = random_subspace(&mut r, n, k);
        let w = random_unitary::<f64, _>(&mut r, k);
        let rotated = Subspace::span(&(h1.basis() * w), &tol()).unwrap();
        let a = schur_complement(&s, &h1, &tol()).unwrap();
        let b = schur_complement(&s, &rotated, &tol()).unwrap();
        prop_assert!(a.shorted.distance(&b.shorted) <= 1e-10 * (1.0 + s.norm()));
    }

    #[test]
    fn parallel_sum_commutes_and_associates(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let a: H = random_psd(&mut r, n, n);
        let b: H = random_psd(&mut r, n, n);
        let c: H = random_psd(&mut r, n, n);
        let scale = a.norm() + b.norm() + c.norm();
        let ab = parallel_sum(&a, &b, &tol()).unwrap();
        prop_assert!(ab.distance(&parallel_sum(&b, &a, &tol()).unwrap()) <= 1e-9 * scale);
        let left = parallel_sum(&ab, &c, &tol()).unwrap();
        let right = parallel_sum(&a, &parallel_sum(&b, &c, &tol()).unwrap(), &tol()).unwrap();
        prop_assert!(left.distance(&right) <= 1e-9 * scale);
        prop_assert!(loewner_leq(&ab, &a, &tol()).unwrap() && loewner_leq(&ab, &b, &tol()).unwrap());
    }

    #[test]
    fn ando_limit_bounds(seed: u64, n in 2usize..6) {
        let mut r = rng(seed);
        let ra = r.random_range(1..=n);
        let a: H = random_psd(&mut r, n, ra);
        let inside = r.random_bool(0.5);
        let b: H = if inside {
            // R(B) ⊆ R(A): B = A^{1/2} C A^{1/2}.
            let root = a.sqrt_psd(&tol()).unwrap();
            random_psd::<f64, _>(&mut r, n, n).congruence(root.as_matrix())
        } else {
            random_psd(&mut r, n, n)
        };
        let limit = ando_limit(&a, &b, &tol()).unwrap();
        prop_assert!(loewner_leq(&limit, &b, &tol()).unwrap());
        let equal = limit.distance(&b) <= 1e-8 * (1.0 + b.norm());
        prop_assert_eq!(equal, inside || ra == n);
    }

    #[test]
    fn full_rank_pairs_have_glb_iff_comparable(seed: u64, n in 1usize..6) {
        let mut r = rng(seed);
        let a: H = random_psd(&mut r, n, n);
        let b: H = if r.random_bool(0.5) { &a + &random_psd(&mut r, n, 1) } else { random_psd(&mut r, n, n) };
        let res = two_op_positive_glb(&a, &b, &tol()).unwrap();
        prop_assert_eq!(res.exists, compare(&a, &b, &tol()).unwrap().is_comparable());
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn mt_shift_equivariance(seed: u64, n in 2usize..6) {
        let mut r = rng(seed);
        let a: H = random_hermitian(&mut r, n);
        let b: H = random_hermitian(&mut r, n);
        let s: H = random_hermitian(&mut r, n);
        let t = random_invertible::<f64, _>(&mut r, n);
        let lhs = mlb_mt(&(&a + &s), &(&b + &s), &t, &tol()).unwrap();
        let rhs = &s + &mlb_mt(&a, &b, &t, &tol()).unwrap();
        prop_assert!(lhs.distance(&rhs) <= 1e-9 * (1.0 + a.norm() + b.norm() + s.norm()));
    }

    #[test]
    fn sign_of_form_on_contact_spaces(seed: u64, n in 2usize..6) {
        // For maximal M of {A, 0} with A invertible: (Au,u) < 0 on N(A − M)
        // and (Au,u) > 0 on N(M).
        let mut r = rng(seed);
        let a: H = random_hermitian(&mut r, n);
        let zero = H::zeros(n);
        let t = random_invertible::<f64, _>(&mut r, n);
        let m = mlb_mt(&a, &zero, &t, &tol()).unwrap();
        let (_, touch_a) = range_nullspace(&(&a - &m), &tol()).unwrap();
        let (_, touch_0) = range_nullspace(&m, &tol()).unwrap();
        for (space, sign) in [(touch_a, -1.0), (touch_0, 1.0)] {
            if space.dim() == 0 { continue; }
            for _ in 0..8 {
                let c = random_complex::<f64, _>(&mut r, space.dim(), 1);
                let u = (space.basis() * c).normalize();
                prop_assert!(sign * a.quadratic_form(&u.column(0).into_owned()) > 0.0);
            }
        }
    }

    #[test]
    fn stott_null_spaces_are_complementary(seed: u64, p in 1usize..5, q in 1usize..5) {
        let mut r = rng(seed);
        let x = StottParam::new(random_complex::<f64, _>(&mut r, p, q)).unwrap();
        let (sx, mx) = stott_mx(&x, &tol()).unwrap();
        let (_, ns) = range_nullspace(&sx, &tol()).unwrap();
        let (_, nm) = range_nullspace(&mx, &tol()).unwrap();
        prop_assert!(ns.dim() >= q && nm.dim() >= p);
        prop_assert_eq!(subspace_intersect(&[ns.clone(), nm.clone()], &tol()).unwrap().dim(), 0);
        prop_assert_eq!(subspace_sum(&[ns, nm], &tol()).unwrap().dim(), p + q);
    }

    #[test]
    fn certificate_criteria_agree(seed: u64, n in 2usize..6, k in 1usize..5) {
        let mut r = rng(seed);
        let members: Vec<H> = (0..k).map(|_| random_hermitian(&mut r, n)).collect();
        let set = MatrixSet::new(members).unwrap();
        let m = loewner_core::maximal_lower_bound(&set, &tol()).unwrap();
        let rk = r.random_range(1..=n);
        let below = &m - &random_psd(&mut r, n, rk).scale(0.1);
        for cand in [&m, &below] {
            let c = certify_maximal(cand, &set, &tol()).unwrap();
            prop_assert!(c.criteria_agree(), "{c:?}");
        }
        prop_assert!(certify_maximal(&m, &set, &tol()).unwrap().is_maximal);
        prop_assert!(!certify_maximal(&below, &set, &tol()).unwrap().is_maximal);
    }

    #[test]
    fn extension_dominates_and_is_maximal(seed: u64, n in 2usize..6, k in 2usize..5) {
        let mut r = rng(seed);
        let members: Vec<H> = (0..k).map(|_| random_hermitian(&mut r, n)).collect();
        let set = MatrixSet::new(members).unwrap();
        let floor = set.iter().map(|a| spectral(a).unwrap().min()).fold(f64::INFINITY, f64::min);
        let l = &H::scalar(n, floor) - &random_psd(&mut r, n, 1);
        let m = extend_to_maximal(&l, &set, &tol()).unwrap();
        prop_assert!(loewner_leq(&l, &m, &tol()).unwrap());
        prop_assert!(certify_maximal(&m, &set, &tol()).unwrap().is_maximal);
    }

    #[test]
    fn constrained_maximal_bound(seed: u64, n in 2usize..6, k in 1usize..5) {
        let mut r = rng(seed);
        let members: Vec<H> = (0..k).map(|_| random_hermitian(&mut r, n)).collect();
        let set = MatrixSet::new(members).unwrap();
        let u = random_unit_vector::<f64, _>(&mut r, n);
        let alpha = set.iter().map(|a| a.quadratic_form(&u)).fold(f64::INFINITY, f64::min);
        let m = maximal_in_lu(&set, &u, &tol()).unwrap().expect("a single attaining member satisfies the condition");
        prop_assert!((m.quadratic_form(&u) - alpha).abs() <= 1e-9 * (1.0 + set.scale()));
        prop_assert!(is_lower_bound(&m, &set, &tol()).unwrap());
        prop_assert!(certify_maximal(&m, &set, &tol()).unwrap().is_maximal);
    }

    #[test]
    fn commuting_contact_spaces_are_orthogonal(seed: u64, n in 2usize..7, k in 2usize..5) {
        let mut r = rng(seed);
        let set = MatrixSet::new(random_commuting_family::<f64, _>(&mut r, n, k, 0.4)).unwrap();
        let g = commuting_glb(&set, &tol()).unwrap().glb;
        let nulls: Vec<Subspace<f64>> = set.iter().map(|a| range_nullspace(&(a - &g), &tol()).unwrap().1).collect();
        for j in 0..k {
            for l in j + 1..k {
                let shared = subspace_intersect(&[nulls[j].clone(), nulls[l].clone()], &tol()).unwrap();
                let pj = nulls[j].projector().as_matrix() - shared.projector().as_matrix();
                let pl = nulls[l].projector().as_matrix() - shared.projector().as_matrix();
                prop_assert!(fro(&(pj * pl)) <= 1e-8);
            }
        }
    }

    #[test]
    fn full_rank_positive_glb_matches_infimum(seed: u64, n in 1usize..5, k in 2usize..5) {
        let mut r = rng(seed);
        let base: H = random_psd(&mut r, n, n);
        let members: Vec<H> = (0..k)
            .map(|_| if r.random_bool(0.5) { &base + &random_psd(&mut r, n, n) } else { random_psd(&mut r, n, n) })
            .collect();
        let set = MatrixSet::new(members).unwrap();
        let rep = positive_glb_family(&set, &tol()).unwrap();
        let inf = finite_infimum(&set, &tol()).unwrap();
        prop_assert_eq!(rep.exists, inf.exists);
        if let (Some(g), Some(i)) = (rep.glb, inf.infimum) {
            prop_assert!(g.distance(&i) <= 1e-9 * (1.0 + set.scale()));
        }
    }

    #[test]
    fn infimum_excludes_distinct_maximals(seed: u64, n in 1usize..5) {
        let mut r = rng(seed);
        let a: H = random_hermitian(&mut r, n);
        let b = if r.random_bool(0.5) { &a + &random_psd(&mut r, n, 1) } else { random_hermitian(&mut r, n) };
        let set = MatrixSet::new(vec![a, b]).unwrap();
        let out = distinct_maximals(&set, 2, &tol());
        if finite_infimum(&set, &tol()).unwrap().exists {
            let rejected = matches!(out, Err(Error::InfimumExists { .. }));
            prop_assert!(rejected);
        } else {
            let ms = out.unwrap();
            prop_assert!(ms[0].distance(&ms[1]) > 1e-8 * set.scale());
        }
    }
}

#[test]
fn single_precision_smoke() {
    let tol = Tolerances::<f32>::default();
    let set = loewner_core::fixtures::commutant_scalar_pair::<f32>().set;
    let m = loewner_core::positive_maximal_lb(&set, &tol).unwrap();
    assert!(m.distance(&HermitianMatrix::diag(&[0.5f32, 0.0])) < 1e-5);
    assert!(certify_maximal(&m, &set, &tol).unwrap().is_maximal);
    let r = finite_infimum(&set, &tol).unwrap();
    assert!(!r.exists);
    let mut g = rng(3);
    let a = random_psd::<f32, _>(&mut g, 3, 3);
    let b = random_psd::<f32, _>(&mut g, 3, 2);
    let s = parallel_sum(&a, &b, &tol).unwrap();
    assert_eq!(range_nullspace(&s, &tol).unwrap().0.dim(), 2);
    let _ = Complex::new(0f32, 0f32);
}
