mod common;

use proptest::prelude::*;

use toric_deform::cohomology::h1_dimension;
use toric_deform::deform::{build_deformation, eta_map, eta_monomial, DeformationData};
use toric_deform::fan::standard::hirzebruch;
use toric_deform::hypersurf::is_liftable;
use toric_deform::intlin::{
    cokernel_map, determinant, gcd_slice, hermite_normal_form, kernel_basis, rank, smith_normal_form,
    solve_integer, IntMat, IntVec,
};
use toric_deform::scrolls::{normalize, path_to_rigid, ScrollSpec};
use toric_deform::triples::AdmissibleTriple;

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = IntMat> {
    prop::collection::vec(-range..=range, rows * cols).prop_map(move |data| {
        let rows_vec: Vec<Vec<i64>> = data.chunks(cols).map(|c| c.to_vec()).collect();
        IntMat::from_rows(cols, &rows_vec)
    })
}

fn shaped_matrix() -> impl Strategy<Value = IntMat> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

fn hirzebruch_deformation(n: i64, alpha: i64) -> DeformationData {
    let t = AdmissibleTriple { m: vec![-alpha, -1], rho: 1, component: vec![0] };
    build_deformation(&hirzebruch(n), &t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hnf_is_unimodular_transform(a in shaped_matrix()) {
        let (h, u) = hermite_normal_form(&a);
        prop_assert_eq!(u.mul(&a), h.clone());
        prop_assert_eq!(determinant(&u).abs(), 1);
        let mut last_pivot: Option<usize> = None;
        for i in 0..h.rows() {
            match h.row(i).iter().position(|&x| x != 0) {
                Some(p) => {
                    prop_assert!(last_pivot.map_or(true, |q| p > q));
                    prop_assert!(h.get(i, p) > 0);
                    for k in 0..i {
                        prop_assert!(h.get(k, p) >= 0 && h.get(k, p) < h.get(i, p));
                    }
                    last_pivot = Some(p);
                }
                None => {
                    for k in i..h.rows() {
                        prop_assert!(h.row(k).iter().all(|&x| x == 0));
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn snf_diagonal_and_divisible(a in shaped_matrix()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.s.clone());
        prop_assert_eq!(determinant(&s.u).abs(), 1);
        prop_assert_eq!(determinant(&s.v).abs(), 1);
        for i in 0..s.s.rows() {
            for j in 0..s.s.cols() {
                if i != j {
                    prop_assert_eq!(s.s.get(i, j), 0);
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), rank(&a));
        for w in f.windows(2) {
            prop_assert!(w[0] > 0 && w[1] % w[0] == 0);
        }
        let rows = a.to_rows();
        prop_assert_eq!(rank(&a), common::rational_rank(&rows));
    }

    #[test]
    fn kernel_is_saturated_basis(a in shaped_matrix()) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.len(), a.cols() - rank(&a));
        for v in &k {
            prop_assert!(a.mul_vec(v).iter().all(|&x| x == 0));
        }
        if !k.is_empty() {
            let km = IntMat::from_cols(a.cols(), &k);
            let f = smith_normal_form(&km).invariant_factors();
            prop_assert!(f.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn cokernel_kills_image(a in shaped_matrix()) {
        let c = cokernel_map(&a);
        prop_assert_eq!(c.free_rank(), a.rows() - rank(&a));
        let image = c.grading.mul(&a);
        for (i, &d) in c.invariants.iter().enumerate() {
            for &x in image.row(i) {
                if d == 0 {
                    prop_assert_eq!(x, 0);
                } else {
                    prop_assert_eq!(x.rem_euclid(d), 0);
                }
            }
        }
        let torsion: i64 = c.invariants.iter().filter(|&&d| d > 0).product();
        let f: i64 = smith_normal_form(&a).invariant_factors().iter().product();
        prop_assert_eq!(torsion, f);
    }

    #[test]
    fn integer_solve_round_trip(a in matrix(3, 4, 5), x in prop::collection::vec(-5i64..=5, 4)) {
        let b = a.mul_vec(&x);
        let y = solve_integer(&a, &b).expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn eta_agrees_with_nu(
        case in 0usize..4,
        x in prop::collection::vec(0i64..=20, 5),
    ) {
        let (n, alpha) = [(2, 1), (3, 1), (3, 2), (5, 2)][case];
        let d = hirzebruch_deformation(n, alpha);
        let eta = eta_map(&d);
        let mut exps = vec![0];
        exps.extend(&x);
        prop_assert_eq!(eta_monomial(&eta, &exps), Some(d.nu.mul_vec(&x)));
        exps[0] = 1;
        prop_assert_eq!(eta_monomial(&eta, &exps), None);
    }

    #[test]
    fn lifted_preimages_are_valid(case in 0usize..4, e in prop::collection::vec(0i64..=12, 4)) {
        let (n, alpha) = [(2, 1), (3, 1), (3, 2), (5, 2)][case];
        let d = hirzebruch_deformation(n, alpha);
        if let Some(x) = is_liftable(&d, &e) {
            prop_assert!(x.iter().all(|&v| v >= 0));
            prop_assert_eq!(d.nu.mul_vec(&x), e);
        }
    }

    #[test]
    fn h1_invariant_under_relabeling(
        n in 0i64..5,
        m in prop::collection::vec(-4i64..=4, 2),
        rays in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        cones in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let fan = hirzebruch(n);
        let g = fan.permuted(&rays, &cones);
        prop_assert_eq!(h1_dimension(&fan, &m).unwrap(), h1_dimension(&g, &m).unwrap());
    }

    #[test]
    fn scroll_paths_depend_on_sum_mod_n(a in prop::collection::vec(-3i64..=6, 2..5), shift in -3i64..=3) {
        let s = ScrollSpec::new(a.clone()).unwrap();
        let shifted = ScrollSpec::new(a.iter().map(|x| x + shift).collect()).unwrap();
        let end = |s: &ScrollSpec| path_to_rigid(s).last().map_or(normalize(s), |mv| normalize(&mv.to));
        prop_assert_eq!(end(&s), end(&shifted));
        prop_assert_eq!(end(&s), end(&normalize(&s)));
    }
}

/// Exhaustive comparison: with `nu >= 0` and every column nonzero, a
/// preimage of `e` has entries at most `max(e)`, so searching `[0, 15]^5`
/// decides liftability of every `e` with entries up to 15.
#[test]
fn liftability_matches_brute_force() {
    for (n, alpha) in [(2, 1), (3, 2)] {
        let d = hirzebruch_deformation(n, alpha);
        let mut reachable = std::collections::HashSet::new();
        let side = 16i64;
        for code in 0..side.pow(5) {
            let x: IntVec = (0..5).map(|k| (code / side.pow(k)) % side).collect();
            let e = d.nu.mul_vec(&x);
            if e.iter().all(|&v| v <= 15) {
                reachable.insert(e);
            }
        }
        for code in 0..side.pow(4) {
            let e: IntVec = (0..4).map(|k| (code / side.pow(k)) % side).collect();
            assert_eq!(is_liftable(&d, &e).is_some(), reachable.contains(&e), "F{n}, alpha {alpha}, e = {e:?}");
        }
    }
}

#[test]
fn gcd_of_kernel_vectors_is_one() {
    let a = IntMat::from_rows(3, &[[2, 4, 6]]);
    for v in kernel_basis(&a) {
        assert_eq!(gcd_slice(&v), 1);
    }
}
