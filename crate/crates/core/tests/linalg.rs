mod common;

use common::{expm_taylor, integrate_vec, m, v};
use picard::linalg::{exp_poly_integral, mat_exp, op_norm, MatN, VecN, VecPoly};
use proptest::prelude::*;

fn matrix(n: usize, bound: f64) -> impl Strategy<Value = MatN> {
    prop::collection::vec(-1.0..1.0f64, n * n).prop_map(move |xs| {
        let a = MatN::from_row_slice(n, n, &xs);
        let s = a.norm();
        if s > 0.0 { a * (bound / s) * 0.999 } else { a }
    })
}

fn rel_close(a: &MatN, b: &MatN, tol: f64) -> bool {
    let scale = b.abs().max().max(1.0);
    (a - b).abs().max() <= tol * scale
}

#[test]
fn exponential_examples() {
    let a = m(2, &[0.3, -1.0, 2.0, 0.7]);
    assert_eq!(mat_exp(&a, 0.0).unwrap(), MatN::identity(2, 2));
    let nil = m(2, &[0.0, 1.0, 0.0, 0.0]);
    assert!(rel_close(&mat_exp(&nil, 2.5).unwrap(), &m(2, &[1.0, 2.5, 0.0, 1.0]), 1e-15));
    let rot = m(2, &[0.0, 1.0, -1.0, 0.0]);
    let e = mat_exp(&rot, std::f64::consts::FRAC_PI_2).unwrap();
    assert!((e - &rot).abs().max() < 1e-15);
}

#[test]
fn exponential_of_normal_matrix_is_accurate_relative_to_its_size() {
    let a = m(2, &[-3.0, 4.0, -4.0, -3.0]);
    for t in [0.1, 1.0, 5.0, 10.0] {
        let e = mat_exp(&a, t).unwrap();
        let decay = (-3.0 * t).exp();
        let exact = m(2, &[(4.0 * t).cos(), (4.0 * t).sin(), -(4.0 * t).sin(), (4.0 * t).cos()]) * decay;
        assert!((e - exact).abs().max() <= 1e-13 * decay, "t = {t}");
    }
}

#[test]
fn norm_examples() {
    assert!((op_norm(&MatN::identity(3, 3)).unwrap() - 1.0).abs() < 1e-15);
    assert!((op_norm(&m(2, &[2.0, 0.0, 0.0, 3.0])).unwrap() - 3.0).abs() < 1e-14);
    assert!((op_norm(&m(2, &[0.0, 1.0, 0.0, 0.0])).unwrap() - 1.0).abs() < 1e-15);
}

#[test]
fn integral_examples() {
    let one = VecPoly::constant(0.0, v(&[1.0, 1.0])).unwrap();
    let r = exp_poly_integral(&MatN::zeros(2, 2), 0.0, 2.0, &one).unwrap();
    assert!((r - v(&[2.0, 2.0])).norm() < 1e-14);

    let rot = m(2, &[0.0, 1.0, -1.0, 0.0]);
    let p = VecPoly::constant(0.0, v(&[0.0, 1.0])).unwrap();
    for x in [0.3, 1.7, std::f64::consts::PI] {
        let r = exp_poly_integral(&rot, 0.0, x, &p).unwrap();
        assert!((r - v(&[1.0 - x.cos(), x.sin()])).norm() < 1e-14);
    }

    let p = VecPoly::constant(0.0, v(&[1.0])).unwrap();
    let r = exp_poly_integral(&m(1, &[1.0]), 0.0, 1.0, &p).unwrap();
    assert!((r[0] - (1f64.exp() - 1.0)).abs() < 1e-14);
}

#[test]
fn integral_rejects_dimension_mismatch() {
    let p = VecPoly::constant(0.0, v(&[1.0, 2.0, 3.0])).unwrap();
    assert!(exp_poly_integral(&MatN::zeros(2, 2), 0.0, 1.0, &p).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semigroup(a in prop_oneof![matrix(2, 5.0), matrix(4, 5.0)], s in -1.0..1.0f64, t in -1.0..1.0f64) {
        let lhs = mat_exp(&a, s).unwrap() * mat_exp(&a, t).unwrap();
        let rhs = mat_exp(&a, s + t).unwrap();
        prop_assert!(rel_close(&lhs, &rhs, 1e-12));
    }

    #[test]
    fn exponential_agrees_with_series(a in matrix(3, 5.0)) {
        prop_assert!(rel_close(&mat_exp(&a, 1.0).unwrap(), &expm_taylor(&a), 1e-12));
    }

    #[test]
    fn submultiplicative(a in matrix(3, 5.0), b in matrix(3, 5.0)) {
        prop_assert!(op_norm(&(&a * &b)).unwrap() <= op_norm(&a).unwrap() * op_norm(&b).unwrap() + 1e-10);
    }

    #[test]
    fn closed_form_integral_matches_quadrature(
        a in matrix(2, 3.0),
        coeffs in prop::collection::vec(-2.0..2.0f64, 2..=8),
        x0 in -1.0..1.0f64,
        len in -1.0..1.0f64,
        c in -0.5..0.5f64,
    ) {
        let degree = coeffs.len() / 2 - 1;
        let cs: Vec<VecN> = (0..=degree).map(|j| v(&[coeffs[2 * j], coeffs[2 * j + 1]])).collect();
        let p = VecPoly::new(x0 + c, cs).unwrap();
        let x = x0 + len;
        let closed = exp_poly_integral(&a, x0, x, &p).unwrap();
        let oracle = integrate_vec(|s| expm_taylor(&(&a * (x - s))) * p.eval(s), x0.min(x), x0.max(x), 64, 1)
            * if x >= x0 { 1.0 } else { -1.0 };
        for i in 0..2 {
            prop_assert!((closed[i] - oracle[i]).abs() <= 1e-11 * oracle[i].abs().max(1.0), "{closed} vs {oracle}");
        }
    }
}
