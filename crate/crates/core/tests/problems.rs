mod common;

use std::f64::consts::PI;

use common::v;
use picard::analysis::{l2_error_fn, ErrorNorm};
use picard::engine::SolveSettings;
use picard::problems::{
    bratu_critical_alpha, bratu_exact, bratu_exact_slope, bratu_exact_theta, bratu_quadratic_system, bratu_shoot,
    bratu_shoot_settings, bratu_vim_reference, bratu_vim_reference_k, bratu_vim_second_iterate,
    bratu_vim_second_iterate_k, brusselator_stability, brusselator_system, brusselator_w_initial,
    brusselator_w_system, duffing_system, glycolysis_hopf_band, glycolysis_stability, glycolysis_system,
    mathieu_char_series, mathieu_char_values, mathieu_system, BrusselatorW, ProblemKind, ProblemSpec, Stability,
};
use picard::reference::rk8_solve;
use picard::Error;
use proptest::prelude::*;

/// The right-hand sides written out directly, independent of the split.
fn documented_rhs(kind: ProblemKind, x: f64, y: f64, z: f64) -> [f64; 2] {
    match kind {
        ProblemKind::Mathieu => [z, -(1.0 - 2.0 * 0.05 * (2.0 * x).cos()) * y],
        ProblemKind::Duffing => [z, -y - 0.5 * y.powi(5)],
        ProblemKind::Bratu => [z, -(1.0 + y + 0.5 * y * y)],
        ProblemKind::Glycolysis => [-y + 0.4 * z + z * y * y, 0.6 - 0.4 * z - z * y * y],
        ProblemKind::Brusselator => [1.0 - 3.5 * y + y * y * z, 2.5 * y - y * y * z],
        ProblemKind::BrusselatorW => {
            let f = 3.5 - (1.0 + 2.5 + (3.0 - 2.0 * y)) * z - (y - 3.0) * z * z - z * z * z;
            [z, -y + f]
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn splits_reproduce_the_documented_rhs(which in 0usize..6, x in -5.0..5.0f64, y in -2.0..2.0f64, z in -2.0..2.0f64) {
        let kind = ProblemKind::ALL[which];
        let sys = kind.benchmark().system().unwrap();
        let s = v(&[y, z]);
        let split = sys.linear() * &s + sys.nonlinear(x, &s);
        let expect = documented_rhs(kind, x, y, z);
        for i in 0..2 {
            prop_assert!((split[i] - expect[i]).abs() <= 1e-14 * (1.0 + expect[i].abs()), "{kind} component {i}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn glycolysis_trace_matches_numerical_jacobian(a in 0.01..2.0f64, b in 0.01..2.0f64) {
        let report = glycolysis_stability(a, b).unwrap();
        let sys = glycolysis_system(a, b).unwrap();
        let p = report.fixed_point.clone();
        prop_assert!(sys.rhs(0.0, &p).amax() < 1e-14);
        let eps = 1e-6;
        let mut jac = [[0.0; 2]; 2];
        for j in 0..2 {
            let mut hi = p.clone();
            let mut lo = p.clone();
            hi[j] += eps;
            lo[j] -= eps;
            let d = (sys.rhs(0.0, &hi) - sys.rhs(0.0, &lo)) / (2.0 * eps);
            for i in 0..2 {
                jac[i][j] = d[i];
            }
        }
        let trace = jac[0][0] + jac[1][1];
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        prop_assert!((trace - report.jacobian_trace).abs() <= 1e-8, "{trace} vs {}", report.jacobian_trace);
        prop_assert!((det - report.jacobian_det).abs() <= 1e-7 * (1.0 + det.abs()));
        prop_assert_eq!(report.classification == Stability::Unstable, report.jacobian_trace > 0.0);
    }
}

#[test]
fn mathieu_examples() {
    let sys = mathieu_system(2.0, 0.0).unwrap();
    let c = rk8_solve(&sys, 0.0, 5.0, &v(&[1.0, 0.0]), 1e-2).unwrap();
    for x in [0.5, 2.0, 5.0] {
        assert!((c.eval(x)[0] - (2f64.sqrt() * x).cos()).abs() < 1e-12);
    }
    let g = mathieu_system(1.0, 0.05).unwrap().nonlinear(0.0, &v(&[1.0, 0.0]));
    assert!((g - v(&[0.0, 0.1])).norm() < 1e-16);
}

#[test]
fn characteristic_series() {
    for k in 1..=5 {
        assert_eq!(mathieu_char_series(0.0, k).unwrap(), (k * k) as f64);
    }
    let q: f64 = 0.1;
    let r1 = 1.0 - q - q * q / 8.0 + q.powi(3) / 64.0 - q.powi(4) / 1536.0;
    assert!((mathieu_char_series(q, 1).unwrap() - r1).abs() < 1e-15);
    assert!((r1 - 0.898765).abs() < 1e-6);
    assert!((mathieu_char_series(q, 4).unwrap() - 16.000333).abs() < 1e-6);
    assert!(mathieu_char_series(q, 0).is_err());
    assert!(mathieu_char_series(q, 6).is_err());
}

#[test]
fn characteristic_values_without_coupling_are_squares() {
    let r = mathieu_char_values(0.0, 3, 5).unwrap();
    for (k, rk) in r.iter().enumerate() {
        assert!((rk - ((k + 1) * (k + 1)) as f64).abs() < 1e-8, "{rk}");
    }
}

#[test]
fn characteristic_value_arguments_are_checked() {
    assert!(matches!(mathieu_char_values(0.1, 3, 6), Err(Error::InvalidArgument(_))));
    assert!(matches!(mathieu_char_values(2.0, 3, 5), Err(Error::InvalidArgument(_))));
}

#[test]
fn duffing_examples() {
    let g = duffing_system(0.5).unwrap().nonlinear(1.3, &v(&[1.0, 0.0]));
    assert_eq!(g, v(&[0.0, -0.5]));

    let harmonic = duffing_system(0.0).unwrap();
    let c = rk8_solve(&harmonic, 0.0, 2.0 * PI, &v(&[1.0, 0.0]), 2.0 * PI / 200.0).unwrap();
    assert!((c.end_value() - v(&[1.0, 0.0])).norm() < 1e-12);

}

/// Period of `y'' + y + a y^5 = 0` from `(1, 0)` by energy conservation:
/// with `y = sin(phi)`, `T = 4 int_0^{pi/2} dphi / sqrt(1 + a (1 + s^2 + s^4) / 3)`.
fn duffing_period(a: f64) -> f64 {
    let (x, w) = common::golub_welsch(64);
    let f = |phi: f64| {
        let s2 = phi.sin().powi(2);
        1.0 / (1.0 + a * (1.0 + s2 + s2 * s2) / 3.0).sqrt()
    };
    4.0 * x.iter().zip(&w).map(|(xi, wi)| wi * f(PI / 4.0 * (xi + 1.0)) * PI / 4.0).sum::<f64>()
}

#[test]
fn duffing_is_periodic_with_the_energy_period() {
    let t = duffing_period(0.5);
    assert!((t - 5.50).abs() < 0.01, "{t}");
    assert!((duffing_period(0.0) - 2.0 * PI).abs() < 1e-14);
    let sys = duffing_system(0.5).unwrap();
    let c = rk8_solve(&sys, 0.0, 2.0 * t, &v(&[1.0, 0.0]), 2.0 * t / 1400.0).unwrap();
    assert!((c.eval(t) - v(&[1.0, 0.0])).norm() <= 1e-10);
    assert!((c.end_value() - v(&[1.0, 0.0])).norm() <= 1e-10);
}

#[test]
fn bratu_theta_and_exact_solution() {
    let theta = bratu_exact_theta(1.0).unwrap();
    assert_eq!(theta.len(), 2);
    assert!((theta[0] - 1.51716459905).abs() <= 1e-9);
    for t in &theta {
        assert!((t - 2f64.sqrt() * (t / 4.0).cosh()).abs() <= 1e-10);
    }
    let w = |x: f64| bratu_exact(theta[0], x);
    assert!(w(0.0).abs() < 1e-12 && w(1.0).abs() < 1e-12);
    assert!((w(0.3) - w(0.7)).abs() < 1e-12);
    let mid = 2.0 * (theta[0] / 4.0).cosh().ln();
    assert!((w(0.5) - mid).abs() < 1e-15);
    assert!((w(0.5) - 0.1405).abs() < 1e-4);

    let alpha = 1e-6;
    let small = bratu_exact_theta(alpha).unwrap()[0];
    assert!((small / (2.0 * alpha).sqrt() - 1.0).abs() < 1e-5);

    assert!(bratu_exact_theta(5.0).unwrap().is_empty());
    assert!(bratu_exact_theta(0.0).is_err());
}

#[test]
fn exact_slope_is_the_derivative_at_the_origin() {
    let theta = bratu_exact_theta(1.0).unwrap()[0];
    let h = 1e-5;
    let fd = (bratu_exact(theta, h) - bratu_exact(theta, -h)) / (2.0 * h);
    assert!((bratu_exact_slope(theta) - fd).abs() < 1e-9);
}

#[test]
fn critical_alpha_matches_a_two_dimensional_newton_oracle() {
    // Solve theta = s cosh(theta / 4) and 1 = (s / 4) sinh(theta / 4) for (theta, s), s = sqrt(2 alpha).
    let (mut t, mut s) = (4.8f64, 2.6f64);
    for _ in 0..50 {
        let f1 = t - s * (t / 4.0).cosh();
        let f2 = 1.0 - s / 4.0 * (t / 4.0).sinh();
        let j = [[1.0 - s / 4.0 * (t / 4.0).sinh(), -(t / 4.0).cosh()], [-s / 16.0 * (t / 4.0).cosh(), -(t / 4.0).sinh() / 4.0]];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        t -= (f1 * j[1][1] - f2 * j[0][1]) / det;
        s -= (j[0][0] * f2 - j[1][0] * f1) / det;
    }
    let alpha_c = s * s / 2.0;
    assert!((bratu_critical_alpha() - alpha_c).abs() < 1e-10, "{alpha_c}");
    assert!((alpha_c - 3.5138).abs() < 1e-4);
    let merged = bratu_exact_theta(alpha_c).unwrap();
    assert!(!merged.is_empty());
    assert!((merged[0] - t).abs() < 1e-3);
}

#[test]
fn bratu_shooting() {
    let (u, curve) = bratu_shoot(1.0, 2, &bratu_shoot_settings(2)).unwrap();
    assert!((u - 0.549249).abs() <= 1e-3);
    assert!(curve.end_value()[0].abs() <= 1e-10);
    let theta = bratu_exact_theta(1.0).unwrap()[0];
    assert!((bratu_exact_slope(theta) - 0.54946).abs() < 2e-4);
    let e = l2_error_fn(|x| bratu_exact(theta, x), |x| curve.eval(x)[0], 0.0, 1.0, ErrorNorm::Integral);
    assert!(e < 5.85e-9, "{e:e}");

    let alpha = 1e-4;
    let (u, _) = bratu_shoot(alpha, 3, &bratu_shoot_settings(3)).unwrap();
    assert!((u / (alpha / 2.0) - 1.0).abs() < 1e-3, "{u}");

    let g = bratu_quadratic_system(2.0).unwrap().nonlinear(0.0, &v(&[0.0, 0.7]));
    assert_eq!(g, v(&[0.0, -2.0]));
}

#[test]
fn bratu_variational_iterates() {
    for k in [0.0, 0.3, 0.9] {
        assert_eq!(bratu_vim_reference(0.0, k), 0.0);
        assert_eq!(bratu_vim_second_iterate(0.0, k), 0.0);
    }
    for x in [0.2f64, 0.5, 1.0] {
        let printed_k0 = -x * x / 2.0 - x.powi(3) / 6.0 + x.powi(4) / 24.0 + 4.0 * x.powi(5) / 120.0 - 3.0 * x.powi(6) / 720.0;
        assert!((bratu_vim_reference(x, 0.0) - printed_k0).abs() < 1e-15);
    }
    let k = 0.546936690480377;
    // The quoted slope is the root of the recomputed iterate; the printed
    // polynomial has its own root.
    assert!(bratu_vim_second_iterate(1.0, k).abs() <= 1e-9);
    assert!((bratu_vim_second_iterate_k().unwrap() - k).abs() < 1e-12);
    let printed_k = bratu_vim_reference_k().unwrap();
    assert!(bratu_vim_reference(1.0, printed_k).abs() < 1e-14);
    assert!((printed_k - 0.60999).abs() < 1e-5);
    assert!((bratu_vim_reference(1.0, k) + 0.0604).abs() < 1e-4);
}

#[test]
fn glycolysis_examples() {
    let (a, b) = (0.4, 0.6);
    let sys = glycolysis_system(a, b).unwrap();
    assert_eq!(sys.nonlinear(0.0, &v(&[0.0, 0.0])), v(&[0.0, b]));
    let f = sys.rhs(0.0, &v(&[1.0, 1.0]));
    assert!((f - v(&[-1.0 + a + 1.0, b - a - 1.0])).norm() < 1e-15);

    let report = glycolysis_stability(a, b).unwrap();
    assert!((report.fixed_point - v(&[0.6, 0.6 / 0.76])).norm() < 1e-15);
    assert_eq!(report.classification, Stability::AsymptoticallyStable);

    let report = glycolysis_stability(0.04, 0.6).unwrap();
    assert_eq!(report.classification, Stability::Unstable);
    let (lo, hi) = glycolysis_hopf_band(0.04).unwrap();
    assert!((lo - 0.2184).abs() < 1e-4 && (hi - 0.9340).abs() < 1e-4);

    let (lo, hi) = glycolysis_hopf_band(0.125).unwrap();
    assert!((lo - 0.375f64.sqrt()).abs() < 1e-12 && (hi - lo).abs() < 1e-12);
    assert!(glycolysis_hopf_band(0.2).is_none());
    assert!(glycolysis_system(-1.0, 0.5).is_err());
}

#[test]
fn brusselator_examples() {
    let sys = brusselator_system(1.0, 2.5).unwrap();
    assert_eq!(sys.nonlinear(0.0, &v(&[0.0, 0.0])), v(&[1.0, 0.0]));
    let report = brusselator_stability(1.0, 2.5).unwrap();
    assert_eq!(report.fixed_point, v(&[1.0, 2.5]));
    assert!(sys.rhs(0.0, &report.fixed_point).amax() < 1e-15);
    assert_eq!(report.classification, Stability::Unstable);
    assert_eq!(brusselator_stability(1.0, 1.5).unwrap().classification, Stability::AsymptoticallyStable);

    let w = BrusselatorW { a: 1.0, b: 2.5 };
    for y in [-1.0, 0.0, 2.7] {
        assert_eq!(w.forcing(&y, &0.0), 3.5);
    }
    assert_eq!(brusselator_w_initial(1.8, 1.2), v(&[3.0, -0.8]));
}

#[test]
fn brusselator_forms_trace_the_same_trajectory() {
    let orig = rk8_solve(&brusselator_system(1.0, 2.5).unwrap(), 0.0, 5.0, &v(&[1.8, 1.2]), 1e-2).unwrap();
    let wform = rk8_solve(&brusselator_w_system(1.0, 2.5).unwrap(), 0.0, 5.0, &brusselator_w_initial(1.8, 1.2), 1e-2).unwrap();
    for i in 0..=100 {
        let x = 0.05 * i as f64;
        let o = orig.eval(x);
        assert!((wform.eval(x)[0] - (o[0] + o[1])).abs() <= 1e-8, "x={x}");
    }
}

#[test]
fn specs_round_trip_through_toml_and_validate() {
    for kind in ProblemKind::ALL {
        let spec = kind.benchmark();
        let text = toml::to_string(&spec).unwrap();
        let back: ProblemSpec = toml::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
    let mut spec = ProblemKind::Bratu.benchmark();
    spec.params.insert("q".into(), 1.0);
    assert!(matches!(spec.validate(), Err(Error::Config(_))));
    let mut spec = ProblemKind::Mathieu.benchmark();
    spec.initial = vec![1.0];
    assert!(matches!(spec.system(), Err(Error::Config(_))));
}

#[test]
fn segmented_brusselator_w_form_beats_the_original() {
    let settings = SolveSettings::poly_fit(0.1, 5, 3);
    let solve = |kind: ProblemKind| {
        let spec = kind.benchmark();
        let sys = spec.system().unwrap();
        let c = picard::engine::solve_segmented(&sys, 0.0, 5.0, &spec.initial_value(), &settings).unwrap();
        let r = rk8_solve(&sys, 0.0, 5.0, &spec.initial_value(), 1e-2).unwrap();
        picard::analysis::l2_mean_error(&r, &c, 0.0, 5.0, 0).unwrap()
    };
    assert!(solve(ProblemKind::BrusselatorW) < solve(ProblemKind::Brusselator));
}
