//! The Bratu problem `y'' + alpha e^y = 0`, `y(0) = y(1) = 0`, its closed-form
//! solution, and the quadratic truncation `y'' = -alpha (1 + y + y^2 / 2)`
//! solved by shooting on the initial slope.

use crate::analysis::{root_find_scalar, try_root_find_scalar, RootSearch};
use crate::engine::{solve_segmented, OdeSystem, PiecewiseCurve, SeedRule, SolveSettings, VectorField};
use crate::error::{Error, Result};
use crate::jet::OdeScalar;
use crate::linalg::{MatN, VecN};

/// `y'' = -alpha (1 + y + y^2 / 2)` as `(y, y')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BratuQuadratic {
    pub alpha: f64,
}

impl VectorField for BratuQuadratic {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        let y0 = y[0].clone();
        let poly = (y0.clone() * y0.clone() * 0.5 + y0) + 1.0;
        vec![y[1].clone(), poly * (-self.alpha)]
    }
}

/// Quadratic Bratu system with `A = [[0, 1], [-alpha, 0]]` and
/// `G = (0, -alpha (1 + y^2 / 2))`.
pub fn bratu_quadratic_system(alpha: f64) -> Result<OdeSystem> {
    check_alpha(alpha)?;
    let lin = MatN::from_row_slice(2, 2, &[0.0, 1.0, -alpha, 0.0]);
    OdeSystem::new(std::sync::Arc::new(BratuQuadratic { alpha }), 2, lin)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("alpha must be positive, got {alpha}")))
    }
}

const THETA_MAX: f64 = 50.0;

fn theta_residual(alpha: f64, theta: f64) -> f64 {
    theta - (2.0 * alpha).sqrt() * (0.25 * theta).cosh()
}

/// Roots of `theta = sqrt(2 alpha) cosh(theta / 4)` in `(0, 50)`, ascending.
///
/// The residual is concave with a single maximum, so there are two roots
/// below the critical `alpha`, one at it and none above. An empty result is
/// not an error.
pub fn bratu_exact_theta(alpha: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    let s = (2.0 * alpha).sqrt();
    let peak = 4.0 * (4.0 / s).asinh();
    let f = |t: f64| theta_residual(alpha, t);
    let top = f(peak);
    if top.abs() <= 1e-12 {
        return Ok(vec![peak]);
    }
    if top < 0.0 {
        return Ok(Vec::new());
    }
    let mut roots = vec![polish(alpha, root_find_scalar(f, RootSearch::Bracket(0.0, peak), 0.0)?)];
    if peak < THETA_MAX && f(THETA_MAX) < 0.0 {
        roots.push(polish(alpha, root_find_scalar(f, RootSearch::Bracket(peak, THETA_MAX), 0.0)?));
    }
    Ok(roots)
}

fn polish(alpha: f64, mut theta: f64) -> f64 {
    let s = (2.0 * alpha).sqrt();
    for _ in 0..4 {
        let d = 1.0 - 0.25 * s * (0.25 * theta).sinh();
        if d == 0.0 {
            break;
        }
        let step = theta_residual(alpha, theta) / d;
        theta -= step;
        if step.abs() < 1e-15 * theta.abs() {
            break;
        }
    }
    theta
}

/// The critical `alpha` at which the two exact solutions merge: the point
/// where the root of the theta equation is also tangent, i.e.
/// `4 = sqrt(2 alpha) sinh(theta / 4)` holds as well.
pub fn bratu_critical_alpha() -> f64 {
    // With u = theta / 4 both conditions reduce to u tanh u = 1.
    let u = root_find_scalar(|u| u * u.tanh() - 1.0, RootSearch::Bracket(1.0, 2.0), 0.0)
        .expect("u tanh u - 1 changes sign on [1, 2]");
    8.0 / u.sinh().powi(2)
}

/// Exact Bratu solution `w(x) = -2 log(cosh((x - 1/2) theta / 2) / cosh(theta / 4))`.
pub fn bratu_exact(theta: f64, x: f64) -> f64 {
    -2.0 * ((0.5 * (x - 0.5) * theta).cosh() / (0.25 * theta).cosh()).ln()
}

/// Initial slope `w'(0) = theta tanh(theta / 4)` of the exact solution.
pub fn bratu_exact_slope(theta: f64) -> f64 {
    theta * (0.25 * theta).tanh()
}

pub const SHOOT_SEEDS: (f64, f64) = (0.5, 0.6);
pub const SHOOT_TOL: f64 = 1e-10;
pub const SHOOT_MAX_STEPS: usize = 50;

/// Default settings for the shot: one segment over `[0, 1]`, quadrature.
pub fn bratu_shoot_settings(n_iter: usize) -> SolveSettings {
    SolveSettings::quadrature(1.0, n_iter, 24).with_seed(SeedRule::InitialValue)
}

/// Secant shooting on the slope `u = y'(0)` of the quadratic model so that
/// the iterate after `n_iter` steps satisfies `y(1) = 0`. The seed is the
/// constant initial value `(0, u)` regardless of `settings.seed`.
pub fn bratu_shoot(alpha: f64, n_iter: usize, settings: &SolveSettings) -> Result<(f64, PiecewiseCurve)> {
    let sys = bratu_quadratic_system(alpha)?;
    let mut settings = settings.clone().with_seed(SeedRule::InitialValue);
    settings.n_iter = n_iter;
    let solve = |u: f64| solve_segmented(&sys, 0.0, 1.0, &VecN::from_vec(vec![0.0, u]), &settings);
    let residual = |u: f64| solve(u).map(|c| c.end_value()[0]);
    let u = try_root_find_scalar(
        residual,
        RootSearch::Seeds(SHOOT_SEEDS.0, SHOOT_SEEDS.1),
        SHOOT_TOL,
        SHOOT_MAX_STEPS,
    )
    .map_err(|e| match e {
        Error::RootNotFound(msg) => Error::ShootingFailure(msg),
        other => other,
    })?;
    let curve = solve(u)?;
    if curve.end_value()[0].abs() > SHOOT_TOL {
        return Err(Error::ShootingFailure(format!(
            "slope {u} leaves y(1) = {:e}",
            curve.end_value()[0]
        )));
    }
    Ok((u, curve))
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// The commonly quoted closed form of the second variational iterate for
/// `alpha = 1`, evaluated term by term as written.
pub fn bratu_vim_reference(x: f64, k: f64) -> f64 {
    let k2 = k * k;
    let c = [
        0.0,
        k,
        -1.0 / factorial(2),
        -1.0 / factorial(3),
        -(k2 - 1.0) / factorial(4),
        4.0 / factorial(5),
        (5.0 * k2 - 3.0) / factorial(6),
        5.0 * k * (k2 - 2.0) / factorial(7),
        -25.0 * k2 / factorial(8),
        -35.0 * k2 * k / factorial(9),
        -35.0 * k2 * k2 / factorial(10),
    ];
    horner(&c, x)
}

/// Second variational iterate for `alpha = 1` recomputed from the
/// iteration `H_{n+1} = H_n - int_0^x (x - s)(H_n'' + 1 + H_n + H_n^2 / 2) ds`
/// with `H_0 = k x`. Its root `H_2(1) = 0` is `k = 0.546936690480377`.
pub fn bratu_vim_second_iterate(x: f64, k: f64) -> f64 {
    let (k2, k3, k4) = (k * k, k * k * k, k * k * k * k);
    let c = [
        0.0,
        k,
        -0.5,
        -k / 6.0,
        1.0 / 24.0 - k2 / 24.0,
        k / 30.0,
        -1.0 / 240.0 + k2 / 144.0,
        -k / 504.0 + k3 / 1008.0,
        -5.0 * k2 / 8064.0,
        -k3 / 10368.0,
        -k4 / 103680.0,
    ];
    horner(&c, x)
}

/// Slope `k` with `H_2(1) = 0` for the printed iterate.
pub fn bratu_vim_reference_k() -> Result<f64> {
    root_find_scalar(|k| bratu_vim_reference(1.0, k), RootSearch::Seeds(0.5, 0.6), 1e-15)
}

/// Slope `k` with `H_2(1) = 0` for the recomputed iterate.
pub fn bratu_vim_second_iterate_k() -> Result<f64> {
    root_find_scalar(|k| bratu_vim_second_iterate(1.0, k), RootSearch::Seeds(0.5, 0.6), 1e-15)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_second_component_is_negative() {
        let sys = bratu_quadratic_system(1.3).unwrap();
        let g = sys.nonlinear(0.0, &VecN::from_vec(vec![0.0, 5.0]));
        assert_eq!(g, VecN::from_vec(vec![0.0, -1.3]));
        for y in [-3.0, -1.0, 0.0, 2.0] {
            let f = sys.rhs(0.0, &VecN::from_vec(vec![y, 0.0]));
            assert!(f[1] < 0.0);
        }
    }

    #[test]
    fn exact_solution_boundary_and_symmetry() {
        let theta = bratu_exact_theta(1.0).unwrap()[0];
        assert!(bratu_exact(theta, 0.0).abs() < 1e-12);
        assert!(bratu_exact(theta, 1.0).abs() < 1e-12);
        for i in 0..=20 {
            let x = i as f64 / 20.0;
            assert!((bratu_exact(theta, x) - bratu_exact(theta, 1.0 - x)).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_root_count_by_regime() {
        let ac = bratu_critical_alpha();
        assert_eq!(bratu_exact_theta(1.0).unwrap().len(), 2);
        assert!(bratu_exact_theta(ac + 0.1).unwrap().is_empty());
        let roots = bratu_exact_theta(ac - 1e-4).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[1] - roots[0]).abs() < 0.5);
    }

    #[test]
    fn printed_iterate_at_zero_slope() {
        for x in [0.0, 0.3, 1.0] {
            let expected = -x * x / 2.0 - x.powi(3) / 6.0 + x.powi(4) / 24.0 + 4.0 * x.powi(5) / 120.0
                - 3.0 * x.powi(6) / 720.0;
            assert!((bratu_vim_reference(x, 0.0) - expected).abs() < 1e-15);
        }
        assert_eq!(bratu_vim_reference(0.0, 0.7), 0.0);
        assert_eq!(bratu_vim_second_iterate(0.0, 0.7), 0.0);
    }
}
