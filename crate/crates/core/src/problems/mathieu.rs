use std::f64::consts::PI;

use crate::analysis::{try_root_find_scalar, RootSearch};
use crate::engine::{solve_segmented, OdeSystem, SeedRule, SolveSettings, VectorField};
use crate::error::{Error, Result};
use crate::jet::OdeScalar;
use crate::linalg::{MatN, VecN};

/// `y'' + (r - 2q cos 2x) y = 0` as `(y, y')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mathieu {
    pub r: f64,
    pub q: f64,
}

impl VectorField for Mathieu {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, x: &T, y: &[T]) -> Vec<T> {
        let c = (x.clone() * 2.0).cos();
        vec![y[1].clone(), (c * (2.0 * self.q) - self.r) * y[0].clone()]
    }
}

/// Mathieu system with the split `A = [[0, 1], [-r, 0]]`, so the remainder is
/// `G = (0, 2q cos(2x) y)`.
pub fn mathieu_system(r: f64, q: f64) -> Result<OdeSystem> {
    if !(r.is_finite() && q.is_finite()) {
        return Err(Error::InvalidArgument("Mathieu parameters must be finite".into()));
    }
    let a = MatN::from_row_slice(2, 2, &[0.0, 1.0, -r, 0.0]);
    OdeSystem::new(std::sync::Arc::new(Mathieu { r, q }), 2, a)
}

/// Small-`q` series for the first five characteristic values of period `pi`.
pub fn mathieu_char_series(q: f64, index: usize) -> Result<f64> {
    let (q2, q3, q4) = (q * q, q * q * q, q * q * q * q);
    let q5 = q4 * q;
    let q6 = q3 * q3;
    Ok(match index {
        1 => 1.0 - q - q2 / 8.0 + q3 / 64.0 - q4 / 1536.0,
        2 => 4.0 + 5.0 * q2 / 12.0 - 763.0 * q4 / 13824.0 + 1002401.0 * q6 / 79626240.0,
        3 => 9.0 + q2 / 16.0 - q3 / 64.0 + 13.0 * q4 / 20480.0,
        4 => 16.0 + q2 / 30.0 + 433.0 * q4 / 864000.0 - 5701.0 * q6 / 2721600000.0,
        5 => 25.0 + q2 / 48.0 + 11.0 * q4 / 774144.0 - q5 / 147456.0,
        _ => return Err(Error::InvalidArgument(format!("characteristic index must be 1..=5, got {index}"))),
    })
}

/// Settings used for the characteristic-value search: one segment over
/// `[0, pi]`, quadrature backend, constant seed equal to the initial value.
pub fn mathieu_eigen_settings(n_iter: usize) -> SolveSettings {
    SolveSettings::quadrature(PI, n_iter, 32).with_seed(SeedRule::InitialValue)
}

/// `y_n(pi; r)` for the initial value `(0, 1)`.
pub fn mathieu_shooting_residual(r: f64, q: f64, settings: &SolveSettings) -> Result<f64> {
    let sys = mathieu_system(r, q)?;
    let curve = solve_segmented(&sys, 0.0, PI, &VecN::from_vec(vec![0.0, 1.0]), settings)?;
    Ok(curve.end_value()[0])
}

pub const EIGEN_SCAN_MAX: f64 = 30.0;
pub const EIGEN_SCAN_STEP: f64 = 0.25;

/// The first `count` values of `r` in `[0, 30]` where `y_n(pi; r) = 0`,
/// bracketed on a grid of step 0.25 and refined to `|dr| <= 1e-10`.
pub fn mathieu_char_values(q: f64, n_iter: usize, count: usize) -> Result<Vec<f64>> {
    if count > 5 {
        return Err(Error::InvalidArgument(format!("at most 5 characteristic values, {count} requested")));
    }
    if !(q.is_finite() && q.abs() <= 1.0) {
        return Err(Error::InvalidArgument(format!("q must satisfy |q| <= 1, got {q}")));
    }
    let settings = mathieu_eigen_settings(n_iter);
    let f = |r: f64| mathieu_shooting_residual(r, q, &settings);
    let steps = (EIGEN_SCAN_MAX / EIGEN_SCAN_STEP).round() as usize;
    let mut roots = Vec::with_capacity(count);
    let mut r0 = 0.0;
    let mut f0 = f(r0)?;
    for i in 1..=steps {
        if roots.len() == count {
            break;
        }
        let r1 = i as f64 * EIGEN_SCAN_STEP;
        let f1 = f(r1)?;
        if f0 == 0.0 {
            roots.push(r0);
        } else if f0 * f1 < 0.0 {
            roots.push(try_root_find_scalar(f, RootSearch::Bracket(r0, r1), 0.0, 200)?);
        }
        r0 = r1;
        f0 = f1;
    }
    if roots.len() < count && f0 == 0.0 {
        roots.push(r0);
    }
    if roots.len() < count {
        return Err(Error::InsufficientRoots { found: roots.len(), requested: count });
    }
    Ok(roots)
}

/// Percent relative deviation `100 |r - r_series| / r_series`.
pub fn percent_deviation(value: f64, reference: f64) -> f64 {
    100.0 * (value - reference).abs() / reference.abs()
}
