//! Two-species reaction models: the Sel'kov glycolysis oscillator and the
//! Brusselator, the latter also in the second-order form for `w = y + z`.

use serde::Serialize;

use crate::engine::{OdeSystem, VectorField};
use crate::error::{Error, Result};
use crate::jet::OdeScalar;
use crate::linalg::{MatN, VecN};

fn check_positive(a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("parameters must be positive, got a = {a}, b = {b}")))
    }
}

/// `y' = -y + a z + y^2 z`, `z' = b - a z - y^2 z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Glycolysis {
    pub a: f64,
    pub b: f64,
}

impl VectorField for Glycolysis {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        let (u, v) = (y[0].clone(), y[1].clone());
        let cubic = u.clone() * u.clone() * v.clone();
        vec![-u + v.clone() * self.a + cubic.clone(), -(v * self.a) - cubic + self.b]
    }
}

/// Glycolysis with `A = [[-1, a], [0, -a]]`, `G = (y^2 z, b - y^2 z)`.
pub fn glycolysis_system(a: f64, b: f64) -> Result<OdeSystem> {
    check_positive(a, b)?;
    let lin = MatN::from_row_slice(2, 2, &[-1.0, a, 0.0, -a]);
    OdeSystem::new(std::sync::Arc::new(Glycolysis { a, b }), 2, lin)
}

/// `y' = 1 - (1 + b) y + a y^2 z`, `z' = b y - a y^2 z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Brusselator {
    pub a: f64,
    pub b: f64,
}

impl VectorField for Brusselator {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        let (u, v) = (y[0].clone(), y[1].clone());
        let cubic = u.clone() * u.clone() * v * self.a;
        vec![u.clone() * (-(1.0 + self.b)) + cubic.clone() + 1.0, u * self.b - cubic]
    }
}

/// Brusselator with `A = [[-(1 + b), 0], [b, 0]]`, `G = (1 + a y^2 z, -a y^2 z)`.
pub fn brusselator_system(a: f64, b: f64) -> Result<OdeSystem> {
    check_positive(a, b)?;
    let lin = MatN::from_row_slice(2, 2, &[-(1.0 + b), 0.0, b, 0.0]);
    OdeSystem::new(std::sync::Arc::new(Brusselator { a, b }), 2, lin)
}

/// Brusselator rewritten for `w = y + z`:
/// `w'' = -a w + a + b - (1 + b + a(3 - 2w)) w' - a(w - 3) w'^2 - a w'^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrusselatorW {
    pub a: f64,
    pub b: f64,
}

impl BrusselatorW {
    /// The non-linear forcing `F(w, w')`.
    pub fn forcing<T: OdeScalar>(&self, w: &T, dw: &T) -> T {
        let (a, b) = (self.a, self.b);
        let damping = (w.clone() * (-2.0 * a)) + (1.0 + b + 3.0 * a);
        let quad = (w.clone() - 3.0) * a;
        -(damping * dw.clone()) - quad * dw.clone() * dw.clone() - dw.powi(3) * a + (a + b)
    }
}

impl VectorField for BrusselatorW {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        vec![y[1].clone(), y[0].clone() * (-self.a) + self.forcing(&y[0], &y[1])]
    }
}

/// The `w`-form with `A = [[0, 1], [-a, 0]]`, `G = (0, F(w, w'))`.
pub fn brusselator_w_system(a: f64, b: f64) -> Result<OdeSystem> {
    check_positive(a, b)?;
    let lin = MatN::from_row_slice(2, 2, &[0.0, 1.0, -a, 0.0]);
    OdeSystem::new(std::sync::Arc::new(BrusselatorW { a, b }), 2, lin)
}

/// Maps a Brusselator state `(y, z)` to the `w`-form state `(y + z, 1 - y)`.
pub fn brusselator_w_initial(y: f64, z: f64) -> VecN {
    VecN::from_vec(vec![y + z, 1.0 - y])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stability {
    AsymptoticallyStable,
    Unstable,
}

/// Linearisation at the unique fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub fixed_point: VecN,
    pub jacobian_trace: f64,
    pub jacobian_det: f64,
    pub classification: Stability,
}

impl StabilityReport {
    fn new(fixed_point: VecN, jacobian_trace: f64, jacobian_det: f64) -> Self {
        let classification = if jacobian_trace > 0.0 { Stability::Unstable } else { Stability::AsymptoticallyStable };
        StabilityReport { fixed_point, jacobian_trace, jacobian_det, classification }
    }
}

/// Fixed point `(b, b / (a + b^2))`, with
/// `trace = -(b^4 + (2a - 1) b^2 + a(1 + a)) / (a + b^2)` and `det = a + b^2`.
pub fn glycolysis_stability(a: f64, b: f64) -> Result<StabilityReport> {
    check_positive(a, b)?;
    let b2 = b * b;
    let det = a + b2;
    let trace = -(b2 * b2 + (2.0 * a - 1.0) * b2 + a * (1.0 + a)) / det;
    Ok(StabilityReport::new(VecN::from_vec(vec![b, b / det]), trace, det))
}

/// The band `b_- < b < b_+` in which the glycolysis fixed point is unstable;
/// it exists only for `0 < a <= 1/8`.
pub fn glycolysis_hopf_band(a: f64) -> Option<(f64, f64)> {
    let disc = 1.0 - 8.0 * a;
    if !(a > 0.0) || disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    Some((((1.0 - 2.0 * a - s) / 2.0).sqrt(), ((1.0 - 2.0 * a + s) / 2.0).sqrt()))
}

/// Fixed point `(1, b / a)` with `trace = b - 1 - a` and `det = a`.
pub fn brusselator_stability(a: f64, b: f64) -> Result<StabilityReport> {
    check_positive(a, b)?;
    Ok(StabilityReport::new(VecN::from_vec(vec![1.0, b / a]), b - 1.0 - a, a))
}
