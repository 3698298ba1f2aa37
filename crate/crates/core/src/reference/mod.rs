//! Fixed-step reference integrators: an explicit eighth-order Runge–Kutta
//! method with seventh-order dense output, and a Taylor-series method of
//! selectable order driven by truncated power-series arithmetic.
//!
//! Both return a [`PiecewiseCurve`](crate::engine::PiecewiseCurve) with one
//! polynomial segment per step, so they can be sampled anywhere in `[a, b]`.
//! The step grid is `a, a + step, a + 2 step, ...`, with the last step
//! truncated at `b`.

mod rk8;
mod taylor;

pub use rk8::{rk8_solve, rk8_step};
pub use taylor::{taylor_solve, JetSeries, MAX_TAYLOR_ORDER, MIN_TAYLOR_ORDER};

use crate::error::{Error, Result};
use crate::linalg::VecN;

fn check_interval(a: f64, b: f64, step: f64, y0: &VecN, n: usize) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && b > a) {
        return Err(Error::InvalidArgument(format!("bad interval [{a}, {b}]")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {step}")));
    }
    if y0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: y0.len() });
    }
    crate::linalg::ensure_finite_vec(y0)
}
