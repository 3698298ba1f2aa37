//! Runtime version of the uniform-convergence bound for the iterates:
//! `|y_k - y_{k-1}| <= H M^k K^k w^k / k!` on a segment of width `w`.

use serde::Serialize;

use crate::linalg::{op_norm, MatN, VecN};

use super::iterate::SegmentRun;
use super::system::OdeSystem;

/// Grid size used for every sup-norm in the report.
pub const DIAGNOSTIC_GRID: usize = 101;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub x0: f64,
    pub x1: f64,
    /// `sup_diffs[k - 1] = max |y_k - y_{k-1}|` over the grid, for k = 1..n.
    pub sup_diffs: Vec<f64>,
    /// `e^{2 c |A|}` with `c` the segment width (segment-local coordinates).
    pub m_est: f64,
    /// Largest sampled `|dG/dy|` along the iterates.
    pub k_est: f64,
    /// Largest sampled `|G(s, y_0(s))|`.
    pub h_est: f64,
    /// Whether `sup_diffs[k - 1]` respects the bound, per k.
    pub bound_holds: Vec<bool>,
}

impl ConvergenceReport {
    /// Sup-norm difference between iterates `k` and `k - 1` (k >= 1).
    pub fn sup_diff(&self, k: usize) -> f64 {
        self.sup_diffs[k - 1]
    }

    pub fn bound(&self, k: usize) -> f64 {
        let w = self.x1 - self.x0;
        let mut b = self.h_est;
        for j in 1..=k {
            b *= self.m_est * self.k_est * w / j as f64;
        }
        b
    }

    /// True when every recorded difference is strictly below the previous one.
    pub fn is_contracting(&self) -> bool {
        self.sup_diffs.windows(2).all(|w| w[1] < w[0])
    }
}

/// Sup differences, bound constants and per-k bound checks for one segment run.
pub fn convergence_diagnostic(sys: &OdeSystem, run: &SegmentRun) -> ConvergenceReport {
    let (x0, x1) = (run.x0, run.x1);
    let grid: Vec<f64> = (0..DIAGNOSTIC_GRID)
        .map(|i| x0 + (x1 - x0) * i as f64 / (DIAGNOSTIC_GRID - 1) as f64)
        .collect();
    let values: Vec<Vec<VecN>> = run
        .iterates
        .iter()
        .map(|seg| grid.iter().map(|x| seg.eval(*x)).collect())
        .collect();

    let sup_diffs: Vec<f64> = values
        .windows(2)
        .map(|w| {
            w[0].iter()
                .zip(&w[1])
                .map(|(a, b)| (b - a).norm())
                .fold(0.0, f64::max)
        })
        .collect();

    let a_norm = op_norm(sys.linear()).unwrap_or(f64::INFINITY);
    let m_est = (2.0 * (x1 - x0) * a_norm).exp();

    let h_est = grid
        .iter()
        .zip(&values[0])
        .map(|(x, y)| sys.nonlinear(*x, y).norm())
        .fold(0.0, f64::max);

    let mut k_est: f64 = 0.0;
    for it in values.iter().take(values.len().saturating_sub(1).max(1)) {
        for (x, y) in grid.iter().zip(it) {
            k_est = k_est.max(op_norm(&jacobian_of_nonlinear(sys, *x, y)).unwrap_or(f64::INFINITY));
        }
    }

    let mut report = ConvergenceReport {
        x0,
        x1,
        sup_diffs,
        m_est,
        k_est,
        h_est,
        bound_holds: Vec::new(),
    };
    report.bound_holds = (1..=report.sup_diffs.len())
        .map(|k| report.sup_diff(k) <= report.bound(k))
        .collect();
    report
}

fn jacobian_of_nonlinear(sys: &OdeSystem, x: f64, y: &VecN) -> MatN {
    let n = y.len();
    let mut jac = MatN::zeros(n, n);
    for j in 0..n {
        let h = 1e-6 * (1.0 + y[j].abs());
        let mut yp = y.clone();
        let mut ym = y.clone();
        yp[j] += h;
        ym[j] -= h;
        let col = (sys.nonlinear(x, &yp) - sys.nonlinear(x, &ym)) / (2.0 * h);
        jac.set_column(j, &col);
    }
    jac
}
