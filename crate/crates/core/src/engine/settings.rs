use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the particular solution `int e^{(x-s)A} G(s, y_{k-1}(s)) ds` is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    /// Replace the forcing by its least-squares polynomial on the segment and
    /// integrate exactly.
    PolyFit,
    /// Gauss–Legendre quadrature at Chebyshev points; the iterate is stored as
    /// the Chebyshev interpolant.
    Quadrature,
}

/// Choice of the zeroth iterate on each segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedRule {
    /// `e^{(x-x_s)A} y(x_s)`.
    Homogeneous,
    /// The constant initial value `y(x_s)`.
    InitialValue,
    /// The final iterate of the previous segment, continued past its end.
    /// The first segment falls back to the homogeneous seed.
    PreviousSegment,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolveSettings {
    /// Segment width.
    pub h: f64,
    /// Iterations per segment; zero returns the seed.
    pub n_iter: usize,
    /// Degree of the least-squares forcing polynomial, 1 or 3.
    pub fit_degree: usize,
    /// Chebyshev–Gauss sample count for the fit.
    pub fit_samples: usize,
    pub backend: Backend,
    /// Gauss–Legendre order and interpolation point count of the quadrature backend.
    pub quad_points: usize,
    pub seed: SeedRule,
}

impl Default for SolveSettings {
    fn default() -> Self {
        SolveSettings {
            h: 0.1,
            n_iter: 3,
            fit_degree: 3,
            fit_samples: 8,
            backend: Backend::PolyFit,
            quad_points: 16,
            seed: SeedRule::Homogeneous,
        }
    }
}

impl SolveSettings {
    pub fn poly_fit(h: f64, n_iter: usize, fit_degree: usize) -> Self {
        SolveSettings { h, n_iter, fit_degree, ..Default::default() }
    }

    pub fn quadrature(h: f64, n_iter: usize, quad_points: usize) -> Self {
        SolveSettings { h, n_iter, backend: Backend::Quadrature, quad_points, ..Default::default() }
    }

    pub fn with_seed(mut self, seed: SeedRule) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h.is_finite() && self.h > 0.0) {
            return Err(Error::InvalidArgument(format!("segment width must be positive, got {}", self.h)));
        }
        if self.fit_degree != 1 && self.fit_degree != 3 {
            return Err(Error::InvalidArgument(format!(
                "fit degree must be 1 or 3, got {}",
                self.fit_degree
            )));
        }
        if self.fit_samples < self.fit_degree + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} fit samples cannot determine a degree-{} polynomial",
                self.fit_samples, self.fit_degree
            )));
        }
        if self.quad_points < 2 {
            return Err(Error::InvalidArgument("quadrature backend needs at least two points".into()));
        }
        Ok(())
    }
}
