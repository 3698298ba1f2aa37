use crate::error::{Error, Result};
use crate::linalg::{exp_poly_flow, MatN, VecN, VecPoly};
use crate::quadrature::{chebyshev_lobatto_nodes, lobatto_barycentric_weights};

/// One piece of a [`PiecewiseCurve`].
#[derive(Debug, Clone)]
pub enum Segment {
    /// Explicit polynomial in `x`.
    Poly(VecPoly),
    /// `e^{(x-x0)A} start + int_{x0}^{x} e^{(x-s)A} forcing(s) ds`, evaluated
    /// in closed form. This is the exact shape of an iterate whose forcing was
    /// replaced by a fitted polynomial.
    Flow(Flow),
    /// Barycentric interpolant on Chebyshev–Lobatto points.
    Chebyshev(ChebyshevSegment),
}

#[derive(Debug, Clone)]
pub struct Flow {
    pub(crate) x0: f64,
    pub(crate) linear: MatN,
    pub(crate) start: VecN,
    /// Stored centred at `x0`.
    pub(crate) forcing: VecPoly,
}

impl Flow {
    pub fn new(x0: f64, linear: MatN, start: VecN, forcing: &VecPoly) -> Self {
        Flow { x0, linear, start, forcing: forcing.recentered(x0) }
    }

    /// The homogeneous solution through `start`.
    pub fn homogeneous(x0: f64, linear: MatN, start: VecN) -> Self {
        let n = start.len();
        Flow { x0, linear, start, forcing: VecPoly::zero(x0, n, 0) }
    }

    pub fn eval(&self, x: f64) -> VecN {
        let t = x - self.x0;
        if t == 0.0 {
            return self.start.clone();
        }
        exp_poly_flow(&self.linear, &self.start, &self.forcing, t)
    }

    pub fn forcing(&self) -> &VecPoly {
        &self.forcing
    }
}

#[derive(Debug, Clone)]
pub struct ChebyshevSegment {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    values: Vec<VecN>,
}

impl ChebyshevSegment {
    /// `values[i]` is the value at the i-th ascending Lobatto node of `[a, b]`.
    pub fn new(a: f64, b: f64, values: Vec<VecN>) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::InvalidArgument("Chebyshev segment needs at least two values".into()));
        }
        if !(b > a) {
            return Err(Error::InvalidArgument(format!("empty interval [{a}, {b}]")));
        }
        Ok(ChebyshevSegment {
            nodes: chebyshev_lobatto_nodes(n, a, b),
            weights: lobatto_barycentric_weights(n),
            values,
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[VecN] {
        &self.values
    }

    pub fn eval(&self, x: f64) -> VecN {
        let dim = self.values[0].len();
        let mut num = VecN::zeros(dim);
        let mut den = 0.0;
        for ((xi, wi), vi) in self.nodes.iter().zip(&self.weights).zip(&self.values) {
            let d = x - xi;
            if d == 0.0 {
                return vi.clone();
            }
            let c = wi / d;
            num.axpy(c, vi, 1.0);
            den += c;
        }
        num / den
    }
}

impl Segment {
    pub fn eval(&self, x: f64) -> VecN {
        match self {
            Segment::Poly(p) => p.eval(x),
            Segment::Flow(f) => f.eval(x),
            Segment::Chebyshev(c) => c.eval(x),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Segment::Poly(p) => p.dim(),
            Segment::Flow(f) => f.start.len(),
            Segment::Chebyshev(c) => c.values[0].len(),
        }
    }
}

/// Piecewise representation of an approximate solution on `[x_0, x_m]`.
#[derive(Debug, Clone)]
pub struct PiecewiseCurve {
    nodes: Vec<f64>,
    segments: Vec<Segment>,
}

impl PiecewiseCurve {
    pub fn new(nodes: Vec<f64>, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() || nodes.len() != segments.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} nodes for {} segments",
                nodes.len(),
                segments.len()
            )));
        }
        if nodes.iter().any(|x| !x.is_finite()) || nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidArgument("curve nodes must be finite and strictly ascending".into()));
        }
        let dim = segments[0].dim();
        if let Some(s) = segments.iter().find(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: s.dim() });
        }
        Ok(PiecewiseCurve { nodes, segments })
    }

    pub fn single(a: f64, b: f64, segment: Segment) -> Result<Self> {
        Self::new(vec![a, b], vec![segment])
    }

    pub(crate) fn from_parts_unchecked(nodes: Vec<f64>, segments: Vec<Segment>) -> Self {
        PiecewiseCurve { nodes, segments }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn dim(&self) -> usize {
        self.segments[0].dim()
    }

    pub fn start(&self) -> f64 {
        self.nodes[0]
    }

    pub fn end(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Index of the segment that evaluates `x`; interior nodes belong to the
    /// segment on their right, the final node to the last segment.
    pub fn segment_index(&self, x: f64) -> usize {
        let k = self.nodes.partition_point(|n| *n <= x);
        k.saturating_sub(1).min(self.segments.len() - 1)
    }

    /// Value at `x`. Abscissas outside the domain are extrapolated from the
    /// nearest segment; use [`try_eval`](Self::try_eval) to reject them.
    pub fn eval(&self, x: f64) -> VecN {
        self.segments[self.segment_index(x)].eval(x)
    }

    pub fn try_eval(&self, x: f64) -> Result<VecN> {
        let tol = 1e-12 * (1.0 + self.start().abs().max(self.end().abs()));
        if x < self.start() - tol || x > self.end() + tol {
            return Err(Error::Domain(format!(
                "{x} outside [{}, {}]",
                self.start(),
                self.end()
            )));
        }
        Ok(self.eval(x))
    }

    /// Limit from the left at `x` (evaluates the segment ending at `x` when
    /// `x` is an interior node).
    pub fn eval_left(&self, x: f64) -> VecN {
        let k = self.nodes.partition_point(|n| *n < x);
        let idx = k.saturating_sub(1).min(self.segments.len() - 1);
        self.segments[idx].eval(x)
    }

    pub fn end_value(&self) -> VecN {
        self.segments[self.segments.len() - 1].eval(self.end())
    }

    /// `count` uniformly spaced samples including both endpoints.
    pub fn sample(&self, count: usize) -> Vec<(f64, VecN)> {
        let a = self.start();
        let b = self.end();
        if count < 2 {
            return vec![(a, self.eval(a))];
        }
        (0..count)
            .map(|i| {
                let x = if i == count - 1 { b } else { a + (b - a) * i as f64 / (count - 1) as f64 };
                (x, self.eval(x))
            })
            .collect()
    }
}
