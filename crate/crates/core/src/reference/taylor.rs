use crate::engine::{segment_nodes, OdeSystem, PiecewiseCurve, Segment};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::{VecN, VecPoly};

pub const MIN_TAYLOR_ORDER: usize = 2;
pub const MAX_TAYLOR_ORDER: usize = 10;

/// Truncated Taylor expansion of the solution through `(x0, y0)`:
/// `y(x0 + t) ~ sum_{j <= order} coeffs[j] t^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetSeries {
    x0: f64,
    coeffs: Vec<VecN>,
}

impl JetSeries {
    /// Coefficients by Picard-style recursion on power series: the degree-j
    /// coefficient of `F(x, y)` only depends on coefficients `<= j` of `y`,
    /// so `c_{j+1} = F_j / (j + 1)`.
    pub fn expand(sys: &OdeSystem, x0: f64, y0: &VecN, order: usize) -> Result<Self> {
        let n = sys.dim();
        if y0.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: y0.len() });
        }
        let x = Jet::variable(x0, order);
        let mut y: Vec<Jet> = y0.iter().map(|&v| Jet::constant(v, order)).collect();
        for j in 0..order {
            let f = sys.rhs_jet(&x, &y)?;
            for (yi, fi) in y.iter_mut().zip(&f) {
                yi.set_coeff(j + 1, fi.coeff(j) / (j + 1) as f64);
            }
        }
        let coeffs = (0..=order)
            .map(|j| VecN::from_iterator(n, y.iter().map(|yi| yi.coeff(j))))
            .collect();
        Ok(JetSeries { x0, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].len()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[VecN] {
        &self.coeffs
    }

    /// Value at `x0 + t`.
    pub fn eval(&self, t: f64) -> VecN {
        let mut acc = self.coeffs[self.order()].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * t + c;
        }
        acc
    }

    pub fn to_poly(&self) -> Result<VecPoly> {
        VecPoly::new(self.x0, self.coeffs.clone())
    }
}

/// Fixed-step Taylor method of order `order` (2..=10). The step polynomial
/// doubles as dense output.
pub fn taylor_solve(
    sys: &OdeSystem,
    a: f64,
    b: f64,
    y0: &VecN,
    step: f64,
    order: usize,
) -> Result<PiecewiseCurve> {
    super::check_interval(a, b, step, y0, sys.dim())?;
    if !(MIN_TAYLOR_ORDER..=MAX_TAYLOR_ORDER).contains(&order) {
        return Err(Error::InvalidArgument(format!(
            "Taylor order must lie in {MIN_TAYLOR_ORDER}..={MAX_TAYLOR_ORDER}, got {order}"
        )));
    }
    let nodes = segment_nodes(a, b, step);
    let mut segments = Vec::with_capacity(nodes.len() - 1);
    let mut y = y0.clone();
    for (i, w) in nodes.windows(2).enumerate() {
        let series = JetSeries::expand(sys, w[0], &y, order)?;
        let y_new = series.eval(w[1] - w[0]);
        let poly = series.to_poly();
        match poly {
            Ok(p) if y_new.iter().all(|v| v.is_finite() && v.abs() <= crate::engine::DIVERGENCE_LIMIT) => {
                segments.push(Segment::Poly(p));
            }
            _ => return Err(Error::Divergence { segment: i, iteration: 0 }),
        }
        y = y_new;
    }
    PiecewiseCurve::new(nodes, segments)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{FnRhs, VectorField};
    use crate::jet::OdeScalar;
    use crate::linalg::MatN;
    use std::sync::Arc;

    struct Growth;
    impl VectorField for Growth {
        fn dim(&self) -> usize {
            1
        }
        fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
            vec![y[0].clone()]
        }
    }

    fn growth() -> OdeSystem {
        OdeSystem::new(Arc::new(Growth), 1, MatN::zeros(1, 1)).unwrap()
    }

    #[test]
    fn one_step_is_truncated_exponential_series() {
        let h = 0.3;
        for p in MIN_TAYLOR_ORDER..=MAX_TAYLOR_ORDER {
            let c = taylor_solve(&growth(), 0.0, h, &VecN::from_element(1, 1.0), h, p).unwrap();
            let mut expected = 0.0;
            let mut term = 1.0;
            for j in 0..=p {
                expected += term;
                term *= h / (j + 1) as f64;
            }
            assert!((c.end_value()[0] - expected).abs() < 1e-15, "order {p}");
        }
    }

    #[test]
    fn order_bounds_are_enforced() {
        let y0 = VecN::from_element(1, 1.0);
        assert!(taylor_solve(&growth(), 0.0, 1.0, &y0, 0.1, 1).is_err());
        assert!(taylor_solve(&growth(), 0.0, 1.0, &y0, 0.1, 11).is_err());
    }

    #[test]
    fn closures_are_unsupported() {
        let sys = OdeSystem::new(Arc::new(FnRhs::new(1, |_x, y: &VecN| y.clone())), 1, MatN::zeros(1, 1)).unwrap();
        let err = taylor_solve(&sys, 0.0, 1.0, &VecN::from_element(1, 1.0), 0.1, 4).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn last_step_is_truncated() {
        let c = taylor_solve(&growth(), 0.0, 1.05, &VecN::from_element(1, 1.0), 0.1, 10).unwrap();
        assert_eq!(c.nodes().len(), 12);
        assert!((c.end_value()[0] - 1.05f64.exp()).abs() < 1e-13);
    }
}
