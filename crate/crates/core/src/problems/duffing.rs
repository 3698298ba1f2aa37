use crate::engine::{OdeSystem, VectorField};
use crate::error::{Error, Result};
use crate::jet::OdeScalar;
use crate::linalg::MatN;

/// Quintic Duffing oscillator `y'' + y + a y^5 = 0` as `(y, y')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Duffing {
    pub a: f64,
}

impl VectorField for Duffing {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        vec![y[1].clone(), -y[0].clone() - y[0].powi(5) * self.a]
    }
}

/// Duffing system split around the harmonic oscillator: `G = (0, -a y^5)`.
pub fn duffing_system(a: f64) -> Result<OdeSystem> {
    if !(a.is_finite() && a >= 0.0) {
        return Err(Error::InvalidArgument(format!("Duffing parameter must be finite and >= 0, got {a}")));
    }
    let lin = MatN::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
    OdeSystem::new(std::sync::Arc::new(Duffing { a }), 2, lin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::VecN;

    #[test]
    fn remainder_is_quintic() {
        let sys = duffing_system(0.5).unwrap();
        let g = sys.nonlinear(0.3, &VecN::from_vec(vec![1.0, 0.0]));
        assert_eq!(g, VecN::from_vec(vec![0.0, -0.5]));
        let g = sys.nonlinear(0.0, &VecN::from_vec(vec![2.0, 7.0]));
        assert!((g[1] + 16.0).abs() < 1e-13);
    }

    #[test]
    fn negative_coefficient_rejected() {
        assert!(duffing_system(-1.0).is_err());
    }
}
