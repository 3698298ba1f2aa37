use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::jet::{Jet, OdeScalar};
use crate::linalg::{ensure_finite_mat, MatN, VecN};

/// Right-hand side `F(x, y)` of a first-order system.
pub trait Rhs: Send + Sync {
    fn dim(&self) -> usize;

    fn eval(&self, x: f64, y: &VecN) -> VecN;

    /// Power-series evaluation used by the Taylor integrator. Right-hand sides
    /// built from opaque closures cannot provide it.
    fn eval_jet(&self, _x: &Jet, _y: &[Jet]) -> Result<Vec<Jet>> {
        Err(Error::Unsupported(
            "right-hand side has no power-series form".into(),
        ))
    }
}

/// A right-hand side written once, generically over [`OdeScalar`]. Every
/// `VectorField` is an [`Rhs`] with a working power-series path.
pub trait VectorField: Send + Sync {
    fn dim(&self) -> usize;
    fn apply<T: OdeScalar>(&self, x: &T, y: &[T]) -> Vec<T>;
}

impl<F: VectorField> Rhs for F {
    fn dim(&self) -> usize {
        VectorField::dim(self)
    }

    fn eval(&self, x: f64, y: &VecN) -> VecN {
        VecN::from_vec(self.apply(&x, y.as_slice()))
    }

    fn eval_jet(&self, x: &Jet, y: &[Jet]) -> Result<Vec<Jet>> {
        Ok(self.apply(x, y))
    }
}

/// Adapter for plain closures `F(x, y)`.
pub struct FnRhs<F> {
    dim: usize,
    f: F,
}

impl<F> FnRhs<F>
where
    F: Fn(f64, &VecN) -> VecN + Send + Sync,
{
    pub fn new(dim: usize, f: F) -> Self {
        FnRhs { dim, f }
    }
}

impl<F> Rhs for FnRhs<F>
where
    F: Fn(f64, &VecN) -> VecN + Send + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: f64, y: &VecN) -> VecN {
        (self.f)(x, y)
    }
}

/// `y' = F(x, y)` together with a constant linear part `A`, so that
/// `F(x, y) = A y + G(x, y)`.
#[derive(Clone)]
pub struct OdeSystem {
    rhs: Arc<dyn Rhs>,
    linear: MatN,
}

impl fmt::Debug for OdeSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OdeSystem")
            .field("dim", &self.dim())
            .field("linear", &self.linear)
            .finish()
    }
}

/// Splits `rhs` as `A y + G(x, y)` with the given linear part.
pub fn split_system<R: Rhs + 'static>(rhs: R, n: usize, a: MatN) -> Result<OdeSystem> {
    OdeSystem::new(Arc::new(rhs), n, a)
}

impl OdeSystem {
    pub fn new(rhs: Arc<dyn Rhs>, n: usize, a: MatN) -> Result<Self> {
        if rhs.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: rhs.dim() });
        }
        if a.nrows() != n || a.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if a.nrows() != n { a.nrows() } else { a.ncols() },
            });
        }
        ensure_finite_mat(&a)?;
        Ok(OdeSystem { rhs, linear: a })
    }

    pub fn dim(&self) -> usize {
        self.linear.nrows()
    }

    pub fn linear(&self) -> &MatN {
        &self.linear
    }

    pub fn rhs(&self, x: f64, y: &VecN) -> VecN {
        self.rhs.eval(x, y)
    }

    pub fn rhs_jet(&self, x: &Jet, y: &[Jet]) -> Result<Vec<Jet>> {
        self.rhs.eval_jet(x, y)
    }

    /// Nonlinear remainder `G(x, y) = F(x, y) - A y`.
    pub fn nonlinear(&self, x: f64, y: &VecN) -> VecN {
        self.rhs.eval(x, y) - &self.linear * y
    }

    /// Same right-hand side with a different linear part.
    pub fn resplit(&self, a: MatN) -> Result<OdeSystem> {
        OdeSystem::new(Arc::clone(&self.rhs), self.dim(), a)
    }

    /// The split with `A = 0`, which turns the iteration into classical Picard.
    pub fn standard_split(&self) -> OdeSystem {
        OdeSystem { rhs: Arc::clone(&self.rhs), linear: MatN::zeros(self.dim(), self.dim()) }
    }
}
