use super::VecN;
use crate::error::{Error, Result};

/// Vector-valued polynomial in the monomial basis centred at `center`:
/// `p(x) = sum_j coeffs[j] * (x - center)^j`.
///
/// The leading coefficient is kept even when it is zero, so `degree()` reports
/// the representation degree rather than the numerical one.
#[derive(Debug, Clone, PartialEq)]
pub struct VecPoly {
    center: f64,
    coeffs: Vec<VecN>,
}

impl VecPoly {
    pub fn new(center: f64, coeffs: Vec<VecN>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::InvalidArgument("polynomial needs at least one coefficient".into()))?;
        let n = first.len();
        if n == 0 {
            return Err(Error::InvalidArgument("zero-dimensional polynomial".into()));
        }
        for c in &coeffs {
            if c.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: c.len() });
            }
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidArgument("non-finite polynomial coefficient".into()));
            }
        }
        if !center.is_finite() {
            return Err(Error::InvalidArgument("non-finite polynomial centre".into()));
        }
        Ok(VecPoly { center, coeffs })
    }

    pub fn constant(center: f64, value: VecN) -> Result<Self> {
        Self::new(center, vec![value])
    }

    pub fn zero(center: f64, n: usize, degree: usize) -> Self {
        VecPoly { center, coeffs: vec![VecN::zeros(n); degree + 1] }
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].len()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn coeffs(&self) -> &[VecN] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> VecN {
        let t = x - self.center;
        let mut acc = self.coeffs[self.degree()].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc *= t;
            acc += c;
        }
        acc
    }

    /// Same polynomial expressed about a new centre (Taylor shift).
    pub fn recentered(&self, center: f64) -> VecPoly {
        let shift = center - self.center;
        if shift == 0.0 {
            return self.clone();
        }
        // Repeated synthetic division by (t - shift).
        let mut c = self.coeffs.clone();
        let d = self.degree();
        for i in 0..d {
            for j in (i..d).rev() {
                let next = c[j + 1].clone();
                c[j] += next * shift;
            }
        }
        VecPoly { center, coeffs: c }
    }

    /// Derivative with respect to x.
    pub fn derivative(&self) -> VecPoly {
        if self.degree() == 0 {
            return VecPoly::zero(self.center, self.dim(), 0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        VecPoly { center: self.center, coeffs }
    }
}
