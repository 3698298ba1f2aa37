//! Scalar abstraction shared by plain `f64` evaluation and truncated power
//! series ("jets"), so one right-hand side definition serves both the
//! iteration engine and the Taylor integrator.

use std::ops::{Add, Mul, Neg, Sub};

/// Arithmetic needed to write the benchmark right-hand sides once.
pub trait OdeScalar:
    Clone
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
{
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn exp(&self) -> Self;

    fn powi(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a * base.clone(),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc.unwrap_or_else(|| self.constant_like(1.0))
    }

    /// A constant of the same kind (and truncation order) as `self`.
    fn constant_like(&self, c: f64) -> Self;
}

impl OdeScalar for f64 {
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn powi(&self, n: u32) -> Self {
        f64::powi(*self, n as i32)
    }
    fn constant_like(&self, c: f64) -> Self {
        c
    }
}

/// Truncated Taylor series `sum_{j<=order} c_j t^j` about some abscissa.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    pub fn constant(value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Jet { coeffs }
    }

    /// The independent variable `x0 + t`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut j = Jet::constant(x0, order);
        if order >= 1 {
            j.coeffs[1] = 1.0;
        }
        j
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "jet needs at least the constant term");
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs[j]
    }

    pub(crate) fn set_coeff(&mut self, j: usize, v: f64) {
        self.coeffs[j] = v;
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    fn zip_with(self, rhs: Jet, f: impl Fn(f64, f64) -> f64) -> Jet {
        debug_assert_eq!(self.order(), rhs.order());
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(*a, *b)).collect();
        Jet { coeffs }
    }

    fn sin_cos(&self) -> (Jet, Jet) {
        let n = self.coeffs.len();
        let a = &self.coeffs;
        let mut s = vec![0.0; n];
        let mut c = vec![0.0; n];
        s[0] = a[0].sin();
        c[0] = a[0].cos();
        for k in 1..n {
            let mut sk = 0.0;
            let mut ck = 0.0;
            for j in 1..=k {
                let ja = j as f64 * a[j];
                sk += ja * c[k - j];
                ck -= ja * s[k - j];
            }
            s[k] = sk / k as f64;
            c[k] = ck / k as f64;
        }
        (Jet { coeffs: s }, Jet { coeffs: c })
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        debug_assert_eq!(self.order(), rhs.order());
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Jet { coeffs: out }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(mut self) -> Jet {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.coeffs[0] += rhs;
        self
    }
}

impl Sub<f64> for Jet {
    type Output = Jet;
    fn sub(mut self, rhs: f64) -> Jet {
        self.coeffs[0] -= rhs;
        self
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(mut self, rhs: f64) -> Jet {
        self.coeffs.iter_mut().for_each(|c| *c *= rhs);
        self
    }
}

impl OdeScalar for Jet {
    fn sin(&self) -> Self {
        self.sin_cos().0
    }
    fn cos(&self) -> Self {
        self.sin_cos().1
    }
    fn exp(&self) -> Self {
        let n = self.coeffs.len();
        let a = &self.coeffs;
        let mut e = vec![0.0; n];
        e[0] = a[0].exp();
        for k in 1..n {
            let s: f64 = (1..=k).map(|j| j as f64 * a[j] * e[k - j]).sum();
            e[k] = s / k as f64;
        }
        Jet { coeffs: e }
    }
    fn constant_like(&self, c: f64) -> Self {
        Jet::constant(c, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    #[test]
    fn exp_of_variable_is_exponential_series() {
        let t = Jet::variable(0.0, 8);
        let e = t.exp();
        for k in 0..=8 {
            assert!((e.coeff(k) - 1.0 / factorial(k)).abs() < 1e-15);
        }
    }

    #[test]
    fn sin_cos_about_a_point() {
        let x0 = 0.7;
        let x = Jet::variable(x0, 6);
        let s = x.sin();
        let c = x.cos();
        // d^k/dx^k sin = sin(x + k pi/2)
        for k in 0..=6 {
            let ds = (x0 + k as f64 * std::f64::consts::FRAC_PI_2).sin() / factorial(k);
            let dc = (x0 + k as f64 * std::f64::consts::FRAC_PI_2).cos() / factorial(k);
            assert!((s.coeff(k) - ds).abs() < 1e-15);
            assert!((c.coeff(k) - dc).abs() < 1e-15);
        }
    }

    #[test]
    fn powi_matches_repeated_product() {
        let a = Jet::from_coeffs(vec![1.5, -0.5, 0.25, 0.125]);
        let p5 = a.powi(5);
        let manual = a.clone() * a.clone() * a.clone() * a.clone() * a.clone();
        for k in 0..4 {
            assert!((p5.coeff(k) - manual.coeff(k)).abs() < 1e-13);
        }
        assert_eq!(a.powi(0), Jet::constant(1.0, 3));
        assert_eq!(2.0f64.powi(5), 32.0);
    }

    #[test]
    fn mixed_scalar_ops() {
        let a = Jet::variable(2.0, 2);
        let b = (a.clone() * 3.0 + 1.0 - 0.5) * a;
        // (3(2+t) + 0.5)(2+t) = 13 + 12.5 t + 3 t^2
        assert_eq!(b.coeffs(), &[13.0, 12.5, 3.0]);
        assert_eq!(b.eval(1.0), 28.5);
    }
}
