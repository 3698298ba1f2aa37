//! Independent numerical oracles shared by the integration tests. Nothing
//! here calls into the crate's own exponential, quadrature or integrators.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Matrix exponential by a plain Taylor series with scaling and squaring.
pub fn expm_taylor(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    let norm = a.abs().row_sum().max();
    let mut s = 0;
    while norm / 2f64.powi(s) > 0.25 {
        s += 1;
    }
    let b = a / 2f64.powi(s);
    let mut term = DMatrix::<f64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..40 {
        term = &term * &b / k as f64;
        sum += &term;
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` from the Golub–Welsch
/// eigenvalue problem.
pub fn golub_welsch(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut j = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let kf = k as f64;
        let beta = kf / (4.0 * kf * kf - 1.0).sqrt();
        j[(k, k - 1)] = beta;
        j[(k - 1, k)] = beta;
    }
    let eig = SymmetricEigen::new(j);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eig.eigenvalues[i], 2.0 * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    pairs.into_iter().unzip()
}

/// `int_a^b f` with a composite Golub–Welsch rule of `n` points on `panels` panels.
pub fn integrate_vec(f: impl Fn(f64) -> DVector<f64>, a: f64, b: f64, n: usize, panels: usize) -> DVector<f64> {
    let (x, w) = golub_welsch(n);
    let width = (b - a) / panels as f64;
    let mut acc: Option<DVector<f64>> = None;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        for (xi, wi) in x.iter().zip(&w) {
            let v = f(lo + 0.5 * width * (xi + 1.0)) * (0.5 * width * wi);
            acc = Some(match acc {
                Some(s) => s + v,
                None => v,
            });
        }
    }
    acc.unwrap()
}

/// Classical fixed-step RK4 for `y' = f(x, y)`, returned on the step grid.
pub fn rk4(f: impl Fn(f64, &DVector<f64>) -> DVector<f64>, a: f64, b: f64, y0: DVector<f64>, steps: usize) -> Vec<(f64, DVector<f64>)> {
    let h = (b - a) / steps as f64;
    let mut out = vec![(a, y0.clone())];
    let mut y = y0;
    for i in 0..steps {
        let x = a + i as f64 * h;
        let k1 = f(x, &y);
        let k2 = f(x + h / 2.0, &(&y + &k1 * (h / 2.0)));
        let k3 = f(x + h / 2.0, &(&y + &k2 * (h / 2.0)));
        let k4 = f(x + h, &(&y + &k3 * h));
        y = &y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        out.push((a + (i + 1) as f64 * h, y.clone()));
    }
    out
}

pub fn v(xs: &[f64]) -> DVector<f64> {
    DVector::from_column_slice(xs)
}

pub fn m(n: usize, xs: &[f64]) -> DMatrix<f64> {
    DMatrix::from_row_slice(n, n, xs)
}
