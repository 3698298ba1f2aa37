//! Matrix exponential by scaling and squaring with diagonal Padé approximants.

use super::{ensure_finite_mat, MatN};
use crate::error::{Error, Result};

// Backward-error thresholds on the 1-norm for the [m/m] approximants, m = 3, 5, 7, 9, 13.
const THETA: [(usize, f64); 5] = [
    (3, 1.495585217958292e-2),
    (5, 2.539398330063230e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
    (13, 5.371920351148152e0),
];

/// Returns `e^{tA}`.
pub fn mat_exp(a: &MatN, t: f64) -> Result<MatN> {
    if !a.is_square() {
        return Err(Error::InvalidArgument(format!(
            "matrix exponential needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    ensure_finite_mat(a)?;
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("non-finite scale {t}")));
    }
    Ok(expm_unchecked(&(a * t)))
}

pub(crate) fn expm_unchecked(a: &MatN) -> MatN {
    let n = a.nrows();
    let norm = norm1(a);
    if norm == 0.0 {
        return MatN::identity(n, n);
    }
    for &(m, theta) in &THETA[..4] {
        if norm <= theta {
            return pade(a, m);
        }
    }
    let (_, theta13) = THETA[4];
    let s = (norm / theta13).log2().ceil().max(0.0) as i32;
    let scaled = a * 0.5f64.powi(s);
    let mut r = pade(&scaled, 13);
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

fn norm1(a: &MatN) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Coefficients of the [m/m] Padé numerator of `e^x`, normalised so the
/// constant term is one.
fn pade_coefficients(m: usize) -> Vec<f64> {
    let mut c = vec![1.0; m + 1];
    for i in 1..=m {
        c[i] = c[i - 1] * (m - i + 1) as f64 / (i * (2 * m - i + 1)) as f64;
    }
    c
}

fn pade(a: &MatN, m: usize) -> MatN {
    let n = a.nrows();
    let c = pade_coefficients(m);
    let a2 = a * a;
    // Horner in A^2 for the even part V and the odd part U / A.
    let mut even = MatN::identity(n, n) * c[m - m % 2];
    let mut odd = MatN::identity(n, n) * c[m - 1 + m % 2];
    let mut k = m - m % 2;
    while k >= 2 {
        k -= 2;
        even = &a2 * &even + MatN::identity(n, n) * c[k];
    }
    let mut k = m - 1 + m % 2;
    while k >= 3 {
        k -= 2;
        odd = &a2 * &odd + MatN::identity(n, n) * c[k];
    }
    let u = a * odd;
    let num = &even + &u;
    let den = &even - &u;
    den.lu()
        .solve(&num)
        .expect("Padé denominator is nonsingular within the norm thresholds")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs_diff(a: &MatN, b: &MatN) -> f64 {
        (a - b).iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    #[test]
    fn pade_coefficients_match_the_classical_table() {
        // b_i / b_0 for m = 3 is 120, 60, 12, 1 normalised.
        let c = pade_coefficients(3);
        let expected = [1.0, 0.5, 0.1, 1.0 / 120.0];
        for (x, y) in c.iter().zip(expected) {
            assert!((x - y).abs() < 1e-16);
        }
        let c13 = pade_coefficients(13);
        assert!((c13[13] - 1.0 / 64764752532480000.0).abs() < 1e-30);
    }

    #[test]
    fn zero_exponent_is_identity() {
        let a = MatN::from_row_slice(3, 3, &[1.0, 2.0, 3.0, -4.0, 5.0, 6.0, 7.0, 8.0, -9.0]);
        assert_eq!(mat_exp(&a, 0.0).unwrap(), MatN::identity(3, 3));
    }

    #[test]
    fn nilpotent_generator() {
        let a = MatN::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        for t in [-3.0, 0.25, 1.0, 7.5] {
            let e = mat_exp(&a, t).unwrap();
            let expected = MatN::from_row_slice(2, 2, &[1.0, t, 0.0, 1.0]);
            assert!(max_abs_diff(&e, &expected) < 1e-14 * (1.0 + t.abs()));
        }
    }

    #[test]
    fn rotation_generator() {
        let a = MatN::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        for t in [0.1, 1.0, std::f64::consts::FRAC_PI_2, 10.0, 40.0] {
            let e = mat_exp(&a, t).unwrap();
            let expected = MatN::from_row_slice(2, 2, &[t.cos(), t.sin(), -t.sin(), t.cos()]);
            assert!(max_abs_diff(&e, &expected) < 1e-13, "t = {t}");
        }
    }

    #[test]
    fn diagonal_matrix_relative_accuracy() {
        let a = MatN::from_diagonal(&nalgebra::DVector::from_vec(vec![-20.0, 0.5, 25.0]));
        let e = mat_exp(&a, 2.0).unwrap();
        for (i, d) in [-20.0f64, 0.5, 25.0].iter().enumerate() {
            let exact = (2.0 * d).exp();
            assert!(((e[(i, i)] - exact) / exact).abs() < 1e-13);
        }
    }

    #[test]
    fn rejects_non_finite_input() {
        let a = MatN::from_row_slice(1, 1, &[f64::NAN]);
        assert!(matches!(mat_exp(&a, 1.0), Err(Error::InvalidArgument(_))));
        let b = MatN::identity(2, 2);
        assert!(matches!(mat_exp(&b, f64::INFINITY), Err(Error::InvalidArgument(_))));
    }
}
