use crate::error::{Error, Result};
use crate::linalg::{MatN, VecN, VecPoly};

/// Least-squares polynomial of the given degree through vector samples,
/// minimising the summed squared Euclidean residuals. The result is
/// expressed about `center`.
pub fn fit_forcing_polynomial(samples: &[(f64, VecN)], degree: usize, center: f64) -> Result<VecPoly> {
    let m = samples.len();
    if m < degree + 1 {
        return Err(Error::DegenerateFit(format!(
            "{m} samples cannot determine a degree-{degree} polynomial"
        )));
    }
    let dim = samples[0].1.len();
    if let Some((_, v)) = samples.iter().find(|(_, v)| v.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
    }
    if samples.iter().any(|(x, v)| !x.is_finite() || v.iter().any(|c| !c.is_finite())) {
        return Err(Error::InvalidArgument("non-finite sample".into()));
    }
    let mut xs: Vec<f64> = samples.iter().map(|(x, _)| *x).collect();
    xs.sort_by(|a, b| a.total_cmp(b));
    xs.dedup();
    if xs.len() < degree + 1 {
        return Err(Error::DegenerateFit(format!(
            "{} distinct abscissas for a degree-{degree} fit",
            xs.len()
        )));
    }

    // Work in u = (x - center) / scale so the Vandermonde columns are O(1).
    let scale = samples
        .iter()
        .map(|(x, _)| (x - center).abs())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let vander = MatN::from_fn(m, degree + 1, |i, j| ((samples[i].0 - center) / scale).powi(j as i32));
    let rhs = MatN::from_fn(m, dim, |i, k| samples[i].1[k]);

    let svd = vander.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if !(smin > 1e-13 * smax) {
        return Err(Error::DegenerateFit(format!(
            "design matrix is numerically rank deficient (condition {:.3e})",
            smax / smin
        )));
    }
    let sol = svd
        .solve(&rhs, 0.0)
        .map_err(|e| Error::DegenerateFit(e.to_string()))?;

    let coeffs = (0..=degree)
        .map(|j| {
            let s = scale.powi(j as i32);
            VecN::from_fn(dim, |k, _| sol[(j, k)] / s)
        })
        .collect();
    VecPoly::new(center, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[f64]) -> VecN {
        VecN::from_column_slice(xs)
    }

    #[test]
    fn cubic_samples_are_recovered() {
        let c = [0.3, -1.2, 2.5, 0.75];
        let f = |x: f64| c[0] + c[1] * (x - 1.0) + c[2] * (x - 1.0).powi(2) + c[3] * (x - 1.0).powi(3);
        let samples: Vec<_> = (0..8).map(|i| {
            let x = 1.0 + 0.1 * i as f64 / 7.0;
            (x, v(&[f(x), -f(x)]))
        }).collect();
        let p = fit_forcing_polynomial(&samples, 3, 1.0).unwrap();
        for j in 0..4 {
            assert!((p.coeffs()[j][0] - c[j]).abs() < 1e-12 * (1.0 + c[j].abs()) * 10f64.powi(j as i32));
            assert!((p.coeffs()[j][1] + c[j]).abs() < 1e-12 * (1.0 + c[j].abs()) * 10f64.powi(j as i32));
        }
    }

    #[test]
    fn cubic_on_unit_interval_to_1e12() {
        let c = [1.0, -0.5, 0.25, 2.0];
        let f = |x: f64| c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x;
        let samples: Vec<_> = (0..8).map(|i| {
            let x = i as f64 / 7.0;
            (x, v(&[f(x)]))
        }).collect();
        let p = fit_forcing_polynomial(&samples, 3, 0.0).unwrap();
        for j in 0..4 {
            assert!((p.coeffs()[j][0] - c[j]).abs() < 1e-12);
        }
    }

    #[test]
    fn symmetric_even_data_has_zero_slope() {
        let samples: Vec<_> = [-0.3, -0.1, 0.1, 0.3]
            .iter()
            .map(|&t| (2.0 + t, v(&[t * t + 1.0])))
            .collect();
        let p = fit_forcing_polynomial(&samples, 1, 2.0).unwrap();
        assert!(p.coeffs()[1][0].abs() < 1e-12);
    }

    #[test]
    fn coincident_abscissas_are_degenerate() {
        let samples: Vec<_> = (0..6).map(|i| (if i % 2 == 0 { 0.0 } else { 1.0 }, v(&[i as f64]))).collect();
        assert!(matches!(fit_forcing_polynomial(&samples, 3, 0.0), Err(Error::DegenerateFit(_))));
        assert!(matches!(fit_forcing_polynomial(&samples[..2], 3, 0.0), Err(Error::DegenerateFit(_))));
    }
}
