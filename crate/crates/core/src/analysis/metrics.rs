use crate::engine::PiecewiseCurve;
use crate::error::{Error, Result};

/// Number of uniform samples used by the composite Simpson rule.
pub const ERROR_SAMPLES: usize = 2001;

/// How the squared deviation integral is normalised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorNorm {
    /// `(1 / (b - a)) int_a^b (ref - cand)^2`.
    Mean,
    /// `int_a^b (ref - cand)^2` without the length prefactor.
    Integral,
}

/// `int_a^b g(x) dx` by composite Simpson on [`ERROR_SAMPLES`] points.
pub fn simpson(mut g: impl FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = ERROR_SAMPLES - 1;
    let h = (b - a) / m as f64;
    let mut sum = g(a) + g(b);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * g(a + i as f64 * h);
    }
    sum * h / 3.0
}

/// Squared-deviation error between two scalar functions on `[a, b]`.
pub fn l2_error_fn(reference: impl Fn(f64) -> f64, candidate: impl Fn(f64) -> f64, a: f64, b: f64, norm: ErrorNorm) -> f64 {
    let integral = simpson(
        |x| {
            let d = reference(x) - candidate(x);
            d * d
        },
        a,
        b,
    );
    match norm {
        ErrorNorm::Mean => integral / (b - a),
        ErrorNorm::Integral => integral,
    }
}

fn covers(curve: &PiecewiseCurve, a: f64, b: f64) -> bool {
    let slack = 1e-12 * (b - a).abs().max(1.0);
    curve.start() <= a + slack && curve.end() >= b - slack
}

fn check_curves(reference: &PiecewiseCurve, candidate: &PiecewiseCurve, a: f64, b: f64, component: usize) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && b > a) {
        return Err(Error::InvalidArgument(format!("bad interval [{a}, {b}]")));
    }
    for (name, c) in [("reference", reference), ("candidate", candidate)] {
        if !covers(c, a, b) {
            return Err(Error::Domain(format!(
                "{name} covers [{}, {}], not [{a}, {b}]",
                c.start(),
                c.end()
            )));
        }
        if component >= c.dim() {
            return Err(Error::DimensionMismatch { expected: component + 1, got: c.dim() });
        }
    }
    Ok(())
}

/// `(1 / (b - a)) int_a^b (ref_i - cand_i)^2 dx` for component `i`.
pub fn l2_mean_error(
    reference: &PiecewiseCurve,
    candidate: &PiecewiseCurve,
    a: f64,
    b: f64,
    component: usize,
) -> Result<f64> {
    l2_error(reference, candidate, a, b, component, ErrorNorm::Mean)
}

/// Squared-deviation error of component `component` with the chosen normalisation.
pub fn l2_error(
    reference: &PiecewiseCurve,
    candidate: &PiecewiseCurve,
    a: f64,
    b: f64,
    component: usize,
    norm: ErrorNorm,
) -> Result<f64> {
    check_curves(reference, candidate, a, b, component)?;
    Ok(l2_error_fn(
        |x| reference.eval(x)[component],
        |x| candidate.eval(x)[component],
        a,
        b,
        norm,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Segment;
    use crate::linalg::{VecN, VecPoly};

    fn constant(v: f64, a: f64, b: f64) -> PiecewiseCurve {
        let p = VecPoly::constant(a, VecN::from_vec(vec![v, 0.0])).unwrap();
        PiecewiseCurve::single(a, b, Segment::Poly(p)).unwrap()
    }

    #[test]
    fn identical_and_shifted() {
        let c = constant(1.0, 0.0, 3.0);
        assert_eq!(l2_mean_error(&c, &c, 0.0, 3.0, 0).unwrap(), 0.0);
        let d = constant(1.25, 0.0, 3.0);
        assert!((l2_mean_error(&c, &d, 0.0, 3.0, 0).unwrap() - 0.0625).abs() < 1e-15);
        assert!((l2_error(&c, &d, 0.0, 3.0, 0, ErrorNorm::Integral).unwrap() - 0.1875).abs() < 1e-15);
    }

    #[test]
    fn simpson_is_exact_for_cubics() {
        let v = simpson(|x| x * x * x - x, 0.0, 2.0);
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn domain_mismatch() {
        let c = constant(1.0, 0.0, 3.0);
        let d = constant(1.0, 0.5, 3.0);
        assert!(matches!(l2_mean_error(&c, &d, 0.0, 3.0, 0), Err(Error::Domain(_))));
        assert!(l2_mean_error(&c, &c, 0.0, 3.0, 2).is_err());
    }
}
