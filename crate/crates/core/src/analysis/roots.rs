use crate::error::{Error, Result};

/// Starting information for [`root_find_scalar`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootSearch {
    /// Interval whose endpoints have function values of opposite sign.
    Bracket(f64, f64),
    /// Two starting points for the secant method.
    Seeds(f64, f64),
}

const MAX_ITER: usize = 200;
const STEP_TOL: f64 = 1e-12;

/// Root of `f` to `|f| <= tol` or a step below `1e-12`.
///
/// Brackets are refined with Brent's method (inverse quadratic / secant
/// steps guarded by bisection). Seeds run the secant method and hand over to
/// the bracketed solver as soon as a sign change is seen.
pub fn root_find_scalar(mut f: impl FnMut(f64) -> f64, search: RootSearch, tol: f64) -> Result<f64> {
    try_root_find_scalar(|x| Ok(f(x)), search, tol, MAX_ITER)
}

/// [`root_find_scalar`] for fallible functions, with an explicit iteration cap.
pub fn try_root_find_scalar(
    mut f: impl FnMut(f64) -> Result<f64>,
    search: RootSearch,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    match search {
        RootSearch::Bracket(a, b) => {
            let (fa, fb) = (f(a)?, f(b)?);
            brent(&mut f, a, fa, b, fb, tol, max_iter)
        }
        RootSearch::Seeds(x0, x1) => secant(&mut f, x0, x1, tol, max_iter),
    }
}

fn check_finite(x: f64, fx: f64) -> Result<()> {
    if fx.is_finite() {
        Ok(())
    } else {
        Err(Error::RootNotFound(format!("function is not finite at {x}")))
    }
}

fn secant(
    f: &mut impl FnMut(f64) -> Result<f64>,
    mut x0: f64,
    mut x1: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let mut f0 = f(x0)?;
    check_finite(x0, f0)?;
    if f0.abs() <= tol {
        return Ok(x0);
    }
    let mut f1 = f(x1)?;
    for _ in 0..max_iter {
        check_finite(x1, f1)?;
        if f1.abs() <= tol {
            return Ok(x1);
        }
        if f0 * f1 < 0.0 {
            return brent(f, x0, f0, x1, f1, tol, max_iter);
        }
        if f1 == f0 {
            return Err(Error::RootNotFound(format!("secant stalled at {x1}")));
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (x2 - x1).abs() <= STEP_TOL * x1.abs().max(1.0) {
            return Ok(x2);
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1)?;
    }
    Err(Error::RootNotFound(format!("secant did not converge in {max_iter} steps")))
}

fn brent(
    f: &mut impl FnMut(f64) -> Result<f64>,
    mut a: f64,
    mut fa: f64,
    mut b: f64,
    mut fb: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64> {
    check_finite(a, fa)?;
    check_finite(b, fb)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::RootNotFound(format!("no sign change on [{a}, {b}]")));
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * STEP_TOL;
        let xm = 0.5 * (c - b);
        if fb.abs() <= tol || xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
        check_finite(b, fb)?;
    }
    Err(Error::RootNotFound(format!("bracketed search did not converge in {max_iter} steps")))
}
