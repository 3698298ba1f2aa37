//! Small dense linear algebra: matrix exponential, spectral norm, and closed-form
//! integrals of matrix-exponential kernels against polynomials.

mod expm;
mod poly;

pub use expm::mat_exp;
pub use poly::VecPoly;

pub(crate) use expm::expm_unchecked;

use crate::error::{Error, Result};

/// Dense square matrix of dimension N.
pub type MatN = nalgebra::DMatrix<f64>;
/// State vector of dimension N.
pub type VecN = nalgebra::DVector<f64>;

pub(crate) fn ensure_finite_mat(a: &MatN) -> Result<()> {
    if a.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidArgument("matrix has non-finite entries".into()))
    }
}

pub(crate) fn ensure_finite_vec(v: &VecN) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidArgument("vector has non-finite components".into()))
    }
}

/// Spectral norm `sup_{|x|=1} |A x|`, i.e. the largest singular value.
pub fn op_norm(a: &MatN) -> Result<f64> {
    ensure_finite_mat(a)?;
    if a.is_empty() {
        return Ok(0.0);
    }
    Ok(a.clone().singular_values().max())
}

/// `int_{x0}^{x} e^{(x-s)A} p(s) ds` in closed form.
///
/// For `x < x0` this is the oriented integral. The value comes from one
/// exponential of the block matrix `[[A, P], [0, D]]`, where `D` is the
/// derivative operator on the monomials `(s - x0)^j` and the columns of `P` are
/// the coefficients of `p`.
pub fn exp_poly_integral(a: &MatN, x0: f64, x: f64, p: &VecPoly) -> Result<VecN> {
    let n = check_square(a)?;
    if p.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: p.dim() });
    }
    if !x0.is_finite() || !x.is_finite() {
        return Err(Error::InvalidArgument("non-finite integration limits".into()));
    }
    ensure_finite_mat(a)?;
    Ok(exp_poly_flow(a, &VecN::zeros(n), &p.recentered(x0), x - x0))
}

/// Solution at time `t` of `w' = A w + q(t)`, `w(0) = w0`, where `q` is taken
/// to be centred at zero (its stored centre is ignored).
///
/// Inputs are assumed validated by the caller.
pub(crate) fn exp_poly_flow(a: &MatN, w0: &VecN, q: &VecPoly, t: f64) -> VecN {
    let n = a.nrows();
    let d = q.degree();
    let m = n + d + 1;
    let mut big = MatN::zeros(m, m);
    big.view_mut((0, 0), (n, n)).copy_from(a);
    for (j, c) in q.coeffs().iter().enumerate() {
        big.view_mut((0, n + j), (n, 1)).copy_from(c);
    }
    for j in 1..=d {
        big[(n + j, n + j - 1)] = j as f64;
    }
    let e = expm_unchecked(&(big * t));
    let mut out = e.view((0, n), (n, 1)).clone_owned();
    if w0.iter().any(|v| *v != 0.0) {
        out += e.view((0, 0), (n, n)) * w0;
    }
    out.column(0).into_owned()
}

fn check_square(a: &MatN) -> Result<usize> {
    if a.is_square() && a.nrows() > 0 {
        Ok(a.nrows())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected a non-empty square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )))
    }
}
