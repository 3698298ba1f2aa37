//! Bratu boundary value problem `u'' + alpha e^u = 0`, `u(0) = u(1) = 0`,
//! solved by shooting on the Picard iterates and compared with the closed form.
//!
//! `cargo run --release --example bratu_shoot`

use picard::analysis::{l2_error_fn, ErrorNorm};
use picard::problems::{bratu_critical_alpha, bratu_exact, bratu_exact_theta, bratu_shoot, bratu_shoot_settings};

fn main() -> picard::Result<()> {
    println!("critical alpha = {:.6}", bratu_critical_alpha());
    for alpha in [0.5, 1.0, 2.0, 3.0] {
        let theta = bratu_exact_theta(alpha)?[0];
        for iterations in [2, 3] {
            let (slope, curve) = bratu_shoot(alpha, iterations, &bratu_shoot_settings(iterations))?;
            let err = l2_error_fn(|x| bratu_exact(theta, x), |x| curve.eval(x)[0], 0.0, 1.0, ErrorNorm::Integral);
            println!("alpha {alpha:>3}  n = {iterations}  u'(0) = {slope:.10}  error {err:.3e}");
        }
    }
    Ok(())
}
