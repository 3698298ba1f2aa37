//! The linear-algebra kernel behind the iteration: matrix exponentials,
//! operator norms and closed-form integrals of `e^{(x-s)A} p(s)`.
//!
//! `cargo run --release --example matrix_exponential`

use picard::linalg::{exp_poly_integral, mat_exp, op_norm, MatN, VecN, VecPoly};

fn main() -> picard::Result<()> {
    let rotation = MatN::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
    let t = std::f64::consts::FRAC_PI_3;
    println!("exp(t A) for the rotation generator, t = pi/3:\n{}", mat_exp(&rotation, t)?);

    let stiff = MatN::from_row_slice(2, 2, &[-50.0, 49.0, 0.0, -1.0]);
    println!("||A|| = {:.4}, ||exp(A)|| = {:.4e}", op_norm(&stiff)?, op_norm(&mat_exp(&stiff, 1.0)?)?);

    // int_0^x e^{(x-s)A} p(s) ds with p(s) = (1, s) solves y' = A y + p,
    // y(0) = 0, whose solution is exactly (x, 0).
    let p = VecPoly::new(0.0, vec![VecN::from_vec(vec![1.0, 0.0]), VecN::from_vec(vec![0.0, 1.0])])?;
    for x in [0.5, 1.0, 2.0] {
        let v = exp_poly_integral(&rotation, 0.0, x, &p)?;
        println!("x = {x}: integral = ({:.15}, {:.3e})", v[0], v[1]);
    }
    Ok(())
}
