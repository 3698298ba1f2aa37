//! Gauss–Legendre rules and Chebyshev node sets.

use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss–Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Gauss–Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    (
        x.iter().map(|t| mid + half * t).collect(),
        w.iter().map(|v| v * half).collect(),
    )
}

/// Chebyshev–Gauss nodes (roots of `T_n`) on `[a, b]`, ascending. Endpoints excluded.
pub fn chebyshev_gauss_nodes(n: usize, a: f64, b: f64) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let t = -((2 * k + 1) as f64 * PI / (2 * n) as f64).cos();
            0.5 * (a + b) + 0.5 * (b - a) * t
        })
        .collect()
}

/// Chebyshev–Lobatto nodes (extrema of `T_{n-1}`) on `[a, b]`, ascending, with
/// the endpoints reproduced exactly.
pub fn chebyshev_lobatto_nodes(n: usize, a: f64, b: f64) -> Vec<f64> {
    assert!(n >= 2, "Lobatto set needs both endpoints");
    let m = (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k == 0 {
                a
            } else if k == n - 1 {
                b
            } else {
                let t = -(k as f64 * PI / m).cos();
                0.5 * (a + b) + 0.5 * (b - a) * t
            }
        })
        .collect()
}

/// Barycentric weights for the Chebyshev–Lobatto node set of size `n`
/// (ascending order).
pub(crate) fn lobatto_barycentric_weights(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let sign = if (n - 1 - k) % 2 == 0 { 1.0 } else { -1.0 };
            if k == 0 || k == n - 1 {
                0.5 * sign
            } else {
                sign
            }
        })
        .collect()
}
