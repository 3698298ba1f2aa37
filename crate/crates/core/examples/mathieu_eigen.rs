//! Characteristic values of the Mathieu equation `y'' + (r - 2q cos 2x) y = 0`
//! obtained by shooting on the Picard iterates, against the small-q series.
//!
//! `cargo run --release --example mathieu_eigen [q]`

use picard::problems::{mathieu_char_series, mathieu_char_values, percent_deviation};

fn main() -> picard::Result<()> {
    let q: f64 = std::env::args().nth(1).map(|s| s.parse().expect("q must be a number")).unwrap_or(0.1);
    for iterations in [2, 3] {
        println!("q = {q}, {iterations} iterations");
        for (k, r) in mathieu_char_values(q, iterations, 5)?.iter().enumerate() {
            let series = mathieu_char_series(q, k + 1)?;
            println!("  r{} = {r:.10}  series {series:.10}  deviation {:.2e} %", k + 1, percent_deviation(*r, series));
        }
    }
    Ok(())
}
