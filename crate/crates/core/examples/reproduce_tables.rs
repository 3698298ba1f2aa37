//! Regenerates every benchmark error table and prints it as CSV.
//!
//! `cargo run --release --example reproduce_tables [T1 T2 ...]`

use picard::analysis::{reproduce_table, TableId, TableOverrides};

fn main() -> picard::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ids: Vec<TableId> = if args.is_empty() {
        TableId::ALL.to_vec()
    } else {
        args.iter().map(|a| a.parse()).collect::<picard::Result<_>>()?
    };
    for id in ids {
        let start = std::time::Instant::now();
        let table = reproduce_table(id, &TableOverrides::default())?;
        println!("# {id}: {} ({:.1?})", id.description(), start.elapsed());
        table.write_csv(std::io::stdout())?;
        println!();
    }
    Ok(())
}
