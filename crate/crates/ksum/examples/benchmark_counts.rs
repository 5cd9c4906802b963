//! Operation-count comparison: exhaustive enumeration vs the half-size
//! table, with the exact C(n,m) / C(n,k) advantage visible per row.
//!
//! ```bash
//! cargo run --example benchmark_counts
//! ```

use ksum::bench::{run_benchmark, BenchConfig};
use ksum::combinatorics::binomial;
use ksum::report::Algorithm;

fn main() -> ksum::Result<()> {
    let cfg = BenchConfig {
        points: vec![(12, 4), (14, 6), (16, 6), (18, 8), (20, 8)],
        repetitions: 1,
        algorithms: vec![Algorithm::Enumerate, Algorithm::Mitm],
        seed: 1,
        threads: 0,
        memory_cap_entries: 1 << 27,
    };
    let rows = run_benchmark(&cfg)?;

    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>10} {:>10}",
        "n", "m", "exhaustive", "table", "ratio", "predicted"
    );
    let half = rows.len() / 2;
    for (enumerate, table) in rows[..half].iter().zip(&rows[half..]) {
        let predicted = binomial(enumerate.n, enumerate.m)? / binomial(table.n, table.k)?;
        println!(
            "{:>4} {:>4} {:>12} {:>12} {:>10.1} {:>10}",
            enumerate.n,
            enumerate.m,
            enumerate.entries_built,
            table.entries_built,
            enumerate.entries_built as f64 / table.entries_built as f64,
            predicted,
        );
    }
    Ok(())
}
