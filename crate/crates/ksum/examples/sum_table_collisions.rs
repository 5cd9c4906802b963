//! Inside the solver: the k-sum table, complementary collision pairs,
//! and the quadratic collision key.
//!
//! ```bash
//! cargo run --example sum_table_collisions
//! ```

use ksum::mitm::{build_sum_table, find_pairs, tau};
use ksum::Limit;

fn main() -> ksum::Result<()> {
    let values = [17, 2, 3, 23, 19, 1, 14, 20, 6, 10, 4, 25, 7, 49, 41, 5];
    let target: i128 = 137;
    let universe: Vec<usize> = (0..values.len()).collect();

    // every 3-element sum, sorted by value
    let table = build_sum_table(&values, &universe, 3, 1 << 20, 0)?;
    println!("built {} entries of 3-sums", table.len());

    let pairs = find_pairs(&table, target, Limit::All);
    println!("complementary disjoint pairs for target {target}: {}", pairs.len());
    for pair in pairs.iter().take(5) {
        let a = table.decode(pair.rank_a);
        let b = table.decode(pair.rank_b);
        println!(
            "  z {} + z {} = {target}; indices {:?} | {:?}; key {} = {}",
            pair.z_a,
            pair.z_b,
            a,
            b,
            tau(target, pair.z_a)?,
            tau(target, pair.z_b)?,
        );
    }

    // the key alone is ambiguous: equal sums collide too, which is why
    // pair detection matches complements and checks disjointness instead
    println!(
        "\ntau({target}, 42) = {}  tau({target}, 95) = {}  (complementary)",
        tau(target, 42)?,
        tau(target, 95)?
    );
    println!(
        "tau({target}, 7)  = {}  tau({target}, 7)  = {}  (equal, same key)",
        tau(target, 7)?,
        tau(target, 7)?
    );
    Ok(())
}
