//! The index machinery: exact binomials, lexicographic iteration,
//! ranking and unranking.
//!
//! ```bash
//! cargo run --example combinations
//! ```

use ksum::combinatorics::{binomial, combinations, Combination};

fn main() -> ksum::Result<()> {
    println!("C(16, 3) = {}", binomial(16, 3)?);
    println!("C(7, 3)  = {}", binomial(7, 3)?);
    println!("C(64, 32) = {}", binomial(64, 32)?);

    println!("\nall 3-combinations of 0..5 in lexicographic order:");
    for (rank, combo) in combinations(5, 3).enumerate() {
        println!("  rank {rank}: {combo:?}");
    }

    // ranks are positions: unrank inverts rank, successors step by one
    let c = Combination::new(16, vec![0, 1, 3])?;
    println!("\nrank of (0,1,3) over n=16: {}", c.rank()?);
    let last = Combination::unrank(16, 3, binomial(16, 3)? - 1)?;
    println!("last 3-combination of 0..16: {:?}", last.indices());

    let mut walker = Combination::first(7, 3)?;
    let mut steps = 1u64;
    while walker.advance() {
        steps += 1;
    }
    println!("\nwalked {steps} combinations of C(7,3) = {}", binomial(7, 3)?);
    Ok(())
}
