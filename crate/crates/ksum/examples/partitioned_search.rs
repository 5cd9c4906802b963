//! Block-partitioned search: what pair mode sees and what composition
//! mode adds.
//!
//! ```bash
//! cargo run --example partitioned_search
//! ```

use ksum::oracle::enumerate_solutions;
use ksum::partition::{
    enumerate_compositions, make_partition, solve_composition_mode, solve_pair_mode, Strategy,
};
use ksum::{Limit, ProblemInstance, SolveOptions};

fn print_solutions(label: &str, solutions: &[ksum::Solution]) {
    println!("{label}: {} solutions", solutions.len());
    for s in solutions {
        println!("  {}", s.display_indices(false));
    }
}

fn main() -> ksum::Result<()> {
    // target 3 = {x1, x2} sits inside the first block; target 5 crosses
    let inst = ProblemInstance::new(vec![1, 2, 3, 4], 2, 5)?;
    let plan = make_partition(inst.n(), 2, Strategy::Contiguous)?;
    let opts = SolveOptions::default();

    println!("blocks: {:?}", plan.blocks());

    print_solutions(
        "pair mode, target 5",
        &solve_pair_mode(&inst, &plan, 1, 1, Limit::All, &opts)?,
    );

    let inside = inst.with_target(3);
    print_solutions(
        "pair mode, target 3 (solution hides inside one block)",
        &solve_pair_mode(&inside, &plan, 1, 1, Limit::All, &opts)?,
    );
    print_solutions(
        "exhaustive, target 3",
        &enumerate_solutions(&inside, Limit::All)?,
    );

    // composition mode covers every split of m across the blocks
    println!("\ncompositions of m=2 over blocks {:?}:", plan.blocks());
    for comp in enumerate_compositions(2, &plan) {
        println!("  {:?}", comp.counts());
    }
    print_solutions(
        "composition mode, target 3",
        &solve_composition_mode(&inside, &plan, Limit::All, &opts)?,
    );
    Ok(())
}
