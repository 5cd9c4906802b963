//! End-to-end solve with the half-size table method.
//!
//! ```bash
//! cargo run --example solve_instance
//! ```

use ksum::{mitm, ProblemInstance, SolveOptions};

fn main() -> ksum::Result<()> {
    let inst = ProblemInstance::parse(
        "16 6 137\n17 2 3 23 19 1 14 20 6 10 4 25 7 49 41 5",
    )?;
    println!(
        "searching for {}-element subsets of {} values summing to {}",
        inst.cardinality(),
        inst.n(),
        inst.target()
    );
    let range = inst.feasible_range()?;
    println!("feasible range: [{}, {}]", range.s_min, range.s_max);

    let report = mitm::solve(&inst, &SolveOptions::default())?;
    println!("status: {}", report.status);
    for solution in &report.solutions {
        let values: Vec<String> = solution
            .indices()
            .iter()
            .map(|&i| inst.values()[i].to_string())
            .collect();
        println!(
            "  indices {} -> values {} = {}",
            solution.display_indices(false),
            values.join(" + "),
            inst.target()
        );
    }
    println!(
        "table entries built: {} (vs {} combinations for exhaustive search)",
        report.entries_built,
        ksum::combinatorics::binomial(inst.n(), inst.cardinality())?
    );
    println!("complement lookups: {}", report.probes);
    Ok(())
}
