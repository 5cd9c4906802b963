//! Seeded instance generation and cross-checking the solvers against
//! exhaustive enumeration.
//!
//! ```bash
//! cargo run --example generate_and_verify
//! ```

use ksum::generate::{generate_instance, render_with_seed, GeneratorSpec};
use ksum::verify::{run_verify, VerifyConfig};

fn main() -> ksum::Result<()> {
    let spec = GeneratorSpec {
        n: 10,
        m: 4,
        value_min: -50,
        value_max: 50,
        seed: 7,
        planted: true,
    };
    let inst = generate_instance(&spec)?;
    println!("planted instance (same seed, same bytes):");
    print!("{}", render_with_seed(&spec, &inst));

    let cfg = VerifyConfig {
        trials: 100,
        n_min: 4,
        n_max: 12,
        seed: 2024,
        threads: 0,
    };
    println!("\ncross-checking {} random trials...", cfg.trials);
    let outcome = run_verify(&cfg)?;
    println!(
        "trials: {}, solver-vs-enumeration comparisons: {}",
        outcome.trials_run, outcome.comparisons
    );
    match outcome.failure {
        None => println!("result: pass"),
        Some(d) => println!("result: FAIL\n{d}"),
    }
    Ok(())
}
