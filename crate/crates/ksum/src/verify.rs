//! Randomized cross-checking of every solver against the exhaustive
//! reference.
//!
//! Each trial generates a seeded instance, runs the table solvers and
//! the partition composition solver, and compares their solution sets to
//! enumeration. The schedule is fully determined by the config, so a
//! failure can be replayed verbatim.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generate::{generate_instance, render_with_seed, GeneratorSpec};
use crate::mitm;
use crate::oracle::{enumerate_solutions, Solution};
use crate::partition::{make_partition, solve_composition_mode, Strategy};
use crate::{Limit, SolveOptions};

/// Largest n the exhaustive oracle is allowed to face.
pub const ORACLE_GUARD_N: usize = 20;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub trials: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub threads: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            n_min: 4,
            n_max: 14,
            seed: 0,
            threads: 0,
        }
    }
}

/// First disagreement found, with everything needed to replay it.
#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub trial: u64,
    pub solver: String,
    pub instance_text: String,
    pub expected: Vec<Solution>,
    pub actual: Vec<Solution>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "solver `{}` disagreed with enumeration on trial {}",
            self.solver, self.trial
        )?;
        writeln!(f, "instance:")?;
        write!(f, "{}", self.instance_text)?;
        writeln!(f, "expected {} solutions:", self.expected.len())?;
        for s in &self.expected {
            writeln!(f, "  {}", s.display_indices(false))?;
        }
        writeln!(f, "got {} solutions:", self.actual.len())?;
        for s in &self.actual {
            writeln!(f, "  {}", s.display_indices(false))?;
        }
        Ok(())
    }
}

#[derive(Debug)]
pub struct VerifyOutcome {
    pub trials_run: u64,
    pub comparisons: u64,
    pub failure: Option<Discrepancy>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The deterministic trial schedule for a config: sizes, cardinalities,
/// value ranges (signed and natural alternate), planted flag, seeds.
pub fn trial_specs(cfg: &VerifyConfig) -> Vec<GeneratorSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials)
        .map(|trial| {
            let n = rng.gen_range(cfg.n_min..=cfg.n_max);
            let m = rng.gen_range(0..=n);
            let (value_min, value_max) = if trial % 2 == 0 { (-50, 50) } else { (1, 100) };
            let planted = rng.gen::<bool>();
            GeneratorSpec {
                n,
                m,
                value_min,
                value_max,
                seed: rng.gen(),
                planted,
            }
        })
        .collect()
}

fn guard(cfg: &VerifyConfig) -> Result<()> {
    if cfg.n_max > ORACLE_GUARD_N {
        return Err(Error::InvalidArgument(format!(
            "n_max {} exceeds the enumeration guard {ORACLE_GUARD_N}",
            cfg.n_max
        )));
    }
    if cfg.n_min > cfg.n_max {
        return Err(Error::InvalidArgument(format!(
            "empty size range [{}, {}]",
            cfg.n_min, cfg.n_max
        )));
    }
    Ok(())
}

/// The solver runs compared on each trial instance.
fn solver_runs(
    inst: &crate::ProblemInstance,
    threads: usize,
) -> Result<Vec<(String, Vec<Solution>)>> {
    let opts = SolveOptions {
        threads,
        ..SolveOptions::default()
    };
    let mut runs = vec![("mitm".to_string(), mitm::solve(inst, &opts)?.solutions)];
    let no_complement = SolveOptions {
        use_complement: false,
        ..opts.clone()
    };
    runs.push((
        "mitm-no-complement".to_string(),
        mitm::solve(inst, &no_complement)?.solutions,
    ));
    for n_blocks in [2usize, 3] {
        if n_blocks <= inst.n() {
            let plan = make_partition(inst.n(), n_blocks, Strategy::Contiguous)?;
            runs.push((
                format!("partition-composition/{n_blocks}"),
                solve_composition_mode(inst, &plan, Limit::All, &opts)?,
            ));
        }
    }
    Ok(runs)
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyOutcome> {
    guard(cfg)?;
    let mut comparisons = 0u64;
    for (trial, spec) in trial_specs(cfg).iter().enumerate() {
        let trial = trial as u64;
        let inst = generate_instance(spec)?;
        let expected = enumerate_solutions(&inst, Limit::All)?;
        let expected_sets: BTreeSet<&Solution> = expected.iter().collect();
        for (solver, actual) in solver_runs(&inst, cfg.threads)? {
            comparisons += 1;
            let actual_sets: BTreeSet<&Solution> = actual.iter().collect();
            if actual_sets != expected_sets {
                return Ok(VerifyOutcome {
                    trials_run: trial + 1,
                    comparisons,
                    failure: Some(Discrepancy {
                        trial,
                        solver,
                        instance_text: render_with_seed(spec, &inst),
                        expected,
                        actual,
                    }),
                });
            }
        }
    }
    Ok(VerifyOutcome {
        trials_run: cfg.trials,
        comparisons,
        failure: None,
    })
}

/// Canonical text of every solver's solution listing over the schedule.
/// Runs with `cfg.threads` workers; the text must not depend on that.
pub fn solver_listing(cfg: &VerifyConfig) -> Result<String> {
    guard(cfg)?;
    let mut out = String::new();
    for (trial, spec) in trial_specs(cfg).iter().enumerate() {
        let inst = generate_instance(spec)?;
        for (solver, solutions) in solver_runs(&inst, cfg.threads)? {
            out.push_str(&format!("trial {trial} {solver}\n"));
            for s in &solutions {
                out.push_str(&s.display_indices(false));
                out.push('\n');
            }
        }
    }
    Ok(out)
}
