//! Exhaustive reference solver: test the sum of every m-combination.
//!
//! Everything else in the crate is judged against this module, so it stays
//! deliberately simple — one pass over the lexicographic enumeration.

use std::time::Instant;

use crate::combinatorics::{advance_in_place, binomial};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::report::{Algorithm, Counters, SolverReport, Status};
use crate::Limit;

/// Guard on C(n,m) before a full enumeration is attempted.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 31;

/// One m-subset of indices whose values sum to the instance target.
/// Indices are 0-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Solution {
    indices: Vec<usize>,
}

impl Solution {
    /// Wraps an already sorted, duplicate-free index list.
    pub fn new(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn from_unsorted(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn value_sum(&self, values: &[i64]) -> i128 {
        self.indices.iter().map(|&i| values[i] as i128).sum()
    }

    /// Index complement within a universe of size n.
    pub fn complement(&self, n: usize) -> Solution {
        let mut inside = vec![false; n];
        for &i in &self.indices {
            inside[i] = true;
        }
        Solution::new((0..n).filter(|&i| !inside[i]).collect())
    }

    /// Render as 1-based (or 0-based) space-separated indices.
    pub fn display_indices(&self, zero_based: bool) -> String {
        let offset = usize::from(!zero_based);
        let parts: Vec<String> = self.indices.iter().map(|i| (i + offset).to_string()).collect();
        parts.join(" ")
    }
}

/// All m-subsets summing to the target, in lexicographic index order.
pub fn enumerate_solutions(inst: &ProblemInstance, limit: Limit) -> Result<Vec<Solution>> {
    enumerate_solutions_with_cap(inst, limit, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_solutions_with_cap(
    inst: &ProblemInstance,
    limit: Limit,
    cap: u128,
) -> Result<Vec<Solution>> {
    Ok(enumerate_impl(inst, limit, cap, true)?.0)
}

/// Number of solutions under full enumeration.
pub fn count_solutions(inst: &ProblemInstance) -> Result<u64> {
    let (solutions, _) = enumerate_impl(inst, Limit::All, DEFAULT_ENUMERATION_CAP, true)?;
    Ok(solutions.len() as u64)
}

/// Enumeration plus the number of combinations actually examined, for the
/// solver report counters.
pub(crate) fn enumerate_counting(
    inst: &ProblemInstance,
    limit: Limit,
    cap: u128,
) -> Result<(Vec<Solution>, u64)> {
    enumerate_impl(inst, limit, cap, true)
}

/// Exhaustive-search front door with the same report shape as the other
/// solvers. `entries_built` counts the combinations examined.
pub fn solve(inst: &ProblemInstance, limit: Limit, cap: u128) -> Result<SolverReport> {
    let started = Instant::now();
    let (n, m) = (inst.n(), inst.cardinality());
    let mut counters = Counters::default();
    let mut status = Status::None;
    let mut solutions = Vec::new();
    if m <= n {
        if !inst.in_range()? {
            status = Status::InfeasibleByRange;
        } else {
            counters.tasks_run = 1;
            let (found, examined) = enumerate_counting(inst, limit, cap)?;
            counters.entries_built = examined;
            solutions = found;
        }
    }
    Ok(SolverReport::new(
        Algorithm::Enumerate,
        solutions,
        counters,
        started.elapsed(),
        status,
    ))
}

fn enumerate_impl(
    inst: &ProblemInstance,
    limit: Limit,
    cap: u128,
    prune_by_range: bool,
) -> Result<(Vec<Solution>, u64)> {
    let n = inst.n();
    let m = inst.cardinality();
    if m > n {
        return Err(Error::CardinalityTooLarge { m, n });
    }
    if prune_by_range && !inst.in_range()? {
        return Ok((Vec::new(), 0));
    }
    let total = binomial(n, m)?;
    if total > cap {
        return Err(Error::Capacity {
            what: "exhaustive enumeration",
            required: total,
            cap,
        });
    }

    let values = inst.values();
    let target = inst.target();
    let mut solutions = Vec::new();
    let mut examined: u64 = 0;
    let mut combo: Vec<usize> = (0..m).collect();
    loop {
        if !limit.accepts(solutions.len()) {
            break;
        }
        examined += 1;
        let sum: i128 = combo.iter().map(|&i| values[i] as i128).sum();
        if sum == target {
            solutions.push(Solution::new(combo.clone()));
        }
        if !advance_in_place(&mut combo, n) {
            break;
        }
    }
    Ok((solutions, examined))
}
