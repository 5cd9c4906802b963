//! Solver run reports: solutions plus exact operation counters.
//!
//! Wall time is informational only; the counters are what the cost model
//! is checked against, because they are exact and machine-independent.

use std::time::Duration;

use crate::oracle::Solution;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Enumerate,
    Mitm,
    PartitionPair,
    PartitionComposition,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Algorithm::Enumerate => "enumerate",
            Algorithm::Mitm => "mitm",
            Algorithm::PartitionPair => "partition-pair",
            Algorithm::PartitionComposition => "partition-composition",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Found,
    None,
    InfeasibleByRange,
    CapacityExceeded,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Status::Found => "found",
            Status::None => "none",
            Status::InfeasibleByRange => "infeasible-by-range",
            Status::CapacityExceeded => "capacity-exceeded",
        };
        f.write_str(name)
    }
}

/// Exact work counters accumulated during a solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    /// Total entries across every sum table materialized during the run.
    pub entries_built: u64,
    /// Entries examined as anchors during complement lookups.
    pub probes: u64,
    /// Odd-m exclusions that proceeded to table construction.
    pub exclusions_tried: u64,
    /// Independent solve tasks dispatched (exclusions, block pairs,
    /// compositions; 1 for a single-table run).
    pub tasks_run: u64,
}

/// Outcome of one solver invocation.
#[derive(Debug, Clone)]
pub struct SolverReport {
    pub algorithm: Algorithm,
    /// Deduplicated, sorted by index tuple.
    pub solutions: Vec<Solution>,
    pub entries_built: u64,
    pub probes: u64,
    pub exclusions_tried: u64,
    pub tasks_run: u64,
    pub wall_time: Duration,
    pub status: Status,
}

impl SolverReport {
    pub(crate) fn new(
        algorithm: Algorithm,
        solutions: Vec<Solution>,
        counters: Counters,
        wall_time: Duration,
        status_when_searched: Status,
    ) -> Self {
        let status = if matches!(status_when_searched, Status::Found | Status::None) {
            if solutions.is_empty() {
                Status::None
            } else {
                Status::Found
            }
        } else {
            status_when_searched
        };
        Self {
            algorithm,
            solutions,
            entries_built: counters.entries_built,
            probes: counters.probes,
            exclusions_tried: counters.exclusions_tried,
            tasks_run: counters.tasks_run,
            wall_time,
            status,
        }
    }

    pub fn wall_ms(&self) -> u128 {
        self.wall_time.as_millis()
    }
}
