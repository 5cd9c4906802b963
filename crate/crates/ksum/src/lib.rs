//! Exact solving of the fixed-cardinality subset-sum problem: given n
//! integers, a target S, and a cardinality m, find the m-element index
//! subsets whose values sum to S.
//!
//! Three solver families share one problem model:
//!
//! - [`oracle`] — exhaustive enumeration of all C(n,m) combinations; the
//!   reference answer everything else is checked against.
//! - [`mitm`] — the half-size table method: build every k-sum for
//!   k = m/2, sort, and look up complementary pairs. Odd m excludes one
//!   element at a time and solves the even remainder.
//! - [`partition`] — block-partitioned search: split the index universe
//!   into disjoint blocks and combine per-block tables, either across
//!   block pairs only or across every feasible per-block count split.
//!
//! Ranking and unranking of combinations ([`combinatorics`]) make the
//! table construction splittable into deterministic rank ranges, so
//! results are identical at any thread count.
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example solve_instance        # half-size table solve, end to end
//! cargo run --example combinations          # binomials, ranking, iteration
//! cargo run --example sum_table_collisions  # the k-sum table and collision pairs
//! cargo run --example partitioned_search    # pair mode vs composition mode
//! cargo run --example generate_and_verify   # seeded corpus, oracle cross-check
//! cargo run --example benchmark_counts      # operation-count comparison table
//! ```
//!
//! The `ksum` binary wraps the same entry points as `solve`, `generate`,
//! `verify`, and `bench` subcommands over the two-line instance file
//! format (see [`instance`]).

pub mod bench;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod generate;
pub mod instance;
pub mod mitm;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use instance::{FeasibleRange, ProblemInstance};
pub use oracle::Solution;
pub use report::{Algorithm, SolverReport, Status};

/// How many solutions a solver should report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    All,
    Count(usize),
}

impl Limit {
    pub fn accepts(&self, found: usize) -> bool {
        match *self {
            Limit::All => true,
            Limit::Count(c) => found < c,
        }
    }

    /// Truncates a final, deterministically ordered solution list.
    pub(crate) fn apply<T>(&self, mut items: Vec<T>) -> Vec<T> {
        if let Limit::Count(c) = *self {
            items.truncate(c);
        }
        items
    }
}

impl std::str::FromStr for Limit {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            Ok(Limit::All)
        } else {
            s.parse::<usize>()
                .map(Limit::Count)
                .map_err(|_| format!("expected a number or `all`, got `{s}`"))
        }
    }
}

impl std::fmt::Display for Limit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Limit::All => write!(f, "all"),
            Limit::Count(c) => write!(f, "{c}"),
        }
    }
}

/// Which excluded elements the odd-cardinality solver visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExclusionPolicy {
    /// Visit every exclusion when the limit is `All`; otherwise stop as
    /// soon as the limit is met (first-success for decision queries).
    #[default]
    Auto,
    /// Stop after the first exclusion that yields any solution.
    FirstSuccess,
    /// Always visit all n exclusions.
    Exhaustive,
}

/// Knobs shared by the table-based solvers.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub limit: Limit,
    /// Solve the (n-m, total-S) mirror question instead when m > n/2 and
    /// map the answers back.
    pub use_complement: bool,
    /// Worker threads for table construction; 0 means the machine's
    /// available parallelism. Results do not depend on this value.
    pub threads: usize,
    /// Hard cap on entries per sum table.
    pub memory_cap_entries: u64,
    pub exclusions: ExclusionPolicy,
}

pub const DEFAULT_MEMORY_CAP_ENTRIES: u64 = 1 << 27;

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            limit: Limit::All,
            use_complement: true,
            threads: 0,
            memory_cap_entries: DEFAULT_MEMORY_CAP_ENTRIES,
            exclusions: ExclusionPolicy::Auto,
        }
    }
}

impl SolveOptions {
    pub(crate) fn effective_threads(&self) -> usize {
        if self.threads != 0 {
            return self.threads;
        }
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    }
}
