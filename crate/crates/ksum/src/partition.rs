//! Block-partitioned solving.
//!
//! The index universe is split into disjoint blocks and solutions are
//! assembled from per-block sum tables. Two modes:
//!
//! - **Pair mode** walks every unordered block pair and joins a
//!   k1-subset of one block with a k2-subset of the other (both role
//!   assignments when k1 != k2). It only sees solutions that split
//!   across exactly two blocks in those proportions — solutions living
//!   inside a single block or spread over three or more are missed, and
//!   the tests pin down that characterization.
//! - **Composition mode** enumerates every per-block count vector
//!   summing to m and merges the block tables left to right, probing the
//!   final block by complement. Every solution has exactly one such
//!   count signature, so the union over compositions is complete and
//!   duplicate-free.
//!
//! Tasks (block pairs, compositions) are independent: each reads the
//! immutable instance and plan, and results are merged in task order, so
//! the outcome does not depend on how many workers ran them.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::combinatorics::{advance_in_place, binomial};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::mitm::build_sum_table;
use crate::oracle::Solution;
use crate::report::{Algorithm, Counters, SolverReport, Status};
use crate::{Limit, SolveOptions};

/// How indices are dealt into blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Block i holds the index range [i*n/n_blocks, (i+1)*n/n_blocks).
    Contiguous,
    /// Index j goes to block j mod n_blocks.
    RoundRobin,
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strategy::Contiguous => "contiguous",
            Strategy::RoundRobin => "round-robin",
        })
    }
}

/// Disjoint, covering blocks of the index universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    blocks: Vec<Vec<usize>>,
    strategy: Strategy,
}

impl PartitionPlan {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn min_block_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// Splits `0..n` into `n_blocks` nonempty blocks.
pub fn make_partition(n: usize, n_blocks: usize, strategy: Strategy) -> Result<PartitionPlan> {
    if n_blocks == 0 || n_blocks > n {
        return Err(Error::InvalidArgument(format!(
            "block count {n_blocks} out of range 1..={n}"
        )));
    }
    let blocks = match strategy {
        Strategy::Contiguous => (0..n_blocks)
            .map(|i| (i * n / n_blocks..(i + 1) * n / n_blocks).collect())
            .collect(),
        Strategy::RoundRobin => (0..n_blocks)
            .map(|i| (i..n).step_by(n_blocks).collect())
            .collect(),
    };
    Ok(PartitionPlan { blocks, strategy })
}

/// Per-block element counts summing to the cardinality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    counts: Vec<usize>,
}

impl Composition {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

/// All count vectors with sum m and `counts[i] <= |blocks[i]|`, in
/// lexicographic order.
pub fn enumerate_compositions(m: usize, plan: &PartitionPlan) -> Vec<Composition> {
    fn recurse(
        sizes: &[usize],
        pos: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Composition>,
    ) {
        if pos == sizes.len() {
            if remaining == 0 {
                out.push(Composition {
                    counts: current.clone(),
                });
            }
            return;
        }
        if remaining > sizes[pos..].iter().sum::<usize>() {
            return;
        }
        for count in 0..=remaining.min(sizes[pos]) {
            current[pos] = count;
            recurse(sizes, pos + 1, remaining - count, current, out);
        }
        current[pos] = 0;
    }

    let sizes: Vec<usize> = plan.blocks.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    recurse(&sizes, 0, m, &mut vec![0; sizes.len()], &mut out);
    out
}

/// Which assembly the partition solver runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMode {
    Pair { k1: usize, k2: usize },
    Composition,
}

struct TaskOutcome {
    solutions: Vec<Solution>,
    counters: Counters,
}

/// Runs `count` independent tasks on up to `threads` workers, returning
/// outcomes in task order.
fn run_tasks<T, F>(count: usize, threads: usize, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    if threads <= 1 || count <= 1 {
        return (0..count).map(task).collect();
    }
    let workers = threads.min(count);
    let chunk = count.div_ceil(workers);
    let mut out: Vec<Option<T>> = std::iter::repeat_with(|| None).take(count).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .filter_map(|w| {
                let start = w * chunk;
                let end = ((w + 1) * chunk).min(count);
                (start < end).then(|| {
                    let task = &task;
                    scope.spawn(move || (start, (start..end).map(task).collect::<Vec<T>>()))
                })
            })
            .collect();
        for handle in handles {
            let (start, items) = handle.join().expect("partition task worker panicked");
            for (offset, item) in items.into_iter().enumerate() {
                out[start + offset] = Some(item);
            }
        }
    });
    out.into_iter().map(Option::unwrap).collect()
}

fn merge_outcomes(
    outcomes: Vec<Result<TaskOutcome>>,
    counters: &mut Counters,
) -> Result<BTreeSet<Solution>> {
    let mut merged = BTreeSet::new();
    for outcome in outcomes {
        let outcome = outcome?;
        counters.entries_built += outcome.counters.entries_built;
        counters.probes += outcome.counters.probes;
        counters.tasks_run += outcome.counters.tasks_run;
        merged.extend(outcome.solutions);
    }
    Ok(merged)
}

/// Joins a `k_table`-subset of `table_block` with a `k_probe`-subset of
/// `probe_block`: sum table on one side, complement lookups from the other.
fn join_blocks(
    values: &[i64],
    table_block: &[usize],
    k_table: usize,
    probe_block: &[usize],
    k_probe: usize,
    target: i128,
    opts: &SolveOptions,
) -> Result<TaskOutcome> {
    let mut counters = Counters {
        tasks_run: 1,
        ..Counters::default()
    };
    let mut solutions = Vec::new();
    if k_table > table_block.len() || k_probe > probe_block.len() {
        return Ok(TaskOutcome {
            solutions,
            counters,
        });
    }
    let table = build_sum_table(values, table_block, k_table, opts.memory_cap_entries, 1)?;
    counters.entries_built += table.len() as u64;
    let entries = table.entries();

    let mut combo: Vec<usize> = (0..k_probe).collect();
    loop {
        counters.probes += 1;
        let mut probe_sum: i128 = 0;
        for &local in &combo {
            probe_sum = probe_sum
                .checked_add(values[probe_block[local]] as i128)
                .ok_or(Error::Overflow { context: "k-sum" })?;
        }
        if let Some(need) = target.checked_sub(probe_sum) {
            let lo = entries.partition_point(|e| e.z < need);
            for entry in entries[lo..].iter().take_while(|e| e.z == need) {
                let mut indices = table.decode(entry.rank);
                indices.extend(combo.iter().map(|&local| probe_block[local]));
                indices.sort_unstable();
                solutions.push(Solution::new(indices));
            }
        }
        if !advance_in_place(&mut combo, probe_block.len()) {
            break;
        }
    }
    Ok(TaskOutcome {
        solutions,
        counters,
    })
}

fn pair_mode_core(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    k1: usize,
    k2: usize,
    opts: &SolveOptions,
    counters: &mut Counters,
) -> Result<BTreeSet<Solution>> {
    let m = inst.cardinality();
    if k1 + k2 != m {
        return Err(Error::InvalidArgument(format!(
            "k1 + k2 = {} does not match cardinality {m}",
            k1 + k2
        )));
    }
    let n_blocks = plan.block_count();
    if n_blocks < 2 {
        return Err(Error::InvalidArgument(
            "pair mode needs at least two blocks".into(),
        ));
    }

    let mut tasks: Vec<(usize, usize, usize, usize)> = Vec::new();
    for i in 0..n_blocks {
        for j in i + 1..n_blocks {
            tasks.push((i, j, k1, k2));
            if k1 != k2 {
                tasks.push((i, j, k2, k1));
            }
        }
    }
    let outcomes = run_tasks(tasks.len(), opts.effective_threads(), |t| {
        let (i, j, k_table, k_probe) = tasks[t];
        join_blocks(
            inst.values(),
            &plan.blocks[i],
            k_table,
            &plan.blocks[j],
            k_probe,
            inst.target(),
            opts,
        )
    });
    merge_outcomes(outcomes, counters)
}

/// Intermediate composition table: partial sums with their index tuples.
type PartialTable = Vec<(i128, Vec<usize>)>;

fn block_subsets(values: &[i64], block: &[usize], count: usize, cap: u64) -> Result<PartialTable> {
    let total = binomial(block.len(), count)?;
    if total > cap as u128 {
        return Err(Error::Capacity {
            what: "composition stage table",
            required: total,
            cap: cap as u128,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    if count > block.len() {
        return Ok(out);
    }
    let mut combo: Vec<usize> = (0..count).collect();
    loop {
        let mut sum: i128 = 0;
        for &local in &combo {
            sum = sum
                .checked_add(values[block[local]] as i128)
                .ok_or(Error::Overflow { context: "k-sum" })?;
        }
        out.push((sum, combo.iter().map(|&local| block[local]).collect()));
        if !advance_in_place(&mut combo, block.len()) {
            break;
        }
    }
    Ok(out)
}

fn solve_one_composition(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    composition: &Composition,
    opts: &SolveOptions,
) -> Result<TaskOutcome> {
    let mut counters = Counters {
        tasks_run: 1,
        ..Counters::default()
    };
    let target = inst.target();
    let stages: Vec<(&Vec<usize>, usize)> = plan
        .blocks
        .iter()
        .zip(composition.counts().iter())
        .filter(|(_, &count)| count > 0)
        .map(|(block, &count)| (block, count))
        .collect();

    if stages.is_empty() {
        return Ok(TaskOutcome {
            solutions: if target == 0 {
                vec![Solution::new(Vec::new())]
            } else {
                Vec::new()
            },
            counters,
        });
    }

    let cap = opts.memory_cap_entries;
    let values = inst.values();

    if stages.len() == 1 {
        // single block carries the whole subset: direct scan
        let (block, count) = stages[0];
        let table = block_subsets(values, block, count, cap)?;
        counters.probes += table.len() as u64;
        let solutions = table
            .into_iter()
            .filter(|(sum, _)| *sum == target)
            .map(|(_, indices)| Solution::new(indices))
            .collect();
        return Ok(TaskOutcome {
            solutions,
            counters,
        });
    }

    // build the left side by pairwise cross-merging all but the last stage
    let (first_block, first_count) = stages[0];
    let mut left = block_subsets(values, first_block, first_count, cap)?;
    counters.entries_built += left.len() as u64;
    for &(block, count) in &stages[1..stages.len() - 1] {
        let right = block_subsets(values, block, count, cap)?;
        counters.entries_built += right.len() as u64;
        let merged_len = (left.len() as u128) * (right.len() as u128);
        if merged_len > cap as u128 {
            return Err(Error::Capacity {
                what: "composition merge table",
                required: merged_len,
                cap: cap as u128,
            });
        }
        let mut merged = Vec::with_capacity(merged_len as usize);
        for (left_sum, left_indices) in &left {
            for (right_sum, right_indices) in &right {
                let sum = left_sum.checked_add(*right_sum).ok_or(Error::Overflow {
                    context: "partial sum",
                })?;
                let mut indices = left_indices.clone();
                indices.extend_from_slice(right_indices);
                merged.push((sum, indices));
            }
        }
        counters.entries_built += merged.len() as u64;
        left = merged;
    }
    left.sort_unstable();

    // final stage probes the left table by complement
    let (last_block, last_count) = stages[stages.len() - 1];
    let mut solutions = Vec::new();
    let mut combo: Vec<usize> = (0..last_count).collect();
    loop {
        counters.probes += 1;
        let mut sum: i128 = 0;
        for &local in &combo {
            sum = sum
                .checked_add(values[last_block[local]] as i128)
                .ok_or(Error::Overflow { context: "k-sum" })?;
        }
        if let Some(need) = target.checked_sub(sum) {
            let lo = left.partition_point(|(z, _)| *z < need);
            for (_, left_indices) in left[lo..].iter().take_while(|(z, _)| *z == need) {
                let mut indices = left_indices.clone();
                indices.extend(combo.iter().map(|&local| last_block[local]));
                indices.sort_unstable();
                solutions.push(Solution::new(indices));
            }
        }
        if !advance_in_place(&mut combo, last_block.len()) {
            break;
        }
    }
    Ok(TaskOutcome {
        solutions,
        counters,
    })
}

fn composition_mode_core(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    opts: &SolveOptions,
    counters: &mut Counters,
) -> Result<BTreeSet<Solution>> {
    let compositions = enumerate_compositions(inst.cardinality(), plan);
    let outcomes = run_tasks(compositions.len(), opts.effective_threads(), |c| {
        solve_one_composition(inst, plan, &compositions[c], opts)
    });
    merge_outcomes(outcomes, counters)
}

/// Pair-mode search (two blocks per solution). Returns exactly those
/// solutions with k1 indices in one block, k2 in another, and none
/// elsewhere; NOT complete in general.
pub fn solve_pair_mode(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    k1: usize,
    k2: usize,
    limit: Limit,
    opts: &SolveOptions,
) -> Result<Vec<Solution>> {
    let mut counters = Counters::default();
    let found = pair_mode_core(inst, plan, k1, k2, opts, &mut counters)?;
    Ok(limit.apply(found.into_iter().collect()))
}

/// Composition-mode search; the solution set equals the exhaustive one.
pub fn solve_composition_mode(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    limit: Limit,
    opts: &SolveOptions,
) -> Result<Vec<Solution>> {
    let (n, m) = (inst.n(), inst.cardinality());
    if m > n {
        return Err(Error::CardinalityTooLarge { m, n });
    }
    let mut counters = Counters::default();
    let found = composition_mode_core(inst, plan, opts, &mut counters)?;
    Ok(limit.apply(found.into_iter().collect()))
}

/// Partition front door: range screen, mode dispatch, counter report.
pub fn solve_partition(
    inst: &ProblemInstance,
    plan: &PartitionPlan,
    mode: PartitionMode,
    opts: &SolveOptions,
) -> Result<SolverReport> {
    let started = Instant::now();
    let mut counters = Counters::default();
    let (n, m) = (inst.n(), inst.cardinality());
    let algorithm = match mode {
        PartitionMode::Pair { .. } => Algorithm::PartitionPair,
        PartitionMode::Composition => Algorithm::PartitionComposition,
    };
    let mut status = Status::None;
    let mut solutions = Vec::new();

    if m <= n {
        if !inst.in_range()? {
            status = Status::InfeasibleByRange;
        } else {
            let found = match mode {
                PartitionMode::Pair { k1, k2 } => {
                    pair_mode_core(inst, plan, k1, k2, opts, &mut counters)?
                }
                PartitionMode::Composition => {
                    composition_mode_core(inst, plan, opts, &mut counters)?
                }
            };
            solutions = opts.limit.apply(found.into_iter().collect());
        }
    }

    Ok(SolverReport::new(
        algorithm,
        solutions,
        counters,
        started.elapsed(),
        status,
    ))
}
