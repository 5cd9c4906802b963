//! Half-size sum-table solving.
//!
//! For even m, every m-subset splits into two disjoint (m/2)-subsets, so
//! it suffices to build the table of all C(n, m/2) partial sums once and
//! find entry pairs with `z_a + z_b = S`. Odd m reduces to the even case
//! by excluding one element at a time and solving for the remainder.
//!
//! Pair detection works by complement lookup over the z-sorted table, not
//! by grouping entries under the collision key `(S - z)·z`: that key
//! collides both for complementary sums and for equal sums, so the lookup
//! plus an explicit disjointness check on the decoded index tuples is
//! what keeps the answer exact. The key map is exposed as [`tau`]; two
//! entries share a key iff their sums are equal or complementary, and the
//! tests pin that equivalence down.
//!
//! Table construction is split into combination-rank ranges, one per
//! worker; the merged table is sorted by `(z, rank)`, so its contents and
//! everything derived from it are independent of the worker count.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::time::Instant;

use crate::combinatorics::{advance_in_place, binomial, unrank_into};
use crate::error::{Error, Result};
use crate::instance::{feasible_range_of, ProblemInstance};
use crate::oracle::Solution;
use crate::report::{Algorithm, Counters, SolverReport, Status};
use crate::{ExclusionPolicy, Limit, SolveOptions};

/// One k-sum and the lexicographic rank of the combination it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumEntry {
    pub z: i128,
    pub rank: u64,
}

/// All C(|universe|, k) k-sums over a sub-universe of indices, sorted by
/// sum value (ties by rank).
#[derive(Debug, Clone)]
pub struct SumTable {
    entries: Vec<SumEntry>,
    universe: Vec<usize>,
    k: usize,
}

impl SumTable {
    pub fn entries(&self) -> &[SumEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    /// The entry holding a given combination rank.
    pub fn entry_by_rank(&self, rank: u64) -> Option<&SumEntry> {
        self.entries.iter().find(|e| e.rank == rank)
    }

    /// Positions within the universe, as the rank decodes.
    fn decode_local(&self, rank: u64) -> Vec<usize> {
        let mut combo = Vec::with_capacity(self.k);
        unrank_into(self.universe.len(), self.k, rank as u128, &mut combo)
            .expect("table ranks are valid by construction");
        combo
    }

    /// Global indices of the combination behind an entry rank.
    pub fn decode(&self, rank: u64) -> Vec<usize> {
        self.decode_local(rank)
            .into_iter()
            .map(|local| self.universe[local])
            .collect()
    }
}

/// Two table entries whose sums are complementary with respect to a
/// target, with disjoint decoded index tuples. `rank_a < rank_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollisionPair {
    pub rank_a: u64,
    pub rank_b: u64,
    pub z_a: i128,
    pub z_b: i128,
}

/// The quadratic collision key `(S - z)·z`. Exact; overflow past `i128`
/// is reported, never wrapped.
pub fn tau(target: i128, z: i128) -> Result<i128> {
    let context = "collision key (S - z)·z";
    target
        .checked_sub(z)
        .and_then(|d| d.checked_mul(z))
        .ok_or(Error::Overflow { context })
}

/// Builds the sorted table of all C(|universe|, k) k-sums.
///
/// `universe` must be strictly increasing indices into `values`. The
/// construction is partitioned by rank range across `threads` workers.
pub fn build_sum_table(
    values: &[i64],
    universe: &[usize],
    k: usize,
    cap: u64,
    threads: usize,
) -> Result<SumTable> {
    if !universe.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(
            "universe indices must be strictly increasing".into(),
        ));
    }
    if universe.last().is_some_and(|&max| max >= values.len()) {
        return Err(Error::InvalidArgument(
            "universe index out of range".into(),
        ));
    }

    let u = universe.len();
    let total = binomial(u, k)?;
    if total > cap as u128 {
        return Err(Error::Capacity {
            what: "sum table",
            required: total,
            cap: cap as u128,
        });
    }
    let len = total as usize;
    let table = |entries| SumTable {
        entries,
        universe: universe.to_vec(),
        k,
    };
    if len == 0 {
        return Ok(table(Vec::new()));
    }

    let sub_values: Vec<i128> = universe.iter().map(|&i| values[i] as i128).collect();
    let workers = threads.max(1).min(len);
    let mut entries = if workers == 1 || len < 4096 {
        build_slice(&sub_values, k, 0, len)?
    } else {
        let chunk = len.div_ceil(workers);
        let ranges: Vec<(usize, usize)> = (0..workers)
            .map(|w| (w * chunk, ((w + 1) * chunk).min(len)))
            .filter(|(start, end)| start < end)
            .collect();
        let mut slices = Vec::with_capacity(ranges.len());
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(start, end)| {
                    let sub_values = &sub_values;
                    scope.spawn(move || build_slice(sub_values, k, start, end))
                })
                .collect();
            for handle in handles {
                slices.push(handle.join().expect("table worker panicked"));
            }
        });
        // slices arrive in rank order, so the merge is a plain concat
        let mut entries = Vec::with_capacity(len);
        for slice in slices {
            entries.extend(slice?);
        }
        entries
    };
    entries.sort_unstable_by_key(|e| (e.z, e.rank));
    Ok(table(entries))
}

fn build_slice(sub_values: &[i128], k: usize, start: usize, end: usize) -> Result<Vec<SumEntry>> {
    let u = sub_values.len();
    let mut out = Vec::with_capacity(end - start);
    let mut combo = Vec::with_capacity(k);
    unrank_into(u, k, start as u128, &mut combo)?;
    for rank in start..end {
        let mut z: i128 = 0;
        for &local in &combo {
            z = z
                .checked_add(sub_values[local])
                .ok_or(Error::Overflow { context: "k-sum" })?;
        }
        out.push(SumEntry {
            z,
            rank: rank as u64,
        });
        if rank + 1 < end && !advance_in_place(&mut combo, u) {
            break;
        }
    }
    Ok(out)
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return false,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    true
}

/// Walks every complementary, disjoint entry pair in deterministic order
/// (ascending anchor sum, then ranks). Returns the probe count: entries
/// whose complement was looked up.
fn scan_pairs<F>(table: &SumTable, target: i128, mut emit: F) -> u64
where
    F: FnMut(&SumEntry, &[usize], &SumEntry, &[usize]) -> ControlFlow<()>,
{
    let entries = table.entries();
    let mut probes = 0u64;
    let mut i = 0;
    'runs: while i < entries.len() {
        let za = entries[i].z;
        let run_end = entries[i..]
            .iter()
            .position(|e| e.z != za)
            .map_or(entries.len(), |p| i + p);
        // complement unrepresentable means no partner can exist
        let Some(need) = target.checked_sub(za) else {
            i = run_end;
            continue;
        };
        if za > need {
            // already handled from the lower run
            i = run_end;
            continue;
        }
        probes += (run_end - i) as u64;
        if za == need {
            // the half-target run pairs with itself
            let locals: Vec<Vec<usize>> = entries[i..run_end]
                .iter()
                .map(|e| table.decode_local(e.rank))
                .collect();
            for a in 0..locals.len() {
                for b in a + 1..locals.len() {
                    if disjoint(&locals[a], &locals[b])
                        && emit(&entries[i + a], &locals[a], &entries[i + b], &locals[b])
                            .is_break()
                    {
                        break 'runs;
                    }
                }
            }
        } else {
            let lo = entries.partition_point(|e| e.z < need);
            if lo < entries.len() && entries[lo].z == need {
                let hi = entries[lo..]
                    .iter()
                    .position(|e| e.z != need)
                    .map_or(entries.len(), |p| lo + p);
                let partner_locals: Vec<Vec<usize>> = entries[lo..hi]
                    .iter()
                    .map(|e| table.decode_local(e.rank))
                    .collect();
                for a in i..run_end {
                    let a_local = table.decode_local(entries[a].rank);
                    for (b, b_local) in partner_locals.iter().enumerate() {
                        if disjoint(&a_local, b_local)
                            && emit(&entries[a], &a_local, &entries[lo + b], b_local).is_break()
                        {
                            break 'runs;
                        }
                    }
                }
            }
        }
        i = run_end;
    }
    probes
}

/// Every unordered entry pair `{a, b}` with `z_a + z_b = target` and
/// disjoint decoded index tuples, reported once with `rank_a < rank_b`.
pub fn find_pairs(table: &SumTable, target: i128, limit: Limit) -> Vec<CollisionPair> {
    let mut pairs = Vec::new();
    if !limit.accepts(0) {
        return pairs;
    }
    scan_pairs(table, target, |ea, _, eb, _| {
        let pair = if ea.rank < eb.rank {
            CollisionPair {
                rank_a: ea.rank,
                rank_b: eb.rank,
                z_a: ea.z,
                z_b: eb.z,
            }
        } else {
            CollisionPair {
                rank_a: eb.rank,
                rank_b: ea.rank,
                z_a: eb.z,
                z_b: ea.z,
            }
        };
        pairs.push(pair);
        if limit.accepts(pairs.len()) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    pairs
}

fn merge_union(a: &[usize], b: &[usize], universe: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(universe[a[i]]);
            i += 1;
        } else {
            out.push(universe[b[j]]);
            j += 1;
        }
    }
    out.extend(a[i..].iter().map(|&x| universe[x]));
    out.extend(b[j..].iter().map(|&x| universe[x]));
    out
}

struct CoreOutcome {
    solutions: Vec<Solution>,
    built_table: bool,
}

/// Even-cardinality search over an index sub-universe: range screen,
/// half-size table, complement probing. The workhorse behind both public
/// solvers and the per-exclusion subproblems.
fn solve_even_core(
    values: &[i64],
    universe: &[usize],
    target: i128,
    m: usize,
    opts: &SolveOptions,
    counters: &mut Counters,
    distinct_cap: Option<usize>,
) -> Result<CoreOutcome> {
    debug_assert!(m.is_multiple_of(2));
    let nothing = CoreOutcome {
        solutions: Vec::new(),
        built_table: false,
    };
    if m > universe.len() {
        return Ok(nothing);
    }
    if m == 0 {
        return Ok(CoreOutcome {
            solutions: if target == 0 {
                vec![Solution::new(Vec::new())]
            } else {
                Vec::new()
            },
            built_table: false,
        });
    }
    let sub_values: Vec<i64> = universe.iter().map(|&i| values[i]).collect();
    if !feasible_range_of(&sub_values, m)?.contains(target) {
        return Ok(nothing);
    }

    let table = build_sum_table(
        values,
        universe,
        m / 2,
        opts.memory_cap_entries,
        opts.effective_threads(),
    )?;
    counters.entries_built += table.len() as u64;

    let mut found: BTreeSet<Solution> = BTreeSet::new();
    counters.probes += scan_pairs(&table, target, |_, a_local, _, b_local| {
        found.insert(Solution::new(merge_union(a_local, b_local, table.universe())));
        match distinct_cap {
            Some(cap) if found.len() >= cap => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    });
    Ok(CoreOutcome {
        solutions: found.into_iter().collect(),
        built_table: true,
    })
}

fn solve_odd_core(
    values: &[i64],
    target: i128,
    m: usize,
    opts: &SolveOptions,
    counters: &mut Counters,
) -> Result<Vec<Solution>> {
    debug_assert!(m % 2 == 1);
    let n = values.len();
    let stop_after = match opts.exclusions {
        ExclusionPolicy::Exhaustive => usize::MAX,
        ExclusionPolicy::FirstSuccess => 1,
        ExclusionPolicy::Auto => match opts.limit {
            Limit::All => usize::MAX,
            Limit::Count(c) => c,
        },
    };
    if stop_after == 0 {
        return Ok(Vec::new());
    }

    let mut found: BTreeSet<Solution> = BTreeSet::new();
    for excluded in 0..n {
        counters.tasks_run += 1;
        let sub_target = target
            .checked_sub(values[excluded] as i128)
            .ok_or(Error::Overflow {
                context: "excluded-element target",
            })?;
        let universe: Vec<usize> = (0..n).filter(|&i| i != excluded).collect();
        let outcome =
            solve_even_core(values, &universe, sub_target, m - 1, opts, counters, None)?;
        if outcome.built_table {
            counters.exclusions_tried += 1;
        }
        for sol in outcome.solutions {
            let mut indices = sol.indices().to_vec();
            indices.push(excluded);
            indices.sort_unstable();
            found.insert(Solution::new(indices));
        }
        if found.len() >= stop_after {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// Even-m solver over the full index universe. The solution set equals
/// the exhaustive one; order is by index tuple.
pub fn solve_even(inst: &ProblemInstance, limit: Limit, opts: &SolveOptions) -> Result<Vec<Solution>> {
    let (n, m) = (inst.n(), inst.cardinality());
    if m % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "even-cardinality solver called with m={m}"
        )));
    }
    if m > n {
        return Err(Error::CardinalityTooLarge { m, n });
    }
    let universe: Vec<usize> = (0..n).collect();
    let mut counters = Counters::default();
    let distinct_cap = match limit {
        Limit::All => None,
        Limit::Count(c) => Some(c),
    };
    let outcome = solve_even_core(
        inst.values(),
        &universe,
        inst.target(),
        m,
        opts,
        &mut counters,
        distinct_cap,
    )?;
    Ok(limit.apply(outcome.solutions))
}

/// Odd-m solver: for each excluded index in ascending order, solve the
/// even remainder over the other n-1 elements and extend with the
/// excluded index. Visiting every exclusion yields exactly the exhaustive
/// solution set; see [`ExclusionPolicy`] for the early-stop modes.
pub fn solve_odd(inst: &ProblemInstance, limit: Limit, opts: &SolveOptions) -> Result<Vec<Solution>> {
    let (n, m) = (inst.n(), inst.cardinality());
    if m % 2 != 1 {
        return Err(Error::InvalidArgument(format!(
            "odd-cardinality solver called with m={m}"
        )));
    }
    if m > n {
        return Err(Error::CardinalityTooLarge { m, n });
    }
    let opts = SolveOptions {
        limit,
        ..opts.clone()
    };
    let mut counters = Counters::default();
    let solutions = solve_odd_core(inst.values(), inst.target(), m, &opts, &mut counters)?;
    Ok(limit.apply(solutions))
}

/// Front door: range screen, optional complement reduction for m > n/2,
/// even/odd dispatch, and a report with exact work counters.
pub fn solve(inst: &ProblemInstance, opts: &SolveOptions) -> Result<SolverReport> {
    let started = Instant::now();
    let mut counters = Counters::default();
    let (n, m) = (inst.n(), inst.cardinality());
    let mut status = Status::None;
    let mut solutions = Vec::new();

    // m > n has no m-subsets at all; report none without searching
    if m <= n {
        if !inst.in_range()? {
            status = Status::InfeasibleByRange;
        } else {
            let complemented = opts.use_complement && m > n / 2;
            let work = if complemented {
                inst.complement_transform()?
            } else {
                inst.clone()
            };
            let m_eff = work.cardinality();
            let mut found = if m_eff % 2 == 0 {
                counters.tasks_run += 1;
                let distinct_cap = match opts.limit {
                    Limit::All => None,
                    Limit::Count(c) => Some(c),
                };
                let universe: Vec<usize> = (0..n).collect();
                solve_even_core(
                    work.values(),
                    &universe,
                    work.target(),
                    m_eff,
                    opts,
                    &mut counters,
                    distinct_cap,
                )?
                .solutions
            } else {
                solve_odd_core(work.values(), work.target(), m_eff, opts, &mut counters)?
            };
            if complemented {
                found = found.into_iter().map(|s| s.complement(n)).collect();
                found.sort_unstable();
            }
            solutions = opts.limit.apply(found);
        }
    }

    Ok(SolverReport::new(
        Algorithm::Mitm,
        solutions,
        counters,
        started.elapsed(),
        status,
    ))
}
