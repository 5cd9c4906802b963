//! Acceptance suite: the guarantees this crate ships with, one test per
//! criterion. `cargo test --test acceptance -- --nocapture` prints one
//! pass line per criterion.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ksum::combinatorics::{binomial, combinations, Combination};
use ksum::generate::{generate_instance, GeneratorSpec};
use ksum::mitm::{self, build_sum_table, find_pairs, tau};
use ksum::oracle::{self, enumerate_solutions};
use ksum::partition::{make_partition, solve_partition, PartitionMode, Strategy};
use ksum::verify::{run_verify, solver_listing, VerifyConfig};
use ksum::{
    ExclusionPolicy, Limit, ProblemInstance, Solution, SolveOptions, Status,
};

const SHOWCASE: &str = include_str!("data/n16_m6_s137.txt");

fn showcase() -> ProblemInstance {
    ProblemInstance::parse(SHOWCASE).unwrap()
}

fn sets(solutions: &[Solution]) -> BTreeSet<Vec<usize>> {
    solutions.iter().map(|s| s.indices().to_vec()).collect()
}

fn no_complement() -> SolveOptions {
    SolveOptions {
        use_complement: false,
        exclusions: ExclusionPolicy::Exhaustive,
        ..SolveOptions::default()
    }
}

/// 1. The reference 16-element instance (m=6, S=137): the known subset
///    comes back, exactly C(16,3) = 560 entries are built, the 42/95
///    collision carries equal keys of 3990, and it all runs inside 1s.
#[test]
fn acceptance_01_reference_instance() {
    let started = Instant::now();
    let inst = showcase();

    let report = mitm::solve(&inst, &SolveOptions::default()).unwrap();
    assert_eq!(report.status, Status::Found);
    assert_eq!(report.entries_built, 560);
    assert!(sets(&report.solutions).contains(&vec![0, 1, 3, 13, 14, 15]));
    for s in &report.solutions {
        assert_eq!(s.value_sum(inst.values()), 137);
        assert_eq!(s.len(), 6);
    }

    let universe: Vec<usize> = (0..inst.n()).collect();
    let table = build_sum_table(inst.values(), &universe, 3, 1 << 27, 0).unwrap();
    assert_eq!(table.len(), 560);
    let pairs = find_pairs(&table, 137, Limit::All);
    let hit = pairs
        .iter()
        .find(|p| p.rank_a == 1 && p.rank_b == 559)
        .expect("collision of combination ranks 1 and 559");
    assert_eq!((hit.z_a, hit.z_b), (42, 95));
    assert_eq!(tau(137, 42).unwrap(), 3990);
    assert_eq!(tau(137, 95).unwrap(), 3990);

    assert!(started.elapsed().as_secs() < 1, "must finish within 1s");
    println!("acceptance 01 reference instance: pass");
}

/// 2. Targets outside [21, 177] are rejected by the range screen with
///    zero table entries built, by every front door.
#[test]
fn acceptance_02_range_pruning() {
    for target in [20, 178] {
        let inst = showcase().with_target(target);
        let reports = [
            mitm::solve(&inst, &SolveOptions::default()).unwrap(),
            oracle::solve(&inst, Limit::All, 1 << 31).unwrap(),
            solve_partition(
                &inst,
                &make_partition(16, 2, Strategy::Contiguous).unwrap(),
                PartitionMode::Composition,
                &SolveOptions::default(),
            )
            .unwrap(),
        ];
        for report in reports {
            assert_eq!(report.status, Status::InfeasibleByRange, "S={target}");
            assert_eq!(report.entries_built, 0);
            assert!(report.solutions.is_empty());
        }
    }
    println!("acceptance 02 range pruning: pass");
}

/// 3. 1000 seeded random instances (n in 4..=14, all m, signed and
///    natural value ranges, planted and unplanted): every solver's
///    solution set equals exhaustive enumeration. Zero discrepancies.
#[test]
fn acceptance_03_solver_equivalence() {
    let started = Instant::now();
    let cfg = VerifyConfig {
        trials: 1000,
        n_min: 4,
        n_max: 14,
        seed: 0,
        threads: 0,
    };
    let outcome = run_verify(&cfg).unwrap();
    if let Some(d) = &outcome.failure {
        panic!("{d}");
    }
    assert_eq!(outcome.trials_run, 1000);
    assert!(outcome.comparisons >= 4000);
    assert!(
        started.elapsed().as_secs() < 300,
        "equivalence suite must finish within 5 minutes"
    );
    println!(
        "acceptance 03 solver equivalence: pass ({} comparisons)",
        outcome.comparisons
    );
}

/// 4. Collision-key algebra on a million triples: tau(S,z1) = tau(S,z2)
///    exactly when z1 = z2 or z1 + z2 = S.
#[test]
fn acceptance_04_collision_key_algebra() {
    const WIDTH: i128 = 1 << 62;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..1_000_000u32 {
        let s = rng.gen_range(-WIDTH..=WIDTH);
        let z1 = rng.gen_range(-WIDTH..=WIDTH);
        // force both collision branches often enough to matter
        let z2 = match i % 4 {
            0 => z1,
            1 => s - z1,
            _ => rng.gen_range(-WIDTH..=WIDTH),
        };
        let collide = tau(s, z1).unwrap() == tau(s, z2).unwrap();
        assert_eq!(
            collide,
            z1 == z2 || z1 + z2 == s,
            "counterexample: S={s} z1={z1} z2={z2}"
        );
    }
    println!("acceptance 04 collision-key algebra: pass (10^6 triples)");
}

/// 5. Work counters are the binomials, exactly: C(n, m/2) entries for
///    even m, and per-exclusion C(n-1, (m-1)/2) tables for odd m, over
///    the n in {10,12,...,20}, m in {4..8} grid.
#[test]
fn acceptance_05_cost_counters() {
    for n in (10..=20).step_by(2) {
        for m in 4..=8 {
            let inst = generate_instance(&GeneratorSpec {
                n,
                m,
                value_min: 1,
                value_max: 100,
                seed: (n * 100 + m) as u64,
                planted: true,
            })
            .unwrap();
            let report = mitm::solve(&inst, &no_complement()).unwrap();
            assert_eq!(report.status, Status::Found, "planted n={n} m={m}");
            if m % 2 == 0 {
                assert_eq!(
                    report.entries_built as u128,
                    binomial(n, m / 2).unwrap(),
                    "even n={n} m={m}"
                );
                assert_eq!(report.exclusions_tried, 0);
            } else {
                let per_exclusion = binomial(n - 1, (m - 1) / 2).unwrap();
                assert_eq!(
                    report.entries_built as u128,
                    report.exclusions_tried as u128 * per_exclusion,
                    "odd n={n} m={m}"
                );
                assert!((1..=n as u64).contains(&report.exclusions_tried));
            }
        }
    }
    println!("acceptance 05 cost counters: pass");
}

/// 6. Ranking round trip for every combination with n <= 12: iteration
///    yields exactly C(n,k) distinct tuples and rank/unrank invert.
#[test]
fn acceptance_06_ranking_round_trip() {
    for n in 0..=12 {
        for k in 0..=n {
            let mut seen = BTreeSet::new();
            let mut count: u128 = 0;
            for (position, indices) in combinations(n, k).enumerate() {
                let c = Combination::new(n, indices.clone()).unwrap();
                assert_eq!(c.rank().unwrap(), position as u128);
                assert_eq!(
                    Combination::unrank(n, k, position as u128)
                        .unwrap()
                        .indices(),
                    &indices[..]
                );
                assert!(seen.insert(indices), "duplicate at n={n} k={k}");
                count += 1;
            }
            assert_eq!(count, binomial(n, k).unwrap(), "n={n} k={k}");
        }
    }
    println!("acceptance 06 ranking round trip: pass");
}

/// 7. The mirror question: solutions of the (n-m, total-S) transform are
///    exactly the index complements of the original's solutions.
#[test]
fn acceptance_07_complement_mirror() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..200 {
        let n = rng.gen_range(1usize..=12);
        let m = rng.gen_range(0..=n);
        let values: Vec<i64> = (0..n).map(|_| rng.gen_range(-30i64..=30)).collect();
        let target: i128 = if trial % 2 == 0 {
            // plant a solvable target on even trials
            rand::seq::index::sample(&mut rng, n, m)
                .iter()
                .map(|i| values[i] as i128)
                .sum()
        } else {
            rng.gen_range(-60..=60)
        };
        let inst = ProblemInstance::new(values, m, target).unwrap();
        let mirrored = inst.complement_transform().unwrap();

        let direct = sets(&enumerate_solutions(&inst, Limit::All).unwrap());
        let complemented: BTreeSet<Vec<usize>> =
            enumerate_solutions(&mirrored, Limit::All)
                .unwrap()
                .iter()
                .map(|s| s.complement(n).indices().to_vec())
                .collect();
        assert_eq!(direct, complemented, "trial {trial}");
    }
    println!("acceptance 07 complement mirror: pass");
}

/// A solution pair mode can see: k1 indices in one block, k2 in another,
/// zero anywhere else (either role order).
fn splits_across_two_blocks(
    indices: &[usize],
    blocks: &[Vec<usize>],
    k1: usize,
    k2: usize,
) -> bool {
    let counts: Vec<usize> = blocks
        .iter()
        .map(|b| indices.iter().filter(|i| b.contains(i)).count())
        .collect();
    (0..counts.len()).any(|i| {
        (0..counts.len()).any(|j| {
            i != j
                && counts[i] == k1
                && counts[j] == k2
                && counts
                    .iter()
                    .enumerate()
                    .all(|(x, &c)| x == i || x == j || c == 0)
        })
    })
}

/// 8. Pair mode returns exactly the enumerated solutions that split k1/k2
///    across two contiguous blocks (including the swapped roles).
#[test]
fn acceptance_08_pair_mode_characterization() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..200 {
        let n = rng.gen_range(2usize..=12);
        let m = rng.gen_range(0..=n);
        let values: Vec<i64> = (0..n).map(|_| rng.gen_range(-20i64..=20)).collect();
        let target: i128 = if trial % 2 == 0 {
            rand::seq::index::sample(&mut rng, n, m)
                .iter()
                .map(|i| values[i] as i128)
                .sum()
        } else {
            rng.gen_range(-40..=40)
        };
        let inst = ProblemInstance::new(values, m, target).unwrap();
        let plan = make_partition(n, 2, Strategy::Contiguous).unwrap();
        let k2 = m / 2;
        let k1 = m - k2; // unequal for odd m, exercising the role swap

        let report = solve_partition(
            &inst,
            &plan,
            PartitionMode::Pair { k1, k2 },
            &SolveOptions::default(),
        )
        .unwrap();
        let expected: BTreeSet<Vec<usize>> = enumerate_solutions(&inst, Limit::All)
            .unwrap()
            .iter()
            .map(|s| s.indices().to_vec())
            .filter(|s| splits_across_two_blocks(s, plan.blocks(), k1, k2))
            .collect();
        assert_eq!(sets(&report.solutions), expected, "trial {trial}");
    }
    println!("acceptance 08 pair-mode characterization: pass");
}

/// 9. Byte-identical solution listings at 1, 2, and 8 worker threads:
///    the reference instance through the binary, and the full randomized
///    equivalence schedule through the library.
#[test]
fn acceptance_09_thread_count_invariance() {
    let exe = env!("CARGO_BIN_EXE_ksum");
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/n16_m6_s137.txt");
    let outputs: Vec<Vec<u8>> = [1usize, 2, 8]
        .iter()
        .map(|t| {
            let out = std::process::Command::new(exe)
                .args(["solve", fixture, "--threads", &t.to_string()])
                .output()
                .expect("run solver binary");
            assert!(out.status.success());
            assert!(!out.stdout.is_empty());
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);

    let listings: Vec<String> = [1usize, 2, 8]
        .iter()
        .map(|&threads| {
            solver_listing(&VerifyConfig {
                trials: 1000,
                n_min: 4,
                n_max: 14,
                seed: 0,
                threads,
            })
            .unwrap()
        })
        .collect();
    assert_eq!(listings[0], listings[1]);
    assert_eq!(listings[0], listings[2]);
    println!("acceptance 09 thread-count invariance: pass");
}

/// 10. Large-n time-and-memory behavior is not reproducible at desk
///     scale and stays out of scope; the exact counter identities stand
///     in for it. This pins the counter model at a point above the usual
///     grid so the extrapolation base is itself checked.
#[test]
fn acceptance_10_counter_model_is_the_large_n_proxy() {
    let inst = generate_instance(&GeneratorSpec {
        n: 24,
        m: 8,
        value_min: 1,
        value_max: 100,
        seed: 10,
        planted: true,
    })
    .unwrap();
    let report = mitm::solve(&inst, &no_complement()).unwrap();
    assert_eq!(report.entries_built as u128, binomial(24, 4).unwrap());
    assert_eq!(report.status, Status::Found);
    println!("acceptance 10 counter model as large-n proxy: pass");
}
