//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use maxfreq::bench::{run_bench, BenchConfig, Corpus};
use maxfreq::oracle::brute_force_top_level;
use maxfreq::{
    apriori_mine, brute_force_frequent, brute_force_maximal, generate, generate_rules,
    k_minus_1_subsets, mfif_mine, mfif_mine_all_maximal, Algorithm, GeneratorSpec, Itemset,
    MinSupport, MiningParams, SupportedItemset, TransactionDatabase,
};
use num_rational::Ratio;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

/// Mined answers collected from criteria 1-4 for the downward-closure check.
struct Mined {
    db: TransactionDatabase,
    min_support: u64,
    itemsets: Vec<SupportedItemset>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs(v: &[SupportedItemset]) -> Vec<(Vec<u64>, u64)> {
    v.iter().map(|s| (s.itemset.labels(), s.support)).collect()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    ensure(start.elapsed() < limit, || {
        format!("took {:?}, limit {:?}", start.elapsed(), limit)
    })
}

fn ac1_worked_example(mined: &mut Vec<Mined>) -> Check {
    let start = Instant::now();
    let db = common::worked();
    let params = MiningParams::new(2);
    let r = mfif_mine(&db, &params).map_err(|e| e.to_string())?;
    let expected = vec![(vec![1, 2], 2), (vec![1, 3], 3)];
    ensure(r.level == 2, || format!("level {}", r.level))?;
    ensure(pairs(&r.itemsets) == expected, || {
        format!("got {:?}", pairs(&r.itemsets))
    })?;
    let oracle = brute_force_top_level(&db, &params).map_err(|e| e.to_string())?;
    ensure(oracle == r.itemsets, || {
        format!("oracle {:?}", pairs(&oracle))
    })?;
    within(Duration::from_secs(1), start)?;
    mined.push(Mined {
        db,
        min_support: 2,
        itemsets: r.itemsets,
    });
    Ok(format!(
        "level 2, {{I1,I3}}:3 and {{I1,I2}}:2 in {:?}",
        start.elapsed()
    ))
}

fn ac2_subset_formation() -> Check {
    let got = k_minus_1_subsets(&Itemset::from_labels(&[1, 2, 3])).map_err(|e| e.to_string())?;
    let want = vec![
        Itemset::from_labels(&[2, 3]),
        Itemset::from_labels(&[1, 3]),
        Itemset::from_labels(&[1, 2]),
    ];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("[{I2,I3}, {I1,I3}, {I1,I2}]".into())
}

fn random_db(rng: &mut ChaCha8Rng) -> TransactionDatabase {
    let universe = rng.random_range(1..=8usize);
    let rows = rng.random_range(1..=20usize);
    let density = rng.random_range(0.05..0.95);
    let rows: Vec<Vec<bool>> = (0..rows)
        .map(|_| (0..universe).map(|_| rng.random_bool(density)).collect())
        .collect();
    common::db_from_rows(universe, &rows)
}

fn ac3_oracle_sweep(mined: &mut Vec<Mined>) -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let databases = 500;
    let mut runs = 0;
    let mut mismatches = Vec::new();
    for case in 0..databases {
        let db = random_db(&mut rng);
        for min_sup in 1..=db.len() as u64 {
            runs += 1;
            let params = MiningParams::new(min_sup);
            let frequent = brute_force_frequent(&db, &params).unwrap();
            let maximal = brute_force_maximal(&db, &params).unwrap();
            let top_k = frequent.last().map_or(0, |s| s.itemset.len());
            let top: Vec<_> = frequent
                .iter()
                .filter(|s| s.itemset.len() == top_k)
                .cloned()
                .collect();

            let apriori: Vec<_> = apriori_mine(&db, &params)
                .unwrap()
                .all_frequent()
                .cloned()
                .collect();
            let mfif = mfif_mine(&db, &params).unwrap();
            let all_max = mfif_mine_all_maximal(&db, &params).unwrap();

            if apriori != frequent {
                mismatches.push(format!("case {case} min_sup {min_sup}: apriori"));
            }
            if mfif.itemsets != top || mfif.level != top_k {
                mismatches.push(format!("case {case} min_sup {min_sup}: mfif"));
            }
            if all_max != maximal {
                mismatches.push(format!("case {case} min_sup {min_sup}: mfif-all"));
            }
            if case % 10 == 0 {
                mined.push(Mined {
                    db: db.clone(),
                    min_support: min_sup,
                    itemsets: all_max,
                });
            }
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    })?;
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{databases} databases, {runs} thresholds, 0 mismatches in {:?}",
        start.elapsed()
    ))
}

fn ac4_scan_counts(mined: &mut Vec<Mined>) -> Check {
    let spec = GeneratorSpec {
        n_transactions: 10,
        universe_size: 20,
        planted_itemset_size: 12,
        planted_copies: 2,
        noise_density: 0.3,
        seed: 7,
    };
    let db = generate(&spec).map_err(|e| e.to_string())?;
    let sizes = db.transaction_sizes();
    ensure(sizes.iter().filter(|&&s| s == 12).count() == 2, || {
        format!("planted rows missing: {sizes:?}")
    })?;
    ensure(sizes.iter().all(|&s| s <= 12), || {
        format!("noise row too large: {sizes:?}")
    })?;

    let min_support = MinSupport::Percent(Ratio::from_integer(20))
        .resolve(db.len())
        .unwrap();
    ensure(min_support == 2, || {
        format!("20% of 10 resolved to {min_support}")
    })?;
    let params = MiningParams::new(min_support);

    let apriori = apriori_mine(&db, &params).map_err(|e| e.to_string())?;
    let mfif = mfif_mine(&db, &params).map_err(|e| e.to_string())?;
    ensure(apriori.scan_count == 12, || {
        format!("apriori scans {}", apriori.scan_count)
    })?;
    ensure(apriori.max_level() == 12, || {
        format!("apriori level {}", apriori.max_level())
    })?;
    ensure(mfif.level == 12, || format!("mfif level {}", mfif.level))?;
    ensure(mfif.counters.levels_descended == 1, || {
        format!("mfif levels {}", mfif.counters.levels_descended)
    })?;
    ensure(mfif.counters.counting_passes <= 2, || {
        format!("mfif counting passes {}", mfif.counters.counting_passes)
    })?;
    ensure(
        mfif.itemsets.len() == 1 && mfif.itemsets[0].support == 2,
        || format!("mfif itemsets {:?}", pairs(&mfif.itemsets)),
    )?;
    let summary = format!(
        "apriori scans 12; mfif levels 1, counting passes {}, scans {}",
        mfif.counters.counting_passes, mfif.counters.scans
    );
    mined.push(Mined {
        db,
        min_support,
        itemsets: mfif.itemsets,
    });
    Ok(summary)
}

fn ac5_performance_ordering() -> Check {
    let start = Instant::now();
    let corpora: Vec<Corpus> = [100, 500, 5000, 10000]
        .into_iter()
        .map(|n| {
            let spec = GeneratorSpec {
                n_transactions: n,
                universe_size: 20,
                planted_itemset_size: 12,
                planted_copies: 2,
                noise_density: 0.2,
                seed: 7,
            };
            Corpus {
                name: format!("n{n}"),
                db: generate(&spec).unwrap(),
            }
        })
        .collect();
    let config = BenchConfig {
        algorithms: vec![Algorithm::Mfif, Algorithm::Apriori],
        min_support: MinSupport::Count(2),
        pool_cap: maxfreq::params::DEFAULT_POOL_CAP,
        repetitions: 3,
    };
    let report = run_bench(&corpora, &config);
    ensure(report.rows.iter().all(|r| r.succeeded()), || {
        "a bench row failed".into()
    })?;
    ensure(report.inconsistent_corpora().is_empty(), || {
        format!("disagreement on {:?}", report.inconsistent_corpora())
    })?;
    let mut cells = Vec::new();
    for pair in report.rows.chunks(2) {
        let (m, a) = (&pair[0], &pair[1]);
        let (tm, ta) = (m.wall_time_seconds.unwrap(), a.wall_time_seconds.unwrap());
        ensure(tm < ta, || {
            format!(
                "n={}: mfif {tm:.6}s not below apriori {ta:.6}s",
                m.n_transactions
            )
        })?;
        cells.push(format!("{}: {tm:.6}s < {ta:.6}s", m.n_transactions));
    }
    within(Duration::from_secs(600), start)?;
    Ok(cells.join(", "))
}

fn ac6_downward_closure(mined: &[Mined]) -> Check {
    let mut checked = 0usize;
    for m in mined {
        for s in &m.itemsets {
            for sub in s.itemset.proper_subsets() {
                checked += 1;
                let support = m.db.support_count(&sub);
                ensure(support >= m.min_support, || {
                    format!("{} has support {support} < {}", sub, m.min_support)
                })?;
            }
        }
    }
    Ok(format!(
        "{} results, {checked} proper subsets, 0 violations",
        mined.len()
    ))
}

fn ac7_rules() -> Check {
    let db = common::worked();
    // Hand enumeration over the raw rows, independent of the library.
    let rows = [[1, 1, 0], [1, 0, 1], [1, 1, 1], [1, 0, 1], [1, 0, 0]];
    let sigma_i1 = rows.iter().filter(|r| r[0] == 1).count() as u64;
    let sigma_i3 = rows.iter().filter(|r| r[2] == 1).count() as u64;
    let sigma_i1_i3 = rows.iter().filter(|r| r[0] == 1 && r[2] == 1).count() as u64;
    ensure((sigma_i1, sigma_i3, sigma_i1_i3) == (5, 3, 3), || {
        "hand counts".into()
    })?;

    let z = db
        .support(&Itemset::from_labels(&[1, 3]))
        .map_err(|e| e.to_string())?;
    let rules = generate_rules(&db, &[z], &MiningParams::new(2)).map_err(|e| e.to_string())?;
    let find = |ante: u32| {
        rules
            .iter()
            .find(|r| r.antecedent == Itemset::from_labels(&[ante]))
            .map(|r| r.confidence)
    };
    let c31 = find(3).ok_or("missing I3 => I1")?;
    let c13 = find(1).ok_or("missing I1 => I3")?;
    ensure(
        c31 == Ratio::new(sigma_i1_i3, sigma_i3) && c31 == Ratio::from_integer(1),
        || format!("conf(I3=>I1) = {c31}"),
    )?;
    ensure(
        c13 == Ratio::new(sigma_i1_i3, sigma_i1) && c13 == Ratio::new(3, 5),
        || format!("conf(I1=>I3) = {c13}"),
    )?;
    Ok("conf(I3=>I1) = 1, conf(I1=>I3) = 3/5".into())
}

fn ac8_invariants() -> Check {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (
        common::db_and_threshold(8, 20),
        proptest::bits::u8::ANY,
        proptest::bits::u8::ANY,
    );
    runner
        .run(&strategy, |((db, min_sup), a, b)| {
            let params = MiningParams::new(min_sup);
            let mask = (1u32 << db.universe_size()) - 1;
            let to_set = |bits: u8| {
                Itemset::from_indices((0..8).filter(|i| u32::from(bits) & mask & (1 << i) != 0))
            };
            let x = to_set(a);
            let y = x.union(&to_set(b));
            if db.support_count(&x) < db.support_count(&y) {
                return Err(TestCaseError::fail(format!(
                    "anti-monotonicity: {x} vs {y}"
                )));
            }
            let maximal = mfif_mine_all_maximal(&db, &params).unwrap();
            let sets: Vec<Itemset> = maximal.iter().map(|s| s.itemset.clone()).collect();
            if !common::is_antichain(&sets) {
                return Err(TestCaseError::fail("maximal family is not an antichain"));
            }
            let top = mfif_mine(&db, &params).unwrap().level;
            let levels = apriori_mine(&db, &params).unwrap().max_level();
            if top != levels {
                return Err(TestCaseError::fail(format!(
                    "mfif level {top} vs apriori {levels}"
                )));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("1000 generated cases, 0 violations".into())
}

fn main() -> ExitCode {
    let mut mined = Vec::new();
    let results: Vec<(&str, Check)> = vec![
        ("AC1 golden worked example", ac1_worked_example(&mut mined)),
        ("AC2 subset formation", ac2_subset_formation()),
        ("AC3 oracle equivalence sweep", ac3_oracle_sweep(&mut mined)),
        ("AC4 scan-count claim", ac4_scan_counts(&mut mined)),
        ("AC5 performance ordering", ac5_performance_ordering()),
        ("AC6 downward closure", ac6_downward_closure(&mined)),
        ("AC7 rule confidence", ac7_rules()),
        ("AC8 invariant suite", ac8_invariants()),
    ];

    let mut failed = 0;
    for (name, result) in &results {
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
