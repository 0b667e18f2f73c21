#![allow(dead_code)]

use maxfreq::{Itemset, TransactionDatabase};
use proptest::prelude::*;

pub const WORKED: &str = "1 1 0\n1 0 1\n1 1 1\n1 0 1\n1 0 0";

pub fn worked() -> TransactionDatabase {
    maxfreq::parse_matrix(WORKED).unwrap()
}

pub fn db_from_rows(universe: usize, rows: &[Vec<bool>]) -> TransactionDatabase {
    let sets = rows
        .iter()
        .map(|row| {
            Itemset::from_indices(
                row.iter()
                    .enumerate()
                    .filter(|(_, &on)| on)
                    .map(|(i, _)| i as u32),
            )
        })
        .collect();
    TransactionDatabase::new(universe, sets).unwrap()
}

/// Databases with at most `max_items` items and `max_rows` transactions at a
/// random density.
pub fn small_db(max_items: usize, max_rows: usize) -> impl Strategy<Value = TransactionDatabase> {
    (1..=max_items, 1..=max_rows, 0.05f64..0.95)
        .prop_flat_map(|(universe, rows, density)| {
            (
                Just(universe),
                prop::collection::vec(
                    prop::collection::vec(prop::bool::weighted(density), universe),
                    rows,
                ),
            )
        })
        .prop_map(|(universe, rows)| db_from_rows(universe, &rows))
}

/// Database plus a threshold in `1..=n`.
pub fn db_and_threshold(
    max_items: usize,
    max_rows: usize,
) -> impl Strategy<Value = (TransactionDatabase, u64)> {
    small_db(max_items, max_rows).prop_flat_map(|db| {
        let n = db.len() as u64;
        (Just(db), 1..=n)
    })
}

pub fn is_antichain(sets: &[Itemset]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset_of(b))
    })
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
