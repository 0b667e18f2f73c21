//! Exhaustive reference miner. Enumerates every non-empty itemset of the
//! universe and counts it directly, so it shares no code path with the
//! level-wise or top-down miners. Exponential by construction.

use crate::error::{MineError, Result};
use crate::itemset::Itemset;
use crate::params::MiningParams;
use crate::txdb::{SupportedItemset, TransactionDatabase};

pub const ORACLE_MAX_ITEMS: usize = 24;

// Rows are packed into u32.
const _: () = assert!(ORACLE_MAX_ITEMS <= 32);

fn row_bits(db: &TransactionDatabase) -> Vec<u32> {
    db.transactions()
        .iter()
        .map(|t| t.items().iter().fold(0u32, |acc, i| acc | (1 << i.0)))
        .collect()
}

fn bits_to_itemset(bits: u32) -> Itemset {
    Itemset::from_indices((0..32).filter(|b| bits & (1 << b) != 0))
}

fn frequent_bits(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<(u32, Vec<usize>)>> {
    params.validate()?;
    if db.universe_size() > ORACLE_MAX_ITEMS {
        return Err(MineError::OracleGuard {
            universe: db.universe_size(),
            max: ORACLE_MAX_ITEMS,
        });
    }
    let rows = row_bits(db);
    let mut found = Vec::new();
    for candidate in 1u32..(1u32 << db.universe_size()) {
        let sources: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(_, &row)| row & candidate == candidate)
            .map(|(id, _)| id)
            .collect();
        if sources.len() as u64 >= params.min_support_count {
            found.push((candidate, sources));
        }
    }
    Ok(found)
}

fn into_sorted(found: Vec<(u32, Vec<usize>)>) -> Vec<SupportedItemset> {
    let mut out: Vec<SupportedItemset> = found
        .into_iter()
        .map(|(bits, sources)| SupportedItemset::new(bits_to_itemset(bits), sources))
        .collect();
    out.sort_by(|a, b| {
        a.itemset
            .len()
            .cmp(&b.itemset.len())
            .then_with(|| a.itemset.cmp(&b.itemset))
    });
    out
}

/// Every non-empty frequent itemset, ordered by cardinality then
/// lexicographically.
pub fn brute_force_frequent(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<SupportedItemset>> {
    Ok(into_sorted(frequent_bits(db, params)?))
}

/// The frequent itemsets that have no frequent proper superset.
pub fn brute_force_maximal(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<SupportedItemset>> {
    let found = frequent_bits(db, params)?;
    let bits: Vec<u32> = found.iter().map(|(b, _)| *b).collect();
    let maximal = found
        .into_iter()
        .filter(|(x, _)| !bits.iter().any(|&y| y != *x && y & x == *x))
        .collect();
    Ok(into_sorted(maximal))
}

/// Largest-cardinality members of the frequent family.
pub fn brute_force_top_level(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<SupportedItemset>> {
    let all = brute_force_frequent(db, params)?;
    let top = all.last().map_or(0, |s| s.itemset.len());
    Ok(all.into_iter().filter(|s| s.itemset.len() == top).collect())
}
