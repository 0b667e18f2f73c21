//! Level-wise Apriori baseline: prefix join, subset prune, one database
//! pass per candidate level.

use std::collections::HashSet;

use crate::error::Result;
use crate::itemset::{ItemId, ItemMask, Itemset};
use crate::params::MiningParams;
use crate::txdb::{SupportedItemset, TransactionDatabase, TxId};

/// Frequent `k`-itemsets, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequentLevel {
    pub k: usize,
    pub itemsets: Vec<SupportedItemset>,
}

/// Candidate `k`-itemsets; a superset of the frequent ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateLevel {
    pub k: usize,
    pub itemsets: Vec<Itemset>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AprioriResult {
    /// Non-empty levels `L(1)`, `L(2)`, ... in order.
    pub levels: Vec<FrequentLevel>,
    /// Full database passes, one per counted candidate level including a
    /// final level that comes out empty.
    pub scan_count: usize,
}

impl AprioriResult {
    pub fn max_level(&self) -> usize {
        self.levels.last().map_or(0, |l| l.k)
    }

    pub fn top_level(&self) -> &[SupportedItemset] {
        self.levels.last().map_or(&[], |l| &l.itemsets)
    }

    pub fn all_frequent(&self) -> impl Iterator<Item = &SupportedItemset> {
        self.levels.iter().flat_map(|l| l.itemsets.iter())
    }

    pub fn frequent_count(&self) -> usize {
        self.levels.iter().map(|l| l.itemsets.len()).sum()
    }
}

/// Joins every pair of `prev` members that agree on all but their last
/// item. Output is canonical and duplicate-free when `prev` is sorted.
pub fn apriori_join(prev: &FrequentLevel) -> CandidateLevel {
    let sets = &prev.itemsets;
    let prefix_len = prev.k.saturating_sub(1);
    let mut out = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        let a_items = a.itemset.items();
        for b in &sets[i + 1..] {
            let b_items = b.itemset.items();
            if a_items[..prefix_len] != b_items[..prefix_len] {
                break;
            }
            let mut merged: Vec<ItemId> = a_items.to_vec();
            merged.push(b_items[prefix_len]);
            out.push(Itemset::new(merged));
        }
    }
    CandidateLevel {
        k: prev.k + 1,
        itemsets: out,
    }
}

/// Drops candidates that have a `k`-subset missing from `prev`.
pub fn apriori_prune(cands: CandidateLevel, prev: &FrequentLevel) -> CandidateLevel {
    let known: HashSet<&Itemset> = prev.itemsets.iter().map(|s| &s.itemset).collect();
    let itemsets = cands
        .itemsets
        .into_iter()
        .filter(|c| (0..c.len()).all(|i| known.contains(&c.without_position(i))))
        .collect();
    CandidateLevel {
        k: cands.k,
        itemsets,
    }
}

/// One pass over the database counting every candidate by mask
/// containment.
fn count_level(db: &TransactionDatabase, cands: CandidateLevel, min_support: u64) -> FrequentLevel {
    let masks: Vec<ItemMask> = cands.itemsets.iter().map(|c| db.mask(c)).collect();
    let mut sources: Vec<Vec<TxId>> = vec![Vec::new(); masks.len()];
    for t in db.transactions() {
        if t.len() < cands.k {
            continue;
        }
        for (mask, hits) in masks.iter().zip(sources.iter_mut()) {
            if t.contains(mask) {
                hits.push(t.id());
            }
        }
    }
    let itemsets = cands
        .itemsets
        .into_iter()
        .zip(sources)
        .filter(|(_, hits)| hits.len() as u64 >= min_support)
        .map(|(itemset, hits)| SupportedItemset::new(itemset, hits))
        .collect();
    FrequentLevel {
        k: cands.k,
        itemsets,
    }
}

pub fn apriori_mine(db: &TransactionDatabase, params: &MiningParams) -> Result<AprioriResult> {
    params.validate()?;
    let mut levels: Vec<FrequentLevel> = Vec::new();
    let mut scan_count = 0;
    let mut cands = CandidateLevel {
        k: 1,
        itemsets: (0..db.universe_size() as u32)
            .map(|i| Itemset::from_indices([i]))
            .collect(),
    };
    while !cands.itemsets.is_empty() {
        scan_count += 1;
        let level = count_level(db, cands, params.min_support_count);
        if level.itemsets.is_empty() {
            break;
        }
        cands = apriori_prune(apriori_join(&level), &level);
        levels.push(level);
    }
    Ok(AprioriResult { levels, scan_count })
}
