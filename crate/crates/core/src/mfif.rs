//! Top-down discovery of the largest frequent itemsets.
//!
//! The search starts at the size of the largest transaction and works one
//! level at a time. At level `k` the pool holds `k`-itemsets, each tagged
//! with the transaction it was cut from. Every distinct itemset is counted
//! by the number of distinct source transactions holding it; if any count
//! reaches the threshold the level is the answer. Otherwise each pool entry
//! is peeled into its `(k-1)`-subsets, transactions of size `k-1` join the
//! pool, and the search moves down a level.
//!
//! Once every transaction of size `>= k` has been absorbed and peeled down
//! to `k`, the pool for a given source is exactly the set of its
//! `k`-subsets, so the per-source count of an itemset equals its support.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{MineError, Result};
use crate::itemset::Itemset;
use crate::params::MiningParams;
use crate::txdb::{SupportedItemset, TransactionDatabase, TxId};

/// Every subset of `x` with one member removed. The `i`-th output drops the
/// `i`-th smallest member.
pub fn k_minus_1_subsets(x: &Itemset) -> Result<Vec<Itemset>> {
    if x.is_empty() {
        return Err(MineError::EmptyPeel);
    }
    Ok((0..x.len()).map(|i| x.without_position(i)).collect())
}

/// A pool entry: an itemset and the transaction it was peeled from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub itemset: Itemset,
    pub source_tx: TxId,
}

/// Pool statistics for one visited level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelTrace {
    pub level: usize,
    pub pool_size: usize,
    pub sources: usize,
    pub counted: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MfifCounters {
    pub start_level: usize,
    pub levels_descended: usize,
    pub subset_expansions: u64,
    /// Passes that tallied the pool against the threshold.
    pub counting_passes: usize,
    /// One pass to size the transactions plus one per counting pass.
    pub scans: usize,
    pub peak_pool: usize,
    pub trace: Vec<LevelTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MfifResult {
    /// Cardinality of the reported itemsets; 0 when nothing is frequent.
    pub level: usize,
    pub itemsets: Vec<SupportedItemset>,
    pub counters: MfifCounters,
}

/// Working state of the descent: current level, candidate pool keyed by
/// source transaction, and transactions not yet absorbed, keyed by size.
#[derive(Debug, Clone)]
pub struct LevelState {
    level: usize,
    pool: BTreeMap<TxId, BTreeSet<Itemset>>,
    pool_len: usize,
    pending: BTreeMap<usize, Vec<TxId>>,
}

impl LevelState {
    /// Sizes every transaction, starts at the largest size and absorbs the
    /// transactions of that size.
    pub fn new(db: &TransactionDatabase, pool_cap: usize) -> Result<Self> {
        let sizes = db.transaction_sizes();
        let level = sizes.iter().copied().max().unwrap_or(0);
        let mut pending: BTreeMap<usize, Vec<TxId>> = BTreeMap::new();
        for (id, &size) in sizes.iter().enumerate() {
            if size > 0 {
                pending.entry(size).or_default().push(id);
            }
        }
        let mut state = LevelState {
            level,
            pool: BTreeMap::new(),
            pool_len: 0,
            pending,
        };
        state.absorb(db, pool_cap)?;
        Ok(state)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of (itemset, source) pairs in the pool.
    pub fn pool_len(&self) -> usize {
        self.pool_len
    }

    /// Number of distinct source transactions represented in the pool.
    pub fn source_count(&self) -> usize {
        self.pool.len()
    }

    pub fn candidates(&self) -> impl Iterator<Item = Candidate> + '_ {
        self.pool.iter().flat_map(|(&source_tx, sets)| {
            sets.iter().map(move |itemset| Candidate {
                itemset: itemset.clone(),
                source_tx,
            })
        })
    }

    fn absorb(&mut self, db: &TransactionDatabase, pool_cap: usize) -> Result<()> {
        if let Some(ids) = self.pending.remove(&self.level) {
            for id in ids {
                let items = db.transaction(id).items().clone();
                if self.pool.entry(id).or_default().insert(items) {
                    self.pool_len += 1;
                }
            }
        }
        self.check_cap(pool_cap)
    }

    fn check_cap(&self, pool_cap: usize) -> Result<()> {
        if self.pool_len > pool_cap {
            return Err(MineError::PoolLimit {
                level: self.level,
                cap: pool_cap,
            });
        }
        Ok(())
    }

    /// Distinct pool itemsets whose source count meets `min_support`, in
    /// canonical order.
    pub fn frequent(&self, min_support: u64) -> Vec<SupportedItemset> {
        let mut counts: BTreeMap<&Itemset, Vec<TxId>> = BTreeMap::new();
        for (&source, sets) in &self.pool {
            for itemset in sets {
                counts.entry(itemset).or_default().push(source);
            }
        }
        counts
            .into_iter()
            .filter(|(_, sources)| sources.len() as u64 >= min_support)
            .map(|(itemset, sources)| SupportedItemset::new(itemset.clone(), sources))
            .collect()
    }

    /// Peels the pool one level down and absorbs the transactions of the
    /// new size. Returns the number of subsets generated before dedup.
    pub fn descend(&mut self, db: &TransactionDatabase, pool_cap: usize) -> Result<u64> {
        assert!(self.level > 1, "cannot descend below level 1");
        let next_level = self.level - 1;
        let mut generated = 0u64;
        let mut next_len = 0usize;
        let mut next_pool = BTreeMap::new();
        for (&source, sets) in &self.pool {
            let mut peeled = BTreeSet::new();
            for itemset in sets {
                for i in 0..itemset.len() {
                    generated += 1;
                    if peeled.insert(itemset.without_position(i)) {
                        next_len += 1;
                    }
                }
            }
            if next_len > pool_cap {
                return Err(MineError::PoolLimit {
                    level: next_level,
                    cap: pool_cap,
                });
            }
            next_pool.insert(source, peeled);
        }
        self.pool = next_pool;
        self.pool_len = next_len;
        self.level = next_level;
        self.absorb(db, pool_cap)?;
        Ok(generated)
    }

    fn trace(&self, counted: bool) -> LevelTrace {
        LevelTrace {
            level: self.level,
            pool_size: self.pool_len,
            sources: self.source_count(),
            counted,
        }
    }
}

/// Walks the levels top-down, calling `visit` with the frequent itemsets of
/// each counted level. Stops when `visit` returns `true` or level 1 has
/// been handled.
fn descend_levels<F>(
    db: &TransactionDatabase,
    params: &MiningParams,
    mut visit: F,
) -> Result<MfifCounters>
where
    F: FnMut(usize, Vec<SupportedItemset>) -> bool,
{
    params.validate()?;
    let min_support = params.min_support_count;
    let mut state = LevelState::new(db, params.pool_cap)?;
    let mut counters = MfifCounters {
        start_level: state.level(),
        scans: 1,
        ..MfifCounters::default()
    };

    while state.level() > 0 {
        counters.levels_descended += 1;
        counters.peak_pool = counters.peak_pool.max(state.pool_len());
        // Fewer sources than the threshold: no itemset here can qualify.
        let counted = state.source_count() as u64 >= min_support;
        counters.trace.push(state.trace(counted));
        if counted {
            counters.counting_passes += 1;
            counters.scans += 1;
            let found = state.frequent(min_support);
            if visit(state.level(), found) {
                break;
            }
        }
        if state.level() == 1 {
            break;
        }
        counters.subset_expansions += state.descend(db, params.pool_cap)?;
    }
    Ok(counters)
}

/// Largest frequent itemsets: every itemset of the greatest cardinality
/// whose support reaches the threshold, with exact supports.
pub fn mfif_mine(db: &TransactionDatabase, params: &MiningParams) -> Result<MfifResult> {
    let mut answer: Option<(usize, Vec<SupportedItemset>)> = None;
    let counters = descend_levels(db, params, |level, found| {
        if found.is_empty() {
            return false;
        }
        answer = Some((level, found));
        true
    })?;
    let (level, itemsets) = answer.unwrap_or_default();
    Ok(MfifResult {
        level,
        itemsets,
        counters,
    })
}

/// Complete family of maximal frequent itemsets. The descent continues past
/// the first frequent level; a frequent itemset is kept unless it is a
/// subset of one already reported at a higher level.
pub fn mfif_mine_all_maximal(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<Vec<SupportedItemset>> {
    mfif_mine_all_maximal_counted(db, params).map(|(itemsets, _)| itemsets)
}

/// [`mfif_mine_all_maximal`] plus the run counters.
pub fn mfif_mine_all_maximal_counted(
    db: &TransactionDatabase,
    params: &MiningParams,
) -> Result<(Vec<SupportedItemset>, MfifCounters)> {
    let mut maximal: Vec<SupportedItemset> = Vec::new();
    let counters = descend_levels(db, params, |_, found| {
        let fresh: Vec<SupportedItemset> = found
            .into_iter()
            .filter(|x| !maximal.iter().any(|m| x.itemset.is_subset_of(&m.itemset)))
            .collect();
        maximal.extend(fresh);
        false
    })?;
    maximal.sort_by(|a, b| {
        a.itemset
            .len()
            .cmp(&b.itemset.len())
            .then_with(|| a.itemset.cmp(&b.itemset))
    });
    Ok((maximal, counters))
}
