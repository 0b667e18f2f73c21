use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::apriori::apriori_mine;
use crate::error::{MineError, Result};
use crate::mfif::{mfif_mine, mfif_mine_all_maximal_counted, MfifCounters};
use crate::oracle::brute_force_frequent;
use crate::params::MiningParams;
use crate::txdb::{SupportedItemset, TransactionDatabase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Mfif,
    MfifAll,
    Apriori,
    Brute,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mfif => "mfif",
            Algorithm::MfifAll => "mfif-all",
            Algorithm::Apriori => "apriori",
            Algorithm::Brute => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = MineError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mfif" => Ok(Algorithm::Mfif),
            "mfif-all" | "mfif-all-maximal" => Ok(Algorithm::MfifAll),
            "apriori" => Ok(Algorithm::Apriori),
            "brute" => Ok(Algorithm::Brute),
            other => Err(MineError::Params(format!("unknown algorithm {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Counters {
    Mfif(MfifCounters),
    Apriori {
        scans: usize,
        levels: usize,
        frequent_itemsets: usize,
    },
    Brute {
        frequent_itemsets: usize,
    },
}

/// Result of one mining run, normalized across algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub algorithm: Algorithm,
    pub min_support_count: u64,
    /// Largest cardinality found; 0 when nothing is frequent.
    pub level: usize,
    /// The maximal family for `mfif-all`; the top-level itemsets otherwise.
    pub itemsets: Vec<SupportedItemset>,
    pub counters: Counters,
}

impl Outcome {
    /// Number of reported itemsets of cardinality `level`.
    pub fn top_count(&self) -> usize {
        self.itemsets
            .iter()
            .filter(|s| s.itemset.len() == self.level)
            .count()
    }

    /// Apriori scans or top-down levels visited.
    pub fn scans_or_levels(&self) -> usize {
        match &self.counters {
            Counters::Mfif(c) => c.levels_descended,
            Counters::Apriori { scans, .. } => *scans,
            Counters::Brute { .. } => 1,
        }
    }

    pub fn subset_expansions(&self) -> Option<u64> {
        match &self.counters {
            Counters::Mfif(c) => Some(c.subset_expansions),
            _ => None,
        }
    }
}

pub fn run(
    db: &TransactionDatabase,
    params: &MiningParams,
    algorithm: Algorithm,
) -> Result<Outcome> {
    let (level, itemsets, counters) = match algorithm {
        Algorithm::Mfif => {
            let r = mfif_mine(db, params)?;
            (r.level, r.itemsets, Counters::Mfif(r.counters))
        }
        Algorithm::MfifAll => {
            let (itemsets, counters) = mfif_mine_all_maximal_counted(db, params)?;
            let level = itemsets.iter().map(|s| s.itemset.len()).max().unwrap_or(0);
            (level, itemsets, Counters::Mfif(counters))
        }
        Algorithm::Apriori => {
            let r = apriori_mine(db, params)?;
            let counters = Counters::Apriori {
                scans: r.scan_count,
                levels: r.levels.len(),
                frequent_itemsets: r.frequent_count(),
            };
            (r.max_level(), r.top_level().to_vec(), counters)
        }
        Algorithm::Brute => {
            let all = brute_force_frequent(db, params)?;
            let level = all.last().map_or(0, |s| s.itemset.len());
            let counters = Counters::Brute {
                frequent_itemsets: all.len(),
            };
            let top = all
                .into_iter()
                .filter(|s| s.itemset.len() == level)
                .collect();
            (level, top, counters)
        }
    };
    Ok(Outcome {
        algorithm,
        min_support_count: params.min_support_count,
        level,
        itemsets,
        counters,
    })
}
