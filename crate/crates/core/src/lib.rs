//! Frequent itemset mining with a top-down search for the largest frequent
//! itemsets.
//!
//! The top-down miner ([`mfif`]) starts at the size of the largest
//! transaction and peels candidates one item at a time until some itemset
//! reaches the support threshold. A level-wise Apriori baseline
//! ([`apriori`]), an exhaustive reference miner ([`oracle`]) and strong
//! association rules ([`rules`]) sit alongside it, together with a seeded
//! corpus generator and a timing harness used by the `maxfreq` binary.
//!
//! ```
//! use maxfreq::{mfif_mine, parse_matrix, MiningParams};
//!
//! let db = parse_matrix("1 1 0\n1 0 1\n1 1 1\n1 0 1\n1 0 0").unwrap();
//! let result = mfif_mine(&db, &MiningParams::new(2)).unwrap();
//! assert_eq!(result.level, 2);
//! assert_eq!(result.itemsets[1].itemset.to_string(), "I1 I3");
//! assert_eq!(result.itemsets[1].support, 3);
//! ```

pub mod apriori;
pub mod bench;
pub mod engine;
pub mod error;
pub mod generate;
pub mod itemset;
pub mod mfif;
pub mod oracle;
pub mod params;
pub mod report;
pub mod rules;
pub mod txdb;

pub use apriori::{
    apriori_join, apriori_mine, apriori_prune, AprioriResult, CandidateLevel, FrequentLevel,
};
pub use engine::{Algorithm, Outcome};
pub use error::{MineError, Result};
pub use generate::{generate, GeneratorSpec};
pub use itemset::{ItemId, Itemset};
pub use mfif::{
    k_minus_1_subsets, mfif_mine, mfif_mine_all_maximal, Candidate, LevelState, MfifResult,
};
pub use oracle::{brute_force_frequent, brute_force_maximal};
pub use params::{MinSupport, MiningParams, Rational};
pub use rules::{generate_rules, AssociationRule};
pub use txdb::{
    parse_item_lists, parse_matrix, SupportedItemset, Transaction, TransactionDatabase, TxId,
};
