//! Seeded synthetic corpora with a planted frequent itemset.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{MineError, Result};
use crate::itemset::Itemset;
use crate::txdb::TransactionDatabase;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorSpec {
    pub n_transactions: usize,
    pub universe_size: usize,
    pub planted_itemset_size: usize,
    pub planted_copies: usize,
    pub noise_density: f64,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(MineError::Params(m));
        if self.n_transactions == 0 {
            return fail("corpus needs at least one transaction".into());
        }
        if self.universe_size == 0 {
            return fail("universe size must be positive".into());
        }
        if self.planted_itemset_size > self.universe_size {
            return fail(format!(
                "planted itemset of {} items exceeds universe of {}",
                self.planted_itemset_size, self.universe_size
            ));
        }
        if self.planted_copies > self.n_transactions {
            return fail(format!(
                "{} planted copies exceed {} transactions",
                self.planted_copies, self.n_transactions
            ));
        }
        if !(0.0..=1.0).contains(&self.noise_density) {
            return fail(format!(
                "noise density must be in [0, 1], got {}",
                self.noise_density
            ));
        }
        Ok(())
    }
}

/// Builds the corpus described by `spec`. `planted_copies` rows (at random
/// positions) hold the same random `planted_itemset_size`-itemset; every
/// other row includes each item independently with probability
/// `noise_density`. When an itemset is planted, noise rows are kept
/// strictly smaller than it by dropping random items, so the planted
/// itemset is the largest transaction.
pub fn generate(spec: &GeneratorSpec) -> Result<TransactionDatabase> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let planted = Itemset::from_indices(
        sample(&mut rng, spec.universe_size, spec.planted_itemset_size)
            .into_iter()
            .map(|i| i as u32),
    );
    let copies = if spec.planted_itemset_size == 0 {
        0
    } else {
        spec.planted_copies
    };
    let mut is_planted = vec![false; spec.n_transactions];
    for row in sample(&mut rng, spec.n_transactions, copies) {
        is_planted[row] = true;
    }

    let noise_cap = match spec.planted_itemset_size {
        0 => usize::MAX,
        k => k - 1,
    };
    let rows = is_planted
        .into_iter()
        .map(|planted_row| {
            if planted_row {
                return planted.clone();
            }
            let mut items: Vec<u32> = (0..spec.universe_size as u32)
                .filter(|_| rng.random_bool(spec.noise_density))
                .collect();
            if items.len() > noise_cap {
                let keep = sample(&mut rng, items.len(), noise_cap);
                items = keep.into_iter().map(|i| items[i]).collect();
            }
            Itemset::from_indices(items)
        })
        .collect();
    TransactionDatabase::new(spec.universe_size, rows)
}
