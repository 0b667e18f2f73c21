//! Association rules `X => Y` over frequent itemsets, with exact rational
//! confidence `support(X u Y) / support(X)`.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{MineError, Result};
use crate::itemset::Itemset;
use crate::params::{format_ratio, MiningParams, Rational};
use crate::txdb::{SupportedItemset, TransactionDatabase};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AssociationRule {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    /// Support of the union.
    pub support: u64,
    pub confidence: Rational,
}

impl AssociationRule {
    pub fn confidence_text(&self) -> String {
        format_ratio(&self.confidence)
    }
}

#[derive(Serialize)]
struct RuleJson {
    antecedent: Vec<u64>,
    consequent: Vec<u64>,
    support: u64,
    confidence: String,
}

impl Serialize for AssociationRule {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        RuleJson {
            antecedent: self.antecedent.labels(),
            consequent: self.consequent.labels(),
            support: self.support,
            confidence: self.confidence_text(),
        }
        .serialize(serializer)
    }
}

/// Rules `X => Z \ X` for every input `Z` and non-empty proper subset `X`
/// whose confidence reaches `params.min_confidence`. Input supports are
/// recomputed and must match.
pub fn generate_rules(
    db: &TransactionDatabase,
    frequent: &[SupportedItemset],
    params: &MiningParams,
) -> Result<Vec<AssociationRule>> {
    params.validate()?;
    let mut cache: HashMap<Itemset, u64> = HashMap::new();
    let mut support_of = |x: &Itemset| {
        *cache
            .entry(x.clone())
            .or_insert_with(|| db.support_count(x))
    };

    let mut rules = BTreeSet::new();
    for z in frequent {
        if z.itemset.len() < 2 {
            return Err(MineError::Precondition(format!(
                "rule source {} has fewer than two items",
                z.itemset
            )));
        }
        db.check_in_range(&z.itemset)?;
        let actual = support_of(&z.itemset);
        if actual != z.support {
            return Err(MineError::Consistency {
                itemset: z.itemset.to_string(),
                given: z.support,
                actual,
            });
        }
        if actual < params.min_support_count {
            return Err(MineError::Precondition(format!(
                "rule source {} has support {actual} below the threshold {}",
                z.itemset, params.min_support_count
            )));
        }
        for antecedent in z.itemset.proper_subsets() {
            let confidence = Ratio::new(actual, support_of(&antecedent));
            if confidence >= params.min_confidence {
                let consequent = z.itemset.difference(&antecedent);
                rules.insert(AssociationRule {
                    antecedent,
                    consequent,
                    support: actual,
                    confidence,
                });
            }
        }
    }
    Ok(rules.into_iter().collect())
}

/// Every subset with at least two items of the given itemsets, with fresh
/// supports. Rule generation needs these because confidence divides by the
/// support of non-maximal antecedents.
pub fn expand_frequent_subsets(
    db: &TransactionDatabase,
    maximal: &[SupportedItemset],
) -> Result<Vec<SupportedItemset>> {
    let mut all: BTreeSet<Itemset> = BTreeSet::new();
    for m in maximal {
        db.check_in_range(&m.itemset)?;
        if m.itemset.len() >= 2 {
            all.insert(m.itemset.clone());
            all.extend(
                m.itemset
                    .proper_subsets()
                    .into_iter()
                    .filter(|s| s.len() >= 2),
            );
        }
    }
    all.into_iter().map(|x| db.support(&x)).collect()
}

/// Keeps rules of the form `{X1, ..., Xn} => Y` with a single consequent item.
pub fn single_consequent_only(rules: Vec<AssociationRule>) -> Vec<AssociationRule> {
    rules
        .into_iter()
        .filter(|r| r.consequent.len() == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::txdb::parse_matrix;

    fn worked() -> TransactionDatabase {
        parse_matrix("1 1 0\n1 0 1\n1 1 1\n1 0 1\n1 0 0").unwrap()
    }

    #[test]
    fn worked_example_rules() {
        let db = worked();
        let z = db.support(&Itemset::from_labels(&[1, 3])).unwrap();
        let params = MiningParams::new(2).with_min_confidence(Ratio::new(7, 10));
        let rules = generate_rules(&db, std::slice::from_ref(&z), &params).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].antecedent, Itemset::from_labels(&[3]));
        assert_eq!(rules[0].consequent, Itemset::from_labels(&[1]));
        assert_eq!(rules[0].confidence, Ratio::from_integer(1));
        assert_eq!(rules[0].support, 3);

        let rules = generate_rules(&db, &[z], &MiningParams::new(2)).unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].antecedent, Itemset::from_labels(&[1]));
        assert_eq!(rules[0].confidence, Ratio::new(3, 5));
        assert_eq!(rules[0].confidence_text(), "0.600000");
    }

    #[test]
    fn single_item_source_rejected() {
        let db = worked();
        let z = db.support(&Itemset::from_labels(&[1])).unwrap();
        assert!(matches!(
            generate_rules(&db, &[z], &MiningParams::new(2)),
            Err(MineError::Precondition(_))
        ));
    }

    #[test]
    fn stale_support_rejected() {
        let db = worked();
        let mut z = db.support(&Itemset::from_labels(&[1, 3])).unwrap();
        z.support = 4;
        assert!(matches!(
            generate_rules(&db, &[z], &MiningParams::new(2)),
            Err(MineError::Consistency {
                given: 4,
                actual: 3,
                ..
            })
        ));
    }

    #[test]
    fn expansion_and_single_consequent() {
        let db = parse_matrix("1 1 1\n1 1 1\n1 1 0").unwrap();
        let top = db.support(&Itemset::from_labels(&[1, 2, 3])).unwrap();
        let expanded = expand_frequent_subsets(&db, &[top]).unwrap();
        assert_eq!(expanded.len(), 4);
        let rules = generate_rules(&db, &expanded, &MiningParams::new(2)).unwrap();
        // Three pairs give two rules each, the triple gives six.
        assert_eq!(rules.len(), 12);
        assert_eq!(single_consequent_only(rules).len(), 9);
    }
}
