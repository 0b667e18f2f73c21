//! Text, JSON and CSV renderings of a mining outcome.
//!
//! The text layout prints one result per line: the 0/1 row over the item
//! universe, the `I<n>` labels, then the support.

use std::fmt::Write as _;

use serde::Serialize;

use crate::engine::{Counters, Outcome};
use crate::params::{format_ratio, Rational};
use crate::rules::AssociationRule;
use crate::txdb::{SupportedItemset, TransactionDatabase};

pub const NO_FREQUENT: &str = "no frequent itemset";

pub struct RuleSection<'a> {
    pub min_confidence: Rational,
    pub rules: &'a [AssociationRule],
}

pub fn render_text(
    outcome: &Outcome,
    db: &TransactionDatabase,
    rules: Option<&RuleSection<'_>>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algorithm: {}", outcome.algorithm);
    let _ = writeln!(out, "transactions: {}", db.len());
    let _ = writeln!(out, "items: {}", db.universe_size());
    let _ = writeln!(out, "min_support: {}", outcome.min_support_count);
    if outcome.itemsets.is_empty() {
        let _ = writeln!(
            out,
            "{NO_FREQUENT} at minimum support {}",
            outcome.min_support_count
        );
    } else {
        let _ = writeln!(out, "level: {}", outcome.level);
        out.push_str("THE FREQUENT ITEM SETS ARE:\n");
        for s in &outcome.itemsets {
            let _ = writeln!(
                out,
                "{} | {} | support {}",
                s.itemset.to_row(db.universe_size()),
                s.itemset,
                s.support
            );
        }
    }
    let _ = writeln!(out, "counters: {}", counters_text(&outcome.counters));
    if let Some(section) = rules {
        let _ = writeln!(
            out,
            "RULES (min confidence {}): {}",
            format_ratio(&section.min_confidence),
            section.rules.len()
        );
        for r in section.rules {
            let _ = writeln!(
                out,
                "{} => {} | support {} | confidence {}",
                r.antecedent,
                r.consequent,
                r.support,
                r.confidence_text()
            );
        }
    }
    out
}

fn counters_text(counters: &Counters) -> String {
    match counters {
        Counters::Mfif(c) => format!(
            "start_level={} levels_descended={} subset_expansions={} counting_passes={} scans={} peak_pool={}",
            c.start_level, c.levels_descended, c.subset_expansions, c.counting_passes, c.scans, c.peak_pool
        ),
        Counters::Apriori {
            scans,
            levels,
            frequent_itemsets,
        } => format!("scans={scans} levels={levels} frequent_itemsets={frequent_itemsets}"),
        Counters::Brute { frequent_itemsets } => format!("frequent_itemsets={frequent_itemsets}"),
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    algorithm: &'static str,
    min_support_count: u64,
    level: usize,
    itemsets: &'a [SupportedItemset],
    #[serde(skip_serializing_if = "Option::is_none")]
    rules: Option<&'a [AssociationRule]>,
    counters: &'a Counters,
}

pub fn render_json(outcome: &Outcome, rules: Option<&RuleSection<'_>>) -> String {
    let report = JsonReport {
        algorithm: outcome.algorithm.name(),
        min_support_count: outcome.min_support_count,
        level: outcome.level,
        itemsets: &outcome.itemsets,
        rules: rules.map(|r| r.rules),
        counters: &outcome.counters,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct CsvRow {
    kind: &'static str,
    items: String,
    consequent: String,
    support: u64,
    confidence: String,
}

/// One `itemset` row per result, then one `rule` row per rule.
pub fn render_csv(outcome: &Outcome, rules: Option<&RuleSection<'_>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for s in &outcome.itemsets {
        writer
            .serialize(CsvRow {
                kind: "itemset",
                items: s.itemset.to_string(),
                consequent: String::new(),
                support: s.support,
                confidence: String::new(),
            })
            .expect("in-memory csv");
    }
    for r in rules.map_or(&[][..], |r| r.rules) {
        writer
            .serialize(CsvRow {
                kind: "rule",
                items: r.antecedent.to_string(),
                consequent: r.consequent.to_string(),
                support: r.support,
                confidence: r.confidence_text(),
            })
            .expect("in-memory csv");
    }
    if outcome.itemsets.is_empty() && rules.is_none() {
        writer
            .write_record(["kind", "items", "consequent", "support", "confidence"])
            .expect("in-memory csv");
    }
    String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}
