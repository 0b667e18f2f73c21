//! Comparative timing harness. Each corpus/algorithm pair gets one
//! untimed warm-up run followed by the timed repetitions; the reported
//! time is the median. Runs are strictly sequential.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::engine::{run, Algorithm, Outcome};
use crate::error::Result;
use crate::params::{MinSupport, MiningParams};
use crate::txdb::TransactionDatabase;

pub struct Corpus {
    pub name: String,
    pub db: TransactionDatabase,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub corpus: String,
    pub algorithm: &'static str,
    pub n_transactions: usize,
    pub universe_size: usize,
    pub min_support_count: Option<u64>,
    pub wall_time_seconds: Option<f64>,
    pub scans_or_levels: Option<usize>,
    pub subset_expansions: Option<u64>,
    pub result_level: Option<usize>,
    pub result_count: Option<usize>,
    pub error: Option<String>,
}

impl BenchRow {
    pub fn succeeded(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithms: Vec<Algorithm>,
    pub min_support: MinSupport,
    pub pool_cap: usize,
    pub repetitions: usize,
}

pub fn median(samples: &mut [f64]) -> f64 {
    assert!(!samples.is_empty());
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

fn time_runs(
    db: &TransactionDatabase,
    params: &MiningParams,
    algorithm: Algorithm,
    repetitions: usize,
) -> Result<(f64, Outcome)> {
    let outcome = run(db, params, algorithm)?;
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        let timed = run(db, params, algorithm)?;
        samples.push(start.elapsed().as_secs_f64());
        debug_assert_eq!(timed, outcome);
    }
    Ok((median(&mut samples), outcome))
}

pub fn run_bench(corpora: &[Corpus], config: &BenchConfig) -> BenchReport {
    let mut report = BenchReport::default();
    for corpus in corpora {
        let db = &corpus.db;
        let params = MiningParams::from_min_support(config.min_support, db.len())
            .map(|p| p.with_pool_cap(config.pool_cap));
        for &algorithm in &config.algorithms {
            let mut row = BenchRow {
                corpus: corpus.name.clone(),
                algorithm: algorithm.name(),
                n_transactions: db.len(),
                universe_size: db.universe_size(),
                min_support_count: None,
                wall_time_seconds: None,
                scans_or_levels: None,
                subset_expansions: None,
                result_level: None,
                result_count: None,
                error: None,
            };
            let timed = params.as_ref().map_err(|e| e.to_string()).and_then(|p| {
                row.min_support_count = Some(p.min_support_count);
                time_runs(db, p, algorithm, config.repetitions).map_err(|e| e.to_string())
            });
            match timed {
                Ok((seconds, outcome)) => {
                    row.wall_time_seconds = Some(seconds);
                    row.scans_or_levels = Some(outcome.scans_or_levels());
                    row.subset_expansions = outcome.subset_expansions();
                    row.result_level = Some(outcome.level);
                    row.result_count = Some(outcome.top_count());
                }
                Err(message) => row.error = Some(message),
            }
            report.rows.push(row);
        }
    }
    report
}

impl BenchReport {
    pub fn all_failed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| !r.succeeded())
    }

    /// Corpora on which successful algorithms disagree on the result level
    /// or the number of top-level itemsets.
    pub fn inconsistent_corpora(&self) -> Vec<String> {
        let mut seen: BTreeMap<&str, (Option<usize>, Option<usize>)> = BTreeMap::new();
        let mut bad = Vec::new();
        for row in self.rows.iter().filter(|r| r.succeeded()) {
            let key = (row.result_level, row.result_count);
            match seen.get(row.corpus.as_str()) {
                Some(prev) if *prev != key => {
                    if !bad.contains(&row.corpus) {
                        bad.push(row.corpus.clone());
                    }
                }
                Some(_) => {}
                None => {
                    seen.insert(&row.corpus, key);
                }
            }
        }
        bad
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    /// Wide table for plotting: one line per corpus, `n_transactions`
    /// followed by the median seconds of each algorithm (blank on failure).
    pub fn write_plot_data<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut algorithms: Vec<&str> = Vec::new();
        let mut corpora: Vec<(&str, usize)> = Vec::new();
        for row in &self.rows {
            if !algorithms.contains(&row.algorithm) {
                algorithms.push(row.algorithm);
            }
            if !corpora.iter().any(|(c, _)| *c == row.corpus) {
                corpora.push((&row.corpus, row.n_transactions));
            }
        }
        let mut writer = csv::Writer::from_writer(out);
        let mut header = vec!["n_transactions".to_string()];
        header.extend(algorithms.iter().map(|a| format!("{a}_seconds")));
        writer.write_record(&header)?;
        for (corpus, n) in corpora {
            let mut record = vec![n.to_string()];
            for alg in &algorithms {
                let cell = self
                    .rows
                    .iter()
                    .find(|r| r.corpus == corpus && r.algorithm == *alg)
                    .and_then(|r| r.wall_time_seconds)
                    .map_or(String::new(), |s| format!("{s:.6}"));
                record.push(cell);
            }
            writer.write_record(&record)?;
        }
        writer.flush()?;
        Ok(())
    }
}
