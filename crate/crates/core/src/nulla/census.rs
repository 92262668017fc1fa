//! Batch runs over graph collections, bucketed by order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{nulla_degree, DegreeReport, NullaDegree, Schedule, SearchOptions};
use crate::error::{Error, Result};
use crate::graph::{is_4critical, write_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    pub cap: usize,
    pub schedule: Schedule,
    pub search: SearchOptions,
    /// Worker threads; 0 picks one per core.
    pub workers: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            cap: 4,
            schedule: Schedule::Mod3,
            search: SearchOptions::default(),
            workers: 0,
        }
    }
}

/// Counters for one vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusRow {
    pub n: usize,
    pub graphs: usize,
    pub four_critical: usize,
    /// 4-critical graphs by exact certificate degree.
    pub by_degree: BTreeMap<usize, usize>,
    pub above_cap: usize,
    pub failures: usize,
}

impl CensusRow {
    pub fn with_degree(&self, d: usize) -> usize {
        self.by_degree.get(&d).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct CensusFailure {
    /// Position in the input.
    pub index: usize,
    pub n: usize,
    pub graph6: Option<String>,
    pub error: Error,
}

/// One analyzed 4-critical graph.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub index: usize,
    pub report: DegreeReport,
}

#[derive(Debug, Clone, Default)]
pub struct CensusTable {
    pub rows: BTreeMap<usize, CensusRow>,
    /// In input order.
    pub critical: Vec<CensusEntry>,
    pub failures: Vec<CensusFailure>,
}

impl CensusTable {
    pub fn row(&self, n: usize) -> Option<&CensusRow> {
        self.rows.get(&n)
    }
}

enum Outcome {
    Ordinary,
    Critical(DegreeReport),
    Failed(Error),
}

fn classify(g: &Graph, cfg: &CensusConfig) -> Outcome {
    match is_4critical(g) {
        Ok(false) => Outcome::Ordinary,
        Ok(true) => match nulla_degree(g, cfg.cap, cfg.schedule, &cfg.search) {
            Ok(r) => Outcome::Critical(r),
            Err(f) => Outcome::Failed(f.error),
        },
        Err(e) => Outcome::Failed(e),
    }
}

/// Finds the 4-critical graphs among `graphs` and their certificate
/// degrees. Per-graph errors are recorded, not propagated; only a failure
/// to start the worker pool is an error.
pub fn census(graphs: &[Graph], cfg: &CensusConfig) -> Result<CensusTable> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Capacity(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<Outcome> = pool.install(|| graphs.par_iter().map(|g| classify(g, cfg)).collect());

    let mut table = CensusTable::default();
    for (index, (g, outcome)) in graphs.iter().zip(outcomes).enumerate() {
        let n = g.n();
        let row = table.rows.entry(n).or_insert_with(|| CensusRow {
            n,
            ..CensusRow::default()
        });
        row.graphs += 1;
        match outcome {
            Outcome::Ordinary => {}
            Outcome::Critical(report) => {
                row.four_critical += 1;
                match report.degree {
                    Some(NullaDegree::Exact(d)) => *row.by_degree.entry(d).or_default() += 1,
                    _ => row.above_cap += 1,
                }
                table.critical.push(CensusEntry { index, report });
            }
            Outcome::Failed(error) => {
                row.failures += 1;
                table.failures.push(CensusFailure {
                    index,
                    n,
                    graph6: write_graph6(g).ok(),
                    error,
                });
            }
        }
    }
    Ok(table)
}
