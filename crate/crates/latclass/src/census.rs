//! Census runs spread over a worker pool.
//!
//! Work items of one cardinality are enumerated in parallel and merged by set
//! union of canonical forms, so the result does not depend on scheduling.

use std::collections::BTreeSet;

use latclass_core::enumeration::{census_table_by, enumerate_work_item, work_items, Budget};
use latclass_core::{CanonicalForm, CensusMode, CensusResult, EquivalenceGroup};
use rayon::prelude::*;

use crate::Failure;

pub struct Runner {
    pool: rayon::ThreadPool,
    budget: u64,
    group: EquivalenceGroup,
}

impl Runner {
    /// `jobs` worker threads; `budget` caps the hull-closure tests of one run.
    pub fn new(jobs: usize, budget: Option<u64>) -> Result<Self, Failure> {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        Ok(Runner { pool, budget: budget.unwrap_or(u64::MAX), group: EquivalenceGroup::Full })
    }

    pub fn with_group(mut self, group: EquivalenceGroup) -> Self {
        self.group = group;
        self
    }

    /// Runs `op` inside the worker pool.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        self.pool.install(op)
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// All classes with `w` lattice points, sorted.
    pub fn cardinality_classes(&self, w: i64, budget: &Budget) -> latclass_core::Result<Vec<CanonicalForm>> {
        let items = work_items(w)?;
        let group = self.group;
        let parts: Vec<Vec<CanonicalForm>> = self.pool.install(|| {
            items
                .par_iter()
                .map(|&item| enumerate_work_item(w, item, group, budget))
                .collect::<latclass_core::Result<_>>()
        })?;
        let merged: BTreeSet<CanonicalForm> = parts.into_iter().flatten().collect();
        Ok(merged.into_iter().collect())
    }

    pub fn table(
        &self,
        mode: CensusMode,
        min: i64,
        max: i64,
        symmetric_only: bool,
    ) -> Result<Vec<CensusResult>, Failure> {
        if min > max {
            return Err(Failure::Usage(format!("--min {min} exceeds --max {max}")));
        }
        let budget = Budget::new(self.budget);
        Ok(census_table_by(mode, min..=max, symmetric_only, |w| {
            self.cardinality_classes(w, &budget)
        })?)
    }
}
