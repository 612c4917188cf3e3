//! Sweep driver and the JSON / CSV reports it writes.

use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{check, check_names, Outcome, Record};
use crate::config::{Format, SweepConfig};
use crate::family::Family;
use crate::HarnessError;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn tally(records: &[Record]) -> Self {
        let count = |o| records.iter().filter(|r| r.outcome == o).count();
        Summary {
            total: records.len(),
            passed: count(Outcome::Pass),
            failed: count(Outcome::Fail),
            skipped: count(Outcome::Skip),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub check: String,
    pub config: SweepConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// One row per record; measured values are embedded as a JSON object.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["index", "check", "subject", "seed", "hash", "outcome", "values", "detail"])
            .expect("in-memory write");
        for r in &self.records {
            let outcome = match r.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "fail",
                Outcome::Skip => "skip",
            };
            w.write_record([
                r.index.to_string(),
                self.check.clone(),
                r.subject.clone(),
                r.seed.map(|s| s.to_string()).unwrap_or_default(),
                r.hash.clone().unwrap_or_default(),
                outcome.to_string(),
                serde_json::to_string(&r.values).expect("values serialise"),
                r.detail.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<(), HarnessError> {
        fs::write(path, self.render(format)).map_err(|e| HarnessError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }
}

/// Runs `check_name` over the work the check plans for `cfg`. Items run in
/// parallel; records come back in plan order.
pub fn run_sweep(check_name: &str, cfg: &SweepConfig) -> Result<VerificationReport, HarnessError> {
    let start = Instant::now();
    cfg.validate()?;
    let c = check(check_name).ok_or_else(|| {
        HarnessError::UnknownCheck(format!("{check_name} (known: {})", check_names().join(", ")))
    })?;
    let family = Family::from_config(cfg)?;
    let plan = c.plan(cfg, &family);
    let mut records: Vec<Record> = plan.par_iter().map(|item| c.run(item, cfg, &family)).collect();
    records.sort_by_key(|r| r.index);
    Ok(VerificationReport {
        schema: SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        check: c.name().to_string(),
        config: cfg.clone(),
        summary: Summary::tally(&records),
        records,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
