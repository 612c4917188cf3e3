use std::path::PathBuf;
use std::str::FromStr;

use involut_core::limits::Limits;
use serde::Serialize;

use crate::HarnessError;

/// Groups used when no family is given; sweeps keep those within the order cap.
pub const BUILTIN_FAMILY: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D8",
    "C9", "C3xC3", "C10", "D10", "C11", "C12", "C2xC6", "D12", "C13", "C14", "D14", "C15",
    "C16", "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "D16", "C2xD8", "S4",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (json or csv)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub seed: u64,
    pub instance_count: usize,
    pub max_group_order: usize,
    pub max_set_size: usize,
    pub group_family: Vec<String>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 0,
            instance_count: 100,
            max_group_order: 16,
            max_set_size: 12,
            group_family: BUILTIN_FAMILY.iter().map(|s| s.to_string()).collect(),
            output_path: None,
            format: Format::Json,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: String| Err(HarnessError::Config(m));
        if self.instance_count == 0 {
            return bad("instance count must be positive".into());
        }
        if self.max_group_order == 0 || self.max_set_size == 0 {
            return bad("caps must be positive".into());
        }
        let cap = Limits::global().group_order;
        if self.max_group_order > cap {
            return bad(format!(
                "max group order {} exceeds the library cap {cap}",
                self.max_group_order
            ));
        }
        if self.group_family.is_empty() {
            return bad("group family is empty".into());
        }
        Ok(())
    }
}
