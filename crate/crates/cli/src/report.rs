//! Report envelope shared by every subcommand, plus opt-in phase timing.
//!
//! Timings are off by default so that identical inputs (and seed) produce
//! byte-identical output; `--timings` adds wall-clock figures at the cost
//! of that reproducibility.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "tforge-report/1";

#[derive(Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

pub struct Phases {
    enabled: bool,
    started: Instant,
    entries: BTreeMap<String, u128>,
}

impl Phases {
    pub fn new(enabled: bool) -> Self {
        Phases {
            enabled,
            started: Instant::now(),
            entries: BTreeMap::new(),
        }
    }

    pub fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        if self.enabled {
            self.entries
                .insert(name.to_string(), t.elapsed().as_millis());
        }
        out
    }

    pub fn finish(mut self) -> Option<BTreeMap<String, u128>> {
        if !self.enabled {
            return None;
        }
        self.entries
            .insert("total".to_string(), self.started.elapsed().as_millis());
        Some(self.entries)
    }
}
