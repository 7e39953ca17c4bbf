//! Machine-readable reports and their json, csv and text renderings.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Settings shared by every command.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub max_degree: Option<usize>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: envelope_lab::algebra::DEFAULT_PRIME as u64,
            seed: 0,
            trials: 50,
            max_degree: None,
            format: Format::Json,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub max_degree: Option<usize>,
    pub version: &'static str,
    pub inputs_digest: String,
}

/// One row of a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Item {
    pub id: String,
    pub passed: bool,
    pub summary: String,
    pub data: Value,
}

impl Item {
    pub fn new(id: impl Into<String>, passed: bool, summary: impl Into<String>, data: impl Serialize) -> Item {
        Item {
            id: id.into(),
            passed,
            summary: summary.into(),
            data: serde_json::to_value(data).expect("report data serializes"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub degenerate_resamples: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub config: ConfigEcho,
    pub results: Vec<Item>,
    pub summary: Summary,
    pub timings_ms: BTreeMap<String, f64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// The JSON form without `timings_ms`: identical for identical inputs.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timings_ms");
        serde_json::to_string_pretty(&v).unwrap()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["command", "id", "passed", "summary"]).unwrap();
        for item in &self.results {
            w.write_record([self.command.as_str(), &item.id, if item.passed { "true" } else { "false" }, &item.summary])
                .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_text(&self) -> String {
        let width = self.results.iter().map(|i| i.id.len()).max().unwrap_or(0);
        let mut out = format!(
            "{} (prime {}, seed {}, envelope-lab {})\n",
            self.command, self.config.prime, self.config.seed, self.config.version
        );
        for item in &self.results {
            let mark = if item.passed { "PASS" } else { "FAIL" };
            out += &format!("{mark}  {:width$}  {}\n", item.id, item.summary);
        }
        let s = self.summary;
        out += &format!(
            "{} passed, {} failed, {} degenerate resamples",
            s.passed, s.failed, s.degenerate_resamples
        );
        if let Some(total) = self.timings_ms.get("total") {
            out += &format!(", {:.1} s", total / 1000.0);
        }
        out + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }
}

/// Collects items and timings while a command runs.
pub struct ReportBuilder {
    command: String,
    config: ConfigEcho,
    results: Vec<Item>,
    resamples: usize,
    timings: BTreeMap<String, f64>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str, cfg: &RunConfig, inputs: &str) -> ReportBuilder {
        ReportBuilder {
            command: command.to_string(),
            config: ConfigEcho {
                prime: cfg.prime,
                seed: cfg.seed,
                trials: cfg.trials,
                max_degree: cfg.max_degree,
                version: env!("CARGO_PKG_VERSION"),
                inputs_digest: format!("{:x}", Sha256::digest(inputs.as_bytes())),
            },
            results: Vec::new(),
            resamples: 0,
            timings: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub fn push(&mut self, item: Item) {
        self.results.push(item);
    }

    pub fn add_resamples(&mut self, n: usize) {
        self.resamples += n;
    }

    /// Times `f` under `label`.
    pub fn timed<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.timings.insert(label.to_string(), round_ms(t.elapsed().as_secs_f64() * 1000.0));
        out
    }

    pub fn finish(mut self) -> Report {
        self.timings.insert("total".into(), round_ms(self.started.elapsed().as_secs_f64() * 1000.0));
        let passed = self.results.iter().filter(|i| i.passed).count();
        Report {
            command: self.command,
            config: self.config,
            summary: Summary { passed, failed: self.results.len() - passed, degenerate_resamples: self.resamples },
            results: self.results,
            timings_ms: self.timings,
        }
    }
}

fn round_ms(ms: f64) -> f64 {
    (ms * 10.0).round() / 10.0
}
