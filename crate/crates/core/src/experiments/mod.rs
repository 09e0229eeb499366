//! Experiment drivers: each returns an [`ExperimentReport`] that is
//! byte-for-byte reproducible from its parameters and seed.

mod bipartite;
mod classes;
mod coeffs;
mod consistency;
mod identify;

pub use bipartite::{minq, verify_bipartite, verify_quartic};
pub use classes::{rootcloud_graphs, rootcloud_order, verify_n3, CloudRow, RootCloud};
pub use coeffs::{verify_coeffs, verify_coeffs_random, MAX_RANDOM_COEFF_ORDER};
pub use consistency::{kn_minus_2k2, stability_consistency};
pub use identify::{h_candidates, identify_h, random_corpus, IdentifyH};

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::rootfind::{DEFAULT_PRECISION_BITS, DEFAULT_REAL_TOL, DEFAULT_SEED};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Numeric knobs shared by every experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub precision_bits: usize,
    /// Imaginary parts at most this large count as real.
    pub tol: f64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { precision_bits: DEFAULT_PRECISION_BITS, tol: DEFAULT_REAL_TOL, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub all_passed: bool,
    pub counts: BTreeMap<String, u64>,
    pub extrema: BTreeMap<String, Value>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<String, Value>,
    pub items: Vec<Value>,
    pub summary: Summary,
    pub tool_version: String,
    /// Wall-clock time; left out unless asked for, so reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ExperimentReport {
    pub fn all_passed(&self) -> bool {
        self.summary.all_passed
    }

    pub fn violations(&self) -> &[String] {
        &self.summary.violations
    }

    pub fn count(&self, key: &str) -> u64 {
        self.summary.counts.get(key).copied().unwrap_or(0)
    }

    pub fn extremum(&self, key: &str) -> Option<&Value> {
        self.summary.extrema.get(key)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

pub(crate) struct ReportBuilder {
    name: &'static str,
    parameters: BTreeMap<String, Value>,
    items: Vec<Value>,
    counts: BTreeMap<String, u64>,
    extrema: BTreeMap<String, Value>,
    violations: Vec<String>,
}

fn json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

impl ReportBuilder {
    pub(crate) fn new(name: &'static str) -> Self {
        ReportBuilder {
            name,
            parameters: BTreeMap::new(),
            items: Vec::new(),
            counts: BTreeMap::new(),
            extrema: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        self.parameters.insert(key.into(), json(v));
        self
    }

    pub(crate) fn item(&mut self, v: impl Serialize) {
        self.items.push(json(v));
    }

    pub(crate) fn count(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.into()).or_default() += n;
    }

    pub(crate) fn extremum(&mut self, key: &str, v: impl Serialize) {
        self.extrema.insert(key.into(), json(v));
    }

    pub(crate) fn violation(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }

    pub(crate) fn finish(self) -> ExperimentReport {
        ExperimentReport {
            experiment: self.name.into(),
            parameters: self.parameters,
            items: self.items,
            summary: Summary {
                all_passed: self.violations.is_empty(),
                counts: self.counts,
                extrema: self.extrema,
                violations: self.violations,
            },
            tool_version: TOOL_VERSION.into(),
            timing_ms: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_flags_violations() {
        let mut b = ReportBuilder::new("demo");
        b.param("n", 3);
        b.count("items", 2);
        let ok = b.finish();
        assert!(ok.all_passed());
        let mut b = ReportBuilder::new("demo");
        b.violation("bad");
        let bad = b.finish();
        assert!(!bad.all_passed() && bad.violations().len() == 1);
        assert!(!ok.to_json().contains("timing_ms"));
    }
}
