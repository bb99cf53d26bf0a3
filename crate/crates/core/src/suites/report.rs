//! Per-identity outcome records and the JSON report envelope.

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "shearq-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Relative numeric norms of an identity at each modulus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericSummary {
    pub moduli: Vec<u32>,
    pub norms: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl NumericSummary {
    pub fn max_norm(&self) -> f64 {
        self.norms.iter().copied().fold(0.0, f64::max)
    }

    pub fn min_norm(&self) -> f64 {
        self.norms.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub elapsed_ms: f64,
    /// Digest of the nonzero difference, kept for every failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Corrected variant of a printed identity.
    #[serde(default)]
    pub diagnostic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, pass: bool) -> Self {
        IdentityReport {
            id: id.into(),
            anchor: anchor.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            elapsed_ms: 0.0,
            witness: None,
            diagnostic: false,
            numeric: None,
            detail: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        if self.status == Status::Fail && self.witness.is_none() {
            self.witness = Some("nonzero difference".into());
        }
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn with_numeric(mut self, n: NumericSummary) -> Self {
        self.numeric = Some(n);
        self
    }

    pub fn diagnostic(mut self, yes: bool) -> Self {
        self.diagnostic = yes;
        self
    }

    pub fn timed(mut self, start: std::time::Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
    pub moduli: Vec<u32>,
    pub samples: usize,
    pub suites: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub environment: Environment,
    pub reports: Vec<IdentityReport>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}
