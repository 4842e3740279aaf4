//! Verification reports: one named check, exact pass/fail, and everything
//! needed to replay it.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::exactring::{fmt_rational, Rational};

/// Printed at the top of every report document.
pub const REPRESENTATION_CAVEAT: &str = "identities are verified exactly in concrete matrix representations; \
     this is necessary but not sufficient for the corresponding identities in U(g)⊗U(g)";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub pass: bool,
    /// Nonzero entries of the difference operator (0 ⇔ pass for identity checks).
    pub residual_support: usize,
    pub params: BTreeMap<String, String>,
    pub rep: String,
    pub seed: Option<u64>,
    /// Measured quantities that are recorded rather than asserted.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
    /// Wall time; excluded from JSON so that reports are byte-reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, rep: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            pass: true,
            residual_support: 0,
            params: BTreeMap::new(),
            rep: rep.into(),
            seed: None,
            notes: BTreeMap::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Identity check outcome from a residual count.
    pub fn with_residual(mut self, residual: usize) -> Self {
        self.residual_support = residual;
        self.pass = residual == 0;
        self
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn param(mut self, name: impl Into<String>, value: &Rational) -> Self {
        self.params.insert(name.into(), fmt_rational(value));
        self
    }

    pub fn params_from(mut self, params: &BTreeMap<String, String>) -> Self {
        self.params.extend(params.iter().map(|(k, v)| (k.clone(), v.clone())));
        self
    }

    pub fn note(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.notes.insert(key.into(), value.into());
        self
    }

    pub fn seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Deterministic merge: sorted by check name, stable within equal names.
pub fn merge_reports(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}
