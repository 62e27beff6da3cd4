//! Verification reports, one per identity instance, written as JSON lines.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::clifford::Multivector;

/// Outcome of checking one identity instance.
///
/// `max_abs_error` is `max |lhs - rhs| / max(1, |rhs|)`, which is the plain
/// absolute error wherever the reference value is at most 1 in size. Exact
/// suites report the number of mismatching instances with a threshold of 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub params: BTreeMap<String, Value>,
    pub grid_spec: String,
    pub max_abs_error: f64,
    pub threshold: f64,
    pub exact: bool,
    pub passed: bool,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn numeric(id: &str, params: Params, grid_spec: impl Into<String>, err: f64, threshold: f64) -> Self {
        VerificationReport {
            identity_id: id.to_string(),
            params: params.0,
            grid_spec: grid_spec.into(),
            max_abs_error: err,
            threshold,
            exact: false,
            passed: err < threshold,
            runtime_ms: 0,
            error: None,
        }
    }

    pub fn exact(id: &str, params: Params, grid_spec: impl Into<String>, mismatches: usize) -> Self {
        VerificationReport {
            exact: true,
            passed: mismatches == 0,
            threshold: 0.0,
            max_abs_error: mismatches as f64,
            ..Self::numeric(id, params, grid_spec, 0.0, 0.0)
        }
    }

    pub fn failed(id: &str, params: Params, grid_spec: impl Into<String>, threshold: f64, err: &crate::Error) -> Self {
        VerificationReport {
            passed: false,
            max_abs_error: f64::NAN,
            error: Some(err.to_string()),
            ..Self::numeric(id, params, grid_spec, 0.0, threshold)
        }
    }

    pub fn with_runtime(mut self, ms: u64) -> Self {
        self.runtime_ms = ms;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Builder for the `params` map.
#[derive(Debug, Clone, Default)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }
}

/// `|a - b| / max(1, |b|)`.
pub fn scaled_error(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / b.abs().max(1.0)
}

/// `max` that keeps a NaN instead of dropping it.
pub fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// The multivector form of [`scaled_error`], in the max norm.
pub fn scaled_error_mv(a: &Multivector<f64>, b: &Multivector<f64>) -> f64 {
    a.sub(b).max_norm() / b.max_norm().max(1.0)
}
