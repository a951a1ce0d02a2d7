//! Structured results of identity checks over parameter ranges.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

/// One parameter tuple with both sides of the identity rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub params: Vec<(String, i64)>,
    pub lhs: String,
    pub rhs: String,
}

impl Case {
    pub fn new(params: &[(&str, i64)], lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Case {
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    fn sort_key(&self) -> Vec<i64> {
        self.params.iter().map(|(_, v)| *v).collect()
    }
}

/// Outcome of checking one identity. `passed()` holds iff `failures` is
/// empty. `observations` carry data recorded without asserting anything
/// about it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub ranges: Vec<ParamRange>,
    pub failures: Vec<Case>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Case>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
    pub passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            ranges: Vec::new(),
            failures: Vec::new(),
            observations: Vec::new(),
            max_deviation: None,
            passed: true,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_range(mut self, name: &str, lo: i64, hi: i64) -> Self {
        self.ranges.push(ParamRange {
            name: name.to_string(),
            lo,
            hi,
        });
        self
    }

    pub fn fail(&mut self, case: Case) {
        self.failures.push(case);
        self.passed = false;
    }

    pub fn observe(&mut self, case: Case) {
        self.observations.push(case);
    }

    /// Absorbs the cases of a sub-report checked under the same identity.
    pub fn absorb(&mut self, other: VerificationReport) {
        for f in other.failures {
            self.fail(f);
        }
        self.observations.extend(other.observations);
        if let Some(d) = other.max_deviation {
            self.record_deviation(d);
        }
    }

    pub fn record_deviation(&mut self, d: f64) {
        self.max_deviation = Some(self.max_deviation.map_or(d, |m| m.max(d)));
    }

    /// Sorts cases by parameter tuple, stamps the elapsed time and
    /// re-derives `passed`.
    pub fn finish(mut self, started: Instant) -> Self {
        self.failures.sort_by_key(Case::sort_key);
        self.observations.sort_by_key(Case::sort_key);
        self.passed = self.failures.is_empty();
        self.elapsed = started.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_failures() {
        let mut r = VerificationReport::new("demo").with_range("n", 0, 3);
        assert!(r.passed());
        r.fail(Case::new(&[("n", 2)], "x", "y"));
        r.fail(Case::new(&[("n", 1)], "x", "y"));
        let r = r.finish(Instant::now());
        assert!(!r.passed);
        assert_eq!(r.failures[0].params[0].1, 1);
    }

    #[test]
    fn json_round_trip_skips_elapsed() {
        let r = VerificationReport::new("demo")
            .with_range("h", 1, 2)
            .finish(Instant::now());
        let s = serde_json::to_string(&r).unwrap();
        assert!(!s.contains("elapsed"));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.identity, "demo");
        assert!(back.passed);
    }
}
