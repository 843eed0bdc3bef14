//! Deterministic JSON reports.

use std::collections::BTreeMap;

use azumaya::linalg::Matrix;
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Matrices with more rows or columns than this are digested unless full witnesses are requested.
pub const WITNESS_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Full {
        rows: usize,
        cols: usize,
        entries: Vec<Vec<String>>,
    },
    Digest {
        rows: usize,
        cols: usize,
        rank: usize,
        sha256: String,
    },
}

impl Witness {
    pub fn new(m: &Matrix, full: bool) -> Witness {
        let entries = || -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect()
        };
        if full || (m.rows() <= WITNESS_LIMIT && m.cols() <= WITNESS_LIMIT) {
            return Witness::Full {
                rows: m.rows(),
                cols: m.cols(),
                entries: entries(),
            };
        }
        let mut hasher = Sha256::new();
        hasher.update(format!("{}x{}\n", m.rows(), m.cols()));
        for (i, j, v) in m.nonzero_entries() {
            hasher.update(format!("{i},{j},{v}\n"));
        }
        Witness::Digest {
            rows: m.rows(),
            cols: m.cols(),
            rank: m.rank(),
            sha256: hex::encode(hasher.finalize()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub verdicts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub ranks: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<CheckError>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckError {
    /// `"inconsistency"` or `"input"`.
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    /// object → check → result.
    pub results: BTreeMap<String, BTreeMap<String, CheckReport>>,
    pub inconsistencies: Vec<String>,
    pub input_errors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_suite: Option<SuiteReport>,
    /// Milliseconds per `object/check`; only present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u128>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases: usize,
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT_ERROR: i32 = 1;
    pub const INCONSISTENCY: i32 = 2;
}

impl Report {
    pub fn exit_status(&self) -> i32 {
        let suite_failed = self.property_suite.as_ref().is_some_and(|s| !s.passed);
        if !self.inconsistencies.is_empty() || suite_failed {
            exit::INCONSISTENCY
        } else if !self.input_errors.is_empty() {
            exit::INPUT_ERROR
        } else {
            exit::OK
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per `object/check` with its verdicts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (object, checks) in &self.results {
            for (check, r) in checks {
                let mut line = format!("{object:<16} {check:<20}");
                if let Some(e) = &r.error {
                    line.push_str(&format!(" {}: {}", e.kind.to_uppercase(), e.message));
                } else {
                    for (k, v) in &r.verdicts {
                        line.push_str(&format!(" {k}={v}"));
                    }
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        if let Some(s) = &self.property_suite {
            out.push_str(&format!(
                "property suite: seed {} cases {} violations {}\n",
                s.seed,
                s.cases,
                s.violations.len()
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use azumaya::linalg::Field;

    #[test]
    fn large_witnesses_are_digested() {
        let q = Field::Rational;
        let small = Witness::new(&Matrix::identity(q, 2), false);
        assert!(matches!(small, Witness::Full { rows: 2, .. }));
        let big = Matrix::identity(q, 65);
        match Witness::new(&big, false) {
            Witness::Digest { rank, sha256, .. } => {
                assert_eq!(rank, 65);
                assert_eq!(sha256.len(), 64);
            }
            other => panic!("expected digest, got {other:?}"),
        }
        assert!(matches!(Witness::new(&big, true), Witness::Full { .. }));
    }
}
