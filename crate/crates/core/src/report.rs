//! Check reports: one record per verified claim, with machine serializations.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use crate::arith::{Modulus, Rational, Residue};
use crate::error::{Error, Result};

/// Suites a report can belong to; also the CLI's suite names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Identities,
    Congruences,
    Theorem1,
    TheoremTT,
    Section5,
    Section6,
    Wz,
    Abelian,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identities,
        Suite::Congruences,
        Suite::Theorem1,
        Suite::TheoremTT,
        Suite::Section5,
        Suite::Section6,
        Suite::Wz,
        Suite::Abelian,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Congruences => "congruences",
            Suite::Theorem1 => "theorem1",
            Suite::TheoremTT => "theoremTT",
            Suite::Section5 => "section5",
            Suite::Section6 => "section6",
            Suite::Wz => "wz",
            Suite::Abelian => "abelian",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Outcome of one check. Info marks exploratory output that asserts nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

/// Named integer parameters of a check, kept sorted for stable output.
pub type Params = BTreeMap<String, i64>;

/// Builds a parameter record from literal pairs.
pub fn params_from(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Fetches a required parameter.
pub fn get_param(params: &Params, key: &'static str) -> Result<i64> {
    params.get(key).copied().ok_or(Error::MissingParam(key))
}

/// A compared side of a check: a residue or an exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Residue(Residue),
    Exact(Rational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Residue(r) => write!(f, "{}", r.value()),
            Value::Exact(q) => write!(f, "{}", q),
        }
    }
}

/// Everything needed to re-run one check in isolation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: Suite,
    pub check_id: String,
    pub prime: Option<u64>,
    pub params: Params,
    pub modulus: Option<Modulus>,
    pub lhs: Value,
    pub rhs: Value,
    pub status: Status,
    pub elapsed: Duration,
}

impl CheckReport {
    /// Pass/fail report; status is pass exactly when the sides agree.
    pub fn comparing(
        suite: Suite,
        check_id: &str,
        prime: Option<u64>,
        params: Params,
        modulus: Option<Modulus>,
        lhs: Value,
        rhs: Value,
    ) -> CheckReport {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        CheckReport {
            suite,
            check_id: check_id.to_string(),
            prime,
            params,
            modulus,
            lhs,
            rhs,
            status,
            elapsed: Duration::ZERO,
        }
    }

    /// Exploratory report: both values recorded, nothing asserted.
    pub fn info(
        suite: Suite,
        check_id: &str,
        prime: Option<u64>,
        params: Params,
        modulus: Option<Modulus>,
        lhs: Value,
        rhs: Value,
    ) -> CheckReport {
        CheckReport { status: Status::Info, ..CheckReport::comparing(suite, check_id, prime, params, modulus, lhs, rhs) }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Sort key for canonical report ordering: suite, id, prime, params.
    pub fn canonical_key(&self) -> (Suite, &str, Option<u64>, Vec<(&String, &i64)>) {
        (self.suite, &self.check_id, self.prime, self.params.iter().collect())
    }

    fn params_flat(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v};")).collect()
    }

    /// One JSON object, schema-stable field order.
    pub fn json_line(&self) -> String {
        #[derive(Serialize)]
        struct ModulusLine {
            p: u64,
            k: u32,
        }
        #[derive(Serialize)]
        struct Line<'a> {
            suite: &'a str,
            check_id: &'a str,
            prime: Option<u64>,
            params: &'a Params,
            modulus: Option<ModulusLine>,
            lhs: String,
            rhs: String,
            status: &'a str,
            elapsed_ms: u64,
        }
        // elapsed_ms is pinned to 0: report bytes are deterministic across
        // runs and worker counts; wall time goes to the diagnostic stream
        let line = Line {
            suite: self.suite.as_str(),
            check_id: &self.check_id,
            prime: self.prime,
            params: &self.params,
            modulus: self.modulus.map(|m| ModulusLine { p: m.p, k: m.k }),
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            status: self.status.as_str(),
            elapsed_ms: 0,
        };
        serde_json::to_string(&line).expect("report serializes")
    }

    pub fn csv_header() -> &'static str {
        "suite,check_id,prime,params,modulus_p,modulus_k,lhs,rhs,status,elapsed_ms"
    }

    /// One CSV record; params flattened as key=value; pairs.
    pub fn csv_line(&self) -> String {
        let prime = self.prime.map(|p| p.to_string()).unwrap_or_default();
        let (mp, mk) = match self.modulus {
            Some(m) => (m.p.to_string(), m.k.to_string()),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},0",
            self.suite,
            self.check_id,
            prime,
            self.params_flat(),
            mp,
            mk,
            self.lhs,
            self.rhs,
            self.status.as_str()
        )
    }

    pub fn table_header() -> String {
        format!(
            "{:<11} {:<14} {:>5}  {:<24} {:>8}  {:>24} {:>24}  {}",
            "suite", "check", "p", "params", "modulus", "lhs", "rhs", "status"
        )
    }

    /// Human-readable row with fixed column layout.
    pub fn table_line(&self) -> String {
        let prime = self.prime.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
        let modulus = self.modulus.map(|m| m.to_string()).unwrap_or_else(|| "exact".into());
        format!(
            "{:<11} {:<14} {:>5}  {:<24} {:>8}  {:>24} {:>24}  {}",
            self.suite,
            self.check_id,
            prime,
            self.params_flat(),
            modulus,
            self.lhs.to_string(),
            self.rhs.to_string(),
            self.status.as_str()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Integer, Modulus};

    fn sample() -> CheckReport {
        let m = Modulus::new(5, 2);
        CheckReport::comparing(
            Suite::Congruences,
            "C4",
            Some(5),
            params_from(&[("n", 4)]),
            Some(m),
            Value::Residue(Residue::new(Integer::from(19), m)),
            Value::Residue(Residue::new(Integer::from(19), m)),
        )
    }

    #[test]
    fn comparing_sets_status_from_equality() {
        let r = sample();
        assert_eq!(r.status, Status::Pass);
        let m = Modulus::new(5, 2);
        let bad = CheckReport::comparing(
            Suite::Congruences,
            "C4",
            Some(5),
            Params::new(),
            Some(m),
            Value::Residue(Residue::new(Integer::from(1), m)),
            Value::Residue(Residue::new(Integer::from(2), m)),
        );
        assert_eq!(bad.status, Status::Fail);
    }

    #[test]
    fn json_line_is_schema_shaped() {
        let line = sample().json_line();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["suite"], "congruences");
        assert_eq!(v["check_id"], "C4");
        assert_eq!(v["prime"], 5);
        assert_eq!(v["params"]["n"], 4);
        assert_eq!(v["modulus"]["p"], 5);
        assert_eq!(v["modulus"]["k"], 2);
        assert_eq!(v["lhs"], "19");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["elapsed_ms"], 0);
    }

    #[test]
    fn csv_line_mirrors_fields() {
        assert_eq!(sample().csv_line(), "congruences,C4,5,n=4;,5,2,19,19,pass,0");
        assert_eq!(CheckReport::csv_header().split(',').count(), sample().csv_line().split(',').count());
    }

    #[test]
    fn exact_values_render_as_fractions() {
        let v = Value::Exact(Rational::new(Integer::from(-5), Integer::from(48)));
        assert_eq!(v.to_string(), "-5/48");
        let w = Value::Exact(Rational::new(Integer::from(7), Integer::from(1)));
        assert_eq!(w.to_string(), "7");
    }
}
