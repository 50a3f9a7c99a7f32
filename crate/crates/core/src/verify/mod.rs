//! A registry of named checks, each comparing exactly computed quantities
//! against a stated identity or inequality on small instances, and a
//! deterministic JSON report over a whole profile.

mod checks;
mod corpus;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::budget::Budget;
use crate::error::{Error, Result};

pub use corpus::{corpus, lookup, CorpusEntry, CORPUS};

pub const SUITE_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(format!("unknown profile {s:?} (expected quick or full)")),
        }
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

/// Limits a profile imposes on check instances.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub profile: Profile,
    /// Largest graph handed to an exponential search.
    pub cap: usize,
    /// Largest graph whose φ or φ^a_b is computed exactly.
    pub phi_cap: usize,
    /// Largest number of Mycielski iterations.
    pub max_t: usize,
    pub node_limit: u64,
}

impl Ctx {
    pub fn new(profile: Profile) -> Ctx {
        match profile {
            Profile::Quick => Ctx {
                profile,
                cap: 12,
                phi_cap: 12,
                max_t: 1,
                node_limit: 20_000_000,
            },
            Profile::Full => Ctx {
                profile,
                cap: 45,
                phi_cap: 24,
                max_t: 2,
                node_limit: 200_000_000,
            },
        }
    }

    pub fn with_node_limit(mut self, node_limit: u64) -> Ctx {
        self.node_limit = node_limit;
        self
    }

    pub fn budget(&self) -> Budget {
        Budget::new(self.node_limit)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Exhausted,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Exhausted => "EXHAUSTED",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: Value,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Why a check was skipped, failed or ran out of budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Only recorded on request, so that reports are reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub exhausted: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite_version: &'static str,
    pub profile: Profile,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(profile: Profile, results: Vec<CheckResult>) -> Report {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
                Status::Exhausted => summary.exhausted += 1,
            }
        }
        Report {
            suite_version: SUITE_VERSION,
            profile,
            results,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// What a check body reports on success.
pub(crate) struct Outcome {
    pub pass: bool,
    pub lhs: Value,
    pub rhs: Value,
    pub witness: Option<Value>,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn new(pass: bool, lhs: impl Serialize, rhs: impl Serialize) -> Outcome {
        Outcome {
            pass,
            lhs: serde_json::to_value(lhs).expect("serializable"),
            rhs: serde_json::to_value(rhs).expect("serializable"),
            witness: None,
            detail: None,
        }
    }

    pub fn witness(mut self, w: impl Serialize) -> Outcome {
        self.witness = Some(serde_json::to_value(w).expect("serializable"));
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Outcome {
        self.detail = Some(d.into());
        self
    }
}

/// One registered check.
pub struct CheckDef {
    pub name: &'static str,
    pub statement: &'static str,
    pub(crate) instances: fn(&Ctx) -> Vec<Value>,
    pub(crate) run: fn(&Value, &Ctx) -> Result<Outcome>,
}

pub fn registry() -> &'static [CheckDef] {
    checks::REGISTRY
}

pub fn find(name: &str) -> Result<&'static CheckDef> {
    registry()
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::Precondition(format!("unknown check {name:?}")))
}

impl CheckDef {
    /// Parameter records this check runs on under `ctx`.
    pub fn instances(&self, ctx: &Ctx) -> Vec<Value> {
        (self.instances)(ctx)
    }

    /// Runs one instance. Errors become statuses: budget exhaustion is
    /// EXHAUSTED, unmet preconditions are SKIP, and invalid constructions
    /// are FAIL.
    pub fn run(&self, params: &Value, ctx: &Ctx, timings: bool) -> CheckResult {
        let start = Instant::now();
        let outcome = (self.run)(params, ctx);
        let elapsed_ms = timings.then(|| start.elapsed().as_millis() as u64);
        let mut result = CheckResult {
            name: self.name.to_string(),
            params: params.clone(),
            status: Status::Pass,
            lhs: Value::Null,
            rhs: Value::Null,
            witness: None,
            detail: None,
            elapsed_ms,
        };
        match outcome {
            Ok(o) => {
                result.status = if o.pass { Status::Pass } else { Status::Fail };
                result.lhs = o.lhs;
                result.rhs = o.rhs;
                result.witness = o.witness;
                result.detail = o.detail;
            }
            Err(Error::Exhausted { nodes }) => {
                result.status = Status::Exhausted;
                result.detail = Some(format!("node budget exhausted after {nodes} nodes"));
            }
            Err(e @ (Error::Precondition(_) | Error::SizeGuard { .. })) => {
                result.status = Status::Skip;
                result.detail = Some(e.to_string());
            }
            Err(e) => {
                result.status = Status::Fail;
                result.detail = Some(e.to_string());
            }
        }
        result
    }
}

/// Runs one check on one explicit parameter record.
pub fn run_check(name: &str, params: &Value, ctx: &Ctx, timings: bool) -> Result<CheckResult> {
    Ok(find(name)?.run(params, ctx, timings))
}

/// Runs every instance of the named checks (all of them when `names` is
/// empty) in registry order.
pub fn run_suite(names: &[&str], ctx: &Ctx, timings: bool) -> Result<Report> {
    let defs: Vec<&CheckDef> = if names.is_empty() {
        registry().iter().collect()
    } else {
        names.iter().map(|n| find(n)).collect::<Result<_>>()?
    };
    let mut results = Vec::new();
    for def in defs {
        for params in def.instances(ctx) {
            results.push(def.run(&params, ctx, timings));
        }
    }
    Ok(Report::new(ctx.profile, results))
}

pub fn run_all(profile: Profile, timings: bool) -> Report {
    run_suite(&[], &Ctx::new(profile), timings).expect("registry names are valid")
}
