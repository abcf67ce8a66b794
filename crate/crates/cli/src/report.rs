//! JSON report schema and serialization.
//!
//! Reports are deterministic: records are sorted by (claim id, fact,
//! params), maps are ordered, and big integers serialize as decimal strings
//! so consumers never lose precision. The only run-dependent field is
//! `summary.wall_time_ms`.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use triadic_core::arith::Valuation;
use triadic_core::claim::{ClaimResult, Measured, Required, SubCheck};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct MeasuredJson {
    pub kind: &'static str,
    pub value: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

fn valuation_value(v: Valuation) -> serde_json::Value {
    match v {
        Valuation::Finite(x) => serde_json::Value::from(x),
        Valuation::Infinity => serde_json::Value::from("infinity"),
    }
}

impl From<&Measured> for MeasuredJson {
    fn from(m: &Measured) -> Self {
        match m {
            Measured::Valuation(v) => MeasuredJson {
                kind: "valuation",
                value: valuation_value(*v),
                modulus: None,
            },
            Measured::Residue { value, modulus } => MeasuredJson {
                kind: "residue",
                value: serde_json::Value::from(value.to_string()),
                modulus: Some(modulus.to_string()),
            },
        }
    }
}

impl From<&Required> for MeasuredJson {
    fn from(r: &Required) -> Self {
        match r {
            Required::ValuationAtLeast(t) => MeasuredJson {
                kind: "valuation_min",
                value: serde_json::Value::from(*t),
                modulus: None,
            },
            Required::ValuationEquals(v) => MeasuredJson {
                kind: "valuation_eq",
                value: valuation_value(*v),
                modulus: None,
            },
            Required::Residue { value, modulus } => MeasuredJson {
                kind: "residue",
                value: serde_json::Value::from(value.to_string()),
                modulus: Some(modulus.to_string()),
            },
        }
    }
}

/// One verification record; the field set is stable across versions.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub schema_version: u32,
    pub claim_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fact: Option<String>,
    pub params: BTreeMap<String, i64>,
    /// Rational parameter of the convolution instances, as a fraction
    /// string; absent elsewhere.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    pub measured: MeasuredJson,
    pub required: MeasuredJson,
    pub vacuous: bool,
    pub mode: String,
    pub pass: bool,
}

impl Record {
    pub fn from_claim(r: &ClaimResult) -> Self {
        Record {
            schema_version: SCHEMA_VERSION,
            claim_id: r.claim.as_str().to_string(),
            fact: r.fact.map(|f| f.to_string()),
            params: r.params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            x: None,
            measured: (&r.measured).into(),
            required: (&r.required).into(),
            vacuous: r.vacuous,
            mode: r.mode.as_str().to_string(),
            pass: r.pass,
        }
    }

    pub fn with_x(mut self, x: String) -> Self {
        self.x = Some(x);
        self
    }

    /// Deterministic report order.
    pub fn sort_key(&self) -> (String, String, Vec<(String, i64)>, String) {
        (
            self.claim_id.clone(),
            self.fact.clone().unwrap_or_default(),
            self.params.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            self.x.clone().unwrap_or_default(),
        )
    }
}

/// A record plus the reporting-only extras: sub-checks and, for failing
/// identity instances, the exact side values.
#[derive(Clone, Debug)]
pub struct RecordBundle {
    pub record: Record,
    pub parts: Vec<PartJson>,
    pub detail: Option<String>,
}

impl RecordBundle {
    pub fn from_claim(r: &ClaimResult) -> Self {
        RecordBundle {
            record: Record::from_claim(r),
            parts: r.parts.iter().map(PartJson::from).collect(),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: Option<String>) -> Self {
        self.detail = detail;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartJson {
    pub label: String,
    pub measured: MeasuredJson,
    pub required: MeasuredJson,
    pub vacuous: bool,
    pub pass: bool,
}

impl From<&SubCheck> for PartJson {
    fn from(p: &SubCheck) -> Self {
        PartJson {
            label: p.label.to_string(),
            measured: (&p.measured).into(),
            required: (&p.required).into(),
            vacuous: p.vacuous,
            pass: p.pass,
        }
    }
}

/// Diagnostics emitted for every failing record: the exact counterexample
/// parameters, the measured-versus-required pair, and any sub-checks.
#[derive(Clone, Debug, Serialize)]
pub struct FailureDiag {
    pub claim_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fact: Option<String>,
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    pub measured: MeasuredJson,
    pub required: MeasuredJson,
    pub mode: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A parameter tuple excluded by the claim's domain, with the reason.
#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub params: BTreeMap<String, i64>,
    pub reason: String,
}

/// Parameter tuples where a valuation bound is attained exactly; evidence
/// that the checks are not vacuous.
#[derive(Clone, Debug, Serialize)]
pub struct Sharpness {
    pub attained_count: u64,
    pub examples: Vec<BTreeMap<String, i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub vacuous: u64,
    pub modes: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness: Option<Sharpness>,
    pub wall_time_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
    pub config: serde_json::Value,
    pub records: Vec<Record>,
    pub skipped_domain: Vec<Skipped>,
    pub failures: Vec<FailureDiag>,
    pub summary: Summary,
}

/// Assembles a report from unsorted records, sorting everything,
/// extracting failure diagnostics, and computing the summary.
pub fn build_report(
    command: &str,
    claim: Option<String>,
    config: serde_json::Value,
    raw: Vec<RecordBundle>,
    mut skipped: Vec<Skipped>,
    wall_time_ms: u128,
) -> Report {
    let mut bundles = raw;
    bundles.sort_by_key(|b| b.record.sort_key());
    skipped.sort_by(|a, b| a.params.cmp(&b.params).then(a.reason.cmp(&b.reason)));

    let mut modes: BTreeMap<String, u64> = BTreeMap::new();
    let mut passed = 0u64;
    let mut vacuous = 0u64;
    let mut failures = Vec::new();
    let mut attained: Vec<BTreeMap<String, i64>> = Vec::new();

    for b in &bundles {
        let r = &b.record;
        *modes.entry(r.mode.clone()).or_default() += 1;
        if r.pass {
            passed += 1;
        } else {
            failures.push(FailureDiag {
                claim_id: r.claim_id.clone(),
                fact: r.fact.clone(),
                params: r.params.clone(),
                x: r.x.clone(),
                measured: r.measured.clone(),
                required: r.required.clone(),
                mode: r.mode.clone(),
                parts: b.parts.clone(),
                detail: b.detail.clone(),
            });
        }
        if r.vacuous {
            vacuous += 1;
        }
        // Bound attained exactly: finite measured valuation equal to a
        // valuation_min requirement.
        if !r.vacuous
            && r.required.kind == "valuation_min"
            && r.measured.kind == "valuation"
            && r.measured.value == r.required.value
        {
            attained.push(r.params.clone());
        }
    }

    let sharpness = if attained.is_empty() {
        None
    } else {
        Some(Sharpness {
            attained_count: attained.len() as u64,
            examples: attained.into_iter().take(5).collect(),
        })
    };

    let total = bundles.len() as u64;
    let records = bundles.into_iter().map(|b| b.record).collect();
    Report {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        claim,
        config,
        records,
        skipped_domain: skipped,
        failures,
        summary: Summary {
            total,
            passed,
            failed: total - passed,
            vacuous,
            modes,
            sharpness,
            wall_time_ms,
        },
    }
}

pub fn write_report(report: &Report, path: &Path) -> anyhow::Result<()> {
    let file = File::create(path)
        .with_context(|| format!("cannot create report file {}", path.display()))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, report).context("serializing report")?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}
