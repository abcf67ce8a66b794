//! Parameter sweeps for the `verify` subcommand: mode policy, seeded
//! cross-check sampling, parallel partitioning, and domain pre-filtering.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde_json::json;
use triadic_core::claim::{ClaimResult, DomainError, Mode};
use triadic_core::theorems::{
    auto_mode_for_a, auto_mode_for_n, check_lemma42_closed_form, check_lemma42_cube_root,
    check_lemma42_log_omega, check_lemma42_partial, check_scc2, check_scc4, check_scc5,
    sweep_nk2kk, sweep_scc1, sweep_scc3, sweep_ssz, sweep_sun12,
};

use crate::report::{PartJson, Record, Skipped};

/// Claims the `verify` subcommand can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ClaimKind {
    Ssz,
    Sun12,
    Scc1,
    Scc2,
    Scc3,
    Scc4,
    Scc5,
    Nk2kk,
    Lemma21,
    Lemma42,
}

impl ClaimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Ssz => "ssz",
            ClaimKind::Sun12 => "sun12",
            ClaimKind::Scc1 => "scc1",
            ClaimKind::Scc2 => "scc2",
            ClaimKind::Scc3 => "scc3",
            ClaimKind::Scc4 => "scc4",
            ClaimKind::Scc5 => "scc5",
            ClaimKind::Nk2kk => "nk2kk",
            ClaimKind::Lemma21 => "lemma21",
            ClaimKind::Lemma42 => "lemma42",
        }
    }
}

/// Arithmetic-mode policy selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeArg {
    /// Exact rationals everywhere.
    Exact,
    /// Truncated p-adics everywhere, with the seeded 1% BOTH sample.
    Fast,
    /// Run both paths on every tuple and require identical measurements.
    Both,
    /// Exact at small parameters, truncated above, 1% BOTH sample.
    Auto,
}

impl ModeArg {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeArg::Exact => "exact",
            ModeArg::Fast => "fast",
            ModeArg::Both => "both",
            ModeArg::Auto => "auto",
        }
    }
}

/// One sweep request, fully determining the report (except wall time).
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub claim: ClaimKind,
    pub n_max: u64,
    pub m_values: Vec<i64>,
    pub a_range: (i64, i64),
    pub p_override: Option<u64>,
    pub mode: ModeArg,
    pub seed: u64,
    pub progress: bool,
}

impl SweepConfig {
    pub fn config_json(&self) -> serde_json::Value {
        json!({
            "claim": self.claim.as_str(),
            "n_max": self.n_max,
            "m": self.m_values,
            "a_range": [self.a_range.0, self.a_range.1],
            "p": self.p_override,
            "mode": self.mode.as_str(),
            "seed": self.seed,
        })
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Deterministic membership in the 1% BOTH cross-check sample, independent
/// of enumeration order and worker count.
fn in_both_sample(seed: u64, claim: ClaimKind, key: &[i64]) -> bool {
    let mut h = splitmix64(seed ^ (claim as u64).wrapping_mul(0x517c_c1b7_2722_0a95));
    for &v in key {
        h = splitmix64(h ^ v as u64);
    }
    h % 100 == 0
}

fn mode_for_tuple(cfg: &SweepConfig, key: &[i64], auto: Mode) -> Mode {
    match cfg.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Both => Mode::Both,
        ModeArg::Fast => {
            if in_both_sample(cfg.seed, cfg.claim, key) {
                Mode::Both
            } else {
                Mode::Truncated
            }
        }
        ModeArg::Auto => {
            if in_both_sample(cfg.seed, cfg.claim, key) {
                Mode::Both
            } else {
                auto
            }
        }
    }
}

fn to_record(r: &ClaimResult) -> (Record, Vec<PartJson>) {
    (Record::from_claim(r), r.parts.iter().map(PartJson::from).collect())
}

fn skipped_entry(params: &[(&str, i64)], err: &DomainError) -> Skipped {
    Skipped {
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>(),
        reason: err.to_string(),
    }
}

fn progress(cfg: &SweepConfig, msg: &str) {
    if cfg.progress {
        eprintln!("[{}] {msg}", cfg.claim.as_str());
    }
}

/// Runs the configured sweep and returns records plus domain skips.
pub fn run_sweep(cfg: &SweepConfig) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)> {
    match cfg.claim {
        ClaimKind::Ssz => run_n_chunked(cfg, |lo, hi, f| sweep_ssz(lo, hi, f)),
        ClaimKind::Nk2kk => run_n_chunked(cfg, |lo, hi, f| sweep_nk2kk(lo, hi, f)),
        ClaimKind::Scc1 => run_per_m(cfg, |m, n_max, f| sweep_scc1(m, n_max, f)),
        ClaimKind::Scc3 => run_per_m(cfg, |m, n_max, f| sweep_scc3(m, n_max, f)),
        ClaimKind::Sun12 => {
            let p = cfg.p_override;
            run_per_m(cfg, move |m, n_max, f| sweep_sun12(m, p, n_max, f))
        }
        ClaimKind::Lemma21 => run_lemma21(cfg),
        ClaimKind::Scc2 => run_per_a(cfg, |m, a, mode| check_scc2(m, a, mode), true),
        ClaimKind::Scc4 => run_per_a(cfg, |m, a, mode| check_scc4(m, a, mode), true),
        ClaimKind::Scc5 => run_per_a(cfg, |_m, a, mode| check_scc5(a, mode), false),
        ClaimKind::Lemma42 => run_lemma42(cfg),
    }
}

/// n-indexed sweeps partitioned into chunks; the per-chunk driver rebuilds
/// its prefix state, so concurrency never changes results.
fn run_n_chunked<F>(cfg: &SweepConfig, sweep: F) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)>
where
    F: Fn(u64, u64, &dyn Fn(u64) -> Mode) -> Vec<ClaimResult> + Sync,
{
    if cfg.n_max < 1 {
        bail!("--n-max must be at least 1");
    }
    let chunk = 512u64;
    let bounds: Vec<(u64, u64)> = (1..=cfg.n_max)
        .step_by(chunk as usize)
        .map(|lo| (lo, (lo + chunk - 1).min(cfg.n_max)))
        .collect();
    let records: Vec<_> = bounds
        .into_par_iter()
        .flat_map_iter(|(lo, hi)| {
            let rows = sweep(lo, hi, &|n| {
                mode_for_tuple(cfg, &[n as i64], auto_mode_for_n(n))
            });
            progress(cfg, &format!("n={lo}..{hi} done"));
            rows.iter().map(to_record).collect::<Vec<_>>()
        })
        .collect();
    Ok((records, Vec::new()))
}

/// m-indexed sweeps with a sequential n loop per m.
fn run_per_m<F>(cfg: &SweepConfig, sweep: F) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)>
where
    F: Fn(i64, u64, &dyn Fn(u64) -> Mode) -> std::result::Result<Vec<ClaimResult>, DomainError>
        + Sync,
{
    if cfg.m_values.is_empty() {
        bail!("this claim needs at least one m value (--m)");
    }
    let out: Vec<_> = cfg
        .m_values
        .par_iter()
        .map(|&m| {
            let res = sweep(m, cfg.n_max, &|n| {
                mode_for_tuple(cfg, &[m, n as i64], auto_mode_for_n(n))
            });
            progress(cfg, &format!("m={m} done"));
            (m, res)
        })
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (m, res) in out {
        match res {
            Ok(rows) => records.extend(rows.iter().map(to_record)),
            Err(e) => skipped.push(skipped_entry(&[("m", m)], &e)),
        }
    }
    Ok((records, skipped))
}

fn run_lemma21(cfg: &SweepConfig) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)> {
    if cfg.m_values.is_empty() {
        bail!("lemma21 needs at least one m value (--m)");
    }
    let out: Vec<_> = cfg
        .m_values
        .par_iter()
        .map(|&m| {
            let res = triadic_core::lucas::sweep_lemma21(m, cfg.n_max);
            progress(cfg, &format!("m={m} done"));
            (m, res)
        })
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (m, res) in out {
        match res {
            Ok(rows) => records.extend(rows.iter().map(to_record)),
            Err(e) => skipped.push(skipped_entry(&[("m", m)], &e)),
        }
    }
    Ok((records, skipped))
}

/// a-indexed residue claims over the (m, a) grid.
fn run_per_a<F>(
    cfg: &SweepConfig,
    check: F,
    uses_m: bool,
) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)>
where
    F: Fn(i64, i64, Mode) -> std::result::Result<ClaimResult, DomainError> + Sync,
{
    let (a_lo, a_hi) = cfg.a_range;
    if a_lo > a_hi {
        bail!("empty a range");
    }
    let m_list: Vec<i64> = if uses_m {
        if cfg.m_values.is_empty() {
            bail!("this claim needs at least one m value (--m)");
        }
        cfg.m_values.clone()
    } else {
        vec![1]
    };
    let tuples: Vec<(i64, i64)> =
        m_list.iter().flat_map(|&m| (a_lo..=a_hi).map(move |a| (m, a))).collect();
    let out: Vec<_> = tuples
        .into_par_iter()
        .map(|(m, a)| {
            let key: Vec<i64> = if uses_m { vec![m, a] } else { vec![a] };
            let mode = mode_for_tuple(cfg, &key, auto_mode_for_a(a));
            let res = check(m, a, mode);
            progress(cfg, &format!("m={m} a={a} done"));
            (m, a, res)
        })
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (m, a, res) in out {
        match res {
            Ok(r) => records.push(to_record(&r)),
            Err(e) => {
                let params: Vec<(&str, i64)> =
                    if uses_m { vec![("m", m), ("a", a)] } else { vec![("a", a)] };
                skipped.push(skipped_entry(&params, &e));
            }
        }
    }
    Ok((records, skipped))
}

/// The extension-field claims: fixed-precision facts plus the partial-sum
/// valuations up to `n_max` terms.
fn run_lemma42(cfg: &SweepConfig) -> Result<(Vec<(Record, Vec<PartJson>)>, Vec<Skipped>)> {
    let k_max = cfg.n_max.clamp(3, 100_000) as u32;
    let mut records = vec![
        to_record(&check_lemma42_cube_root(40)),
        to_record(&check_lemma42_log_omega(40).map_err(|e| anyhow::anyhow!("{e}"))?),
        to_record(&check_lemma42_closed_form(20, 120).map_err(|e| anyhow::anyhow!("{e}"))?),
    ];
    let partials: Vec<_> = (3..=k_max)
        .into_par_iter()
        .map(|k| to_record(&check_lemma42_partial(k)))
        .collect();
    records.extend(partials);
    progress(cfg, "extension-field facts done");
    Ok((records, Vec::new()))
}

/// Resolves per-claim defaults for unspecified arguments.
pub fn apply_claim_defaults(
    claim: ClaimKind,
    n_max: Option<u64>,
    m: Option<Vec<i64>>,
    a: Option<(i64, i64)>,
) -> (u64, Vec<i64>, (i64, i64)) {
    let default_scc_m: Vec<i64> = (4..=100).step_by(3).collect();
    let residue_m = vec![4, 7, 10, 28, 82];
    match claim {
        ClaimKind::Ssz => (n_max.unwrap_or(5000), m.unwrap_or_default(), a.unwrap_or((0, 0))),
        ClaimKind::Nk2kk => (n_max.unwrap_or(2000), m.unwrap_or_default(), a.unwrap_or((0, 0))),
        ClaimKind::Scc1 | ClaimKind::Scc3 => (
            n_max.unwrap_or(1000),
            m.unwrap_or(default_scc_m),
            a.unwrap_or((0, 0)),
        ),
        ClaimKind::Scc2 => (n_max.unwrap_or(0), m.unwrap_or(residue_m), a.unwrap_or((1, 6))),
        ClaimKind::Scc4 => (n_max.unwrap_or(0), m.unwrap_or(residue_m), a.unwrap_or((2, 6))),
        ClaimKind::Scc5 => (n_max.unwrap_or(0), m.unwrap_or_default(), a.unwrap_or((2, 7))),
        ClaimKind::Sun12 => (
            n_max.unwrap_or(300),
            m.unwrap_or_else(|| vec![7, 9, 13, 19, 25]),
            a.unwrap_or((0, 0)),
        ),
        ClaimKind::Lemma21 => (
            n_max.unwrap_or(300),
            m.unwrap_or(default_scc_m),
            a.unwrap_or((0, 0)),
        ),
        ClaimKind::Lemma42 => (n_max.unwrap_or(80), m.unwrap_or_default(), a.unwrap_or((0, 0))),
    }
}

