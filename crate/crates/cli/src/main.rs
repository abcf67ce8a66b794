//! Command-line driver: parameter sweeps over the congruence claims and
//! the exact identity suite, with deterministic JSON reports.

mod identities;
mod report;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use identities::{default_x_values, parse_rational, IdentitiesConfig};
use sweep::{apply_claim_defaults, ClaimKind, ModeArg, SweepConfig};

#[derive(Parser)]
#[command(
    name = "triadic",
    version,
    about = "Certifies 3-adic congruences and identities for central binomial sums",
    long_about = "Certifies valuation formulas, congruences, and exact identities for \
                  central binomial sums, using exact rational arithmetic cross-checked \
                  against truncated p-adic arithmetic. Writes a deterministic JSON report \
                  and exits nonzero if any claim fails."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep one claim over a parameter range.
    Verify(VerifyArgs),
    /// Run the exact identity suite and the mod-3 auxiliary facts.
    Identities(IdentitiesArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Which claim to verify.
    #[arg(long, value_enum)]
    claim: ClaimKind,
    /// Upper end of the n sweep (claims indexed by n), or of the
    /// partial-sum term count (lemma42). Claim-specific default.
    #[arg(long)]
    n_max: Option<u64>,
    /// m values: a comma list `4,7,10`, a range `4..100`, or a strided
    /// range `4..100:3`. Claim-specific default.
    #[arg(long)]
    m: Option<String>,
    /// a range for the exponent-indexed claims, e.g. `2..6` or `4`.
    #[arg(long)]
    a: Option<String>,
    /// Odd prime override for the sun12 claim (default: the largest odd
    /// prime divisor of m - 4).
    #[arg(long)]
    p: Option<u64>,
    /// Arithmetic mode policy.
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Worker threads (default: all cores). Never changes report content.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the 1% BOTH-mode cross-check sample.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report output path.
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
    /// Human-readable progress on stderr.
    #[arg(long)]
    progress: bool,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Upper end of the n sweep for the m x n identities.
    #[arg(long, default_value_t = 150)]
    n_max: u64,
    /// m values (list or range), default `-10..20` without 0.
    #[arg(long)]
    m: Option<String>,
    /// Rational x values for the convolution identity, e.g. `0,1,-1,1/2`.
    #[arg(long)]
    x: Option<String>,
    /// Worker threads (default: all cores). Never changes report content.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report output path.
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
    /// Human-readable progress on stderr.
    #[arg(long)]
    progress: bool,
}

/// Parses `4,7,10`, `4..100`, or `4..100:3`.
fn parse_m_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if let Some((range, stride)) = s.split_once(':') {
        let (lo, hi) = parse_range(range)?;
        let stride: i64 = stride.trim().parse().context("bad stride")?;
        anyhow::ensure!(stride > 0, "stride must be positive");
        return Ok((lo..=hi).step_by(stride as usize).collect());
    }
    if s.contains("..") {
        let (lo, hi) = parse_range(s)?;
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|part| part.trim().parse::<i64>().context("bad m value"))
        .collect()
}

fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s
        .trim()
        .split_once("..")
        .with_context(|| format!("expected a range like 2..6, got {s}"))?;
    let lo: i64 = lo.trim().parse().context("bad range start")?;
    let hi: i64 = hi.trim().parse().context("bad range end")?;
    anyhow::ensure!(lo <= hi, "empty range {s}");
    Ok((lo, hi))
}

fn parse_a_arg(s: &str) -> Result<(i64, i64)> {
    if s.contains("..") {
        parse_range(s)
    } else {
        let v: i64 = s.trim().parse().context("bad a value")?;
        Ok((v, v))
    }
}

fn install_pool(jobs: Option<usize>) -> Result<()> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("initializing worker pool")?;
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode> {
    install_pool(args.jobs)?;
    let m_values = args.m.as_deref().map(parse_m_list).transpose()?;
    let a_range = args.a.as_deref().map(parse_a_arg).transpose()?;
    let (n_max, m_values, a_range) =
        apply_claim_defaults(args.claim, args.n_max, m_values, a_range);
    let cfg = SweepConfig {
        claim: args.claim,
        n_max,
        m_values,
        a_range,
        p_override: args.p,
        mode: args.mode,
        seed: args.seed,
        progress: args.progress,
    };
    let started = Instant::now();
    let (records, skipped) = sweep::run_sweep(&cfg)?;
    let report = report::build_report(
        "verify",
        Some(cfg.claim.as_str().to_string()),
        cfg.config_json(),
        records,
        skipped,
        started.elapsed().as_millis(),
    );
    report::write_report(&report, &args.out)?;
    eprintln!(
        "{}: {} records, {} passed, {} failed, {} vacuous, {} skipped -> {}",
        cfg.claim.as_str(),
        report.summary.total,
        report.summary.passed,
        report.summary.failed,
        report.summary.vacuous,
        report.skipped_domain.len(),
        args.out.display()
    );
    Ok(if report.summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_identities(args: IdentitiesArgs) -> Result<ExitCode> {
    install_pool(args.jobs)?;
    let m_values = match args.m.as_deref() {
        Some(s) => parse_m_list(s)?,
        None => (-10..=20).filter(|&m| m != 0).collect(),
    };
    let x_values = match args.x.as_deref() {
        Some(s) => s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?,
        None => default_x_values(),
    };
    let cfg = IdentitiesConfig {
        n_max: args.n_max,
        m_values: m_values.into_iter().filter(|&m| m != 0).collect(),
        x_values,
        progress: args.progress,
    };
    let started = Instant::now();
    let records = identities::run_identities(&cfg)?;
    let report = report::build_report(
        "identities",
        None,
        cfg.config_json(),
        records,
        Vec::new(),
        started.elapsed().as_millis(),
    );
    report::write_report(&report, &args.out)?;
    eprintln!(
        "identities: {} records, {} passed, {} failed -> {}",
        report.summary.total,
        report.summary.passed,
        report.summary.failed,
        args.out.display()
    );
    Ok(if report.summary.failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Identities(args) => run_identities(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
