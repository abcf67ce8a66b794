//! The `identities` subcommand: every exact identity and mod-3 auxiliary
//! fact, one record per instance, exit nonzero on the first inequality.
//! Failing instances carry both exact side values in the diagnostics.

use anyhow::Result;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;
use triadic_core::arith::{nu, nu_int, ratio, BinomialRow, Rational, Valuation};
use triadic_core::claim::{ClaimId, ClaimResult, Measured, Mode, Required};
use triadic_core::sums;

use crate::report::RecordBundle;

/// Ranges for the fixed-scale parts of the suite.
const CONVOLUTION_N_MAX: u64 = 60;
const X1_N_MAX: u64 = 300;
const QUARTER_K_MAX: u64 = 200;
const CHAIN_K_MAX: u64 = 100;
const TRIPLE_K_MAX: u64 = 500;
const ROW_A_MAX: u32 = 6;
const F_A_RANGE: (u32, u32) = (2, 5);

#[derive(Clone, Debug)]
pub struct IdentitiesConfig {
    pub n_max: u64,
    pub m_values: Vec<i64>,
    pub x_values: Vec<Rational>,
    pub progress: bool,
}

impl IdentitiesConfig {
    pub fn config_json(&self) -> serde_json::Value {
        json!({
            "n_max": self.n_max,
            "m": self.m_values,
            "x": self.x_values.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "fixed_ranges": {
                "convolution_n_max": CONVOLUTION_N_MAX,
                "x1_n_max": X1_N_MAX,
                "quarter_power_k_max": QUARTER_K_MAX,
                "genbinom_chain_k_max": CHAIN_K_MAX,
                "triple_block_k_max": TRIPLE_K_MAX,
                "row_facts_a_max": ROW_A_MAX,
                "f_of_a_range": [F_A_RANGE.0, F_A_RANGE.1],
            },
        })
    }
}

/// Exact-equality record: measured is the 3-adic valuation of the
/// difference (infinite on equality); unequal sides go verbatim into the
/// failure detail.
fn equality_claim(
    claim: ClaimId,
    fact: &'static str,
    params: &[(&'static str, i64)],
    diff_valuation: Valuation,
) -> ClaimResult {
    ClaimResult::new(
        claim,
        params,
        Measured::Valuation(diff_valuation),
        Required::ValuationEquals(Valuation::Infinity),
        false,
        Mode::Exact,
    )
    .with_fact(fact)
}

fn rational_equality(
    claim: ClaimId,
    fact: &'static str,
    params: &[(&'static str, i64)],
    sides: (Rational, Rational),
) -> RecordBundle {
    let (lhs, rhs) = sides;
    if lhs == rhs {
        RecordBundle::from_claim(&equality_claim(claim, fact, params, Valuation::Infinity))
    } else {
        let v = nu(3, &(&lhs - &rhs));
        RecordBundle::from_claim(&equality_claim(claim, fact, params, v))
            .with_detail(Some(format!("lhs = {lhs}, rhs = {rhs}")))
    }
}

fn integer_equality(
    claim: ClaimId,
    fact: &'static str,
    params: &[(&'static str, i64)],
    sides: (BigInt, BigInt),
) -> RecordBundle {
    let (lhs, rhs) = sides;
    if lhs == rhs {
        RecordBundle::from_claim(&equality_claim(claim, fact, params, Valuation::Infinity))
    } else {
        let v = nu_int(3, &(&lhs - &rhs));
        RecordBundle::from_claim(&equality_claim(claim, fact, params, v))
            .with_detail(Some(format!("lhs = {lhs}, rhs = {rhs}")))
    }
}

pub fn run_identities(cfg: &IdentitiesConfig) -> Result<Vec<RecordBundle>> {
    // n_max = 0 empties every n-indexed sweep; what remains is the n = 0
    // row of the convolution identity per x value.
    if cfg.n_max == 0 {
        return Ok(run_convolution(&cfg.x_values, 0));
    }
    let mut tasks: Vec<Box<dyn Fn() -> Vec<RecordBundle> + Sync + Send>> = Vec::new();

    // Expansion, rewritten expansion, and alternating transform over m x n.
    for &m in &cfg.m_values {
        if m == 0 {
            continue;
        }
        let n_max = cfg.n_max;
        tasks.push(Box::new(move || {
            (1..=n_max)
                .map(|n| {
                    integer_equality(
                        ClaimId::Aux,
                        "sun_tauraso",
                        &[("m", m), ("n", n as i64)],
                        sums::sun_tauraso_sides(m, n),
                    )
                })
                .collect()
        }));
        tasks.push(Box::new(move || {
            (1..=n_max)
                .map(|n| {
                    rational_equality(
                        ClaimId::Aux,
                        "st2",
                        &[("m", m), ("n", n as i64)],
                        sums::st2_sides(m, n),
                    )
                })
                .collect()
        }));
        tasks.push(Box::new(move || {
            (1..=n_max)
                .map(|n| {
                    rational_equality(
                        ClaimId::Aux,
                        "sun32",
                        &[("m", m), ("n", n as i64)],
                        sums::sun32_sides(m, n),
                    )
                })
                .collect()
        }));
    }

    // The rewrite identity is m-independent; one record per n aggregates
    // the k row, and a failure pinpoints the first bad k.
    {
        let n_max = cfg.n_max;
        tasks.push(Box::new(move || {
            (1..=n_max)
                .map(|n| {
                    for k in 0..n {
                        let (l, r) = sums::rewrite_sides(n, k);
                        if l != r {
                            return rational_equality(
                                ClaimId::Aux,
                                "rewrite",
                                &[("n", n as i64), ("k", k as i64)],
                                (l, r),
                            );
                        }
                    }
                    RecordBundle::from_claim(&equality_claim(
                        ClaimId::Aux,
                        "rewrite",
                        &[("n", n as i64)],
                        Valuation::Infinity,
                    ))
                })
                .collect()
        }));
    }

    // The x = 1 specialization of the convolution identity; the identity
    // itself is handled separately so its records carry the rational x.
    tasks.push(Box::new(|| {
        (1..=X1_N_MAX)
            .map(|n| {
                integer_equality(ClaimId::Lemma41, "x1", &[("n", n as i64)], sums::x1_sides(n))
            })
            .collect()
    }));

    // m = 4 closed form and its generalized-binomial stepping stone.
    tasks.push(Box::new(|| {
        (1..=QUARTER_K_MAX)
            .map(|k| {
                integer_equality(
                    ClaimId::Aux,
                    "quarter_power",
                    &[("k", k as i64)],
                    sums::quarter_power_sides(k),
                )
            })
            .collect()
    }));
    tasks.push(Box::new(|| {
        (1..=CHAIN_K_MAX)
            .map(|k| {
                rational_equality(
                    ClaimId::Aux,
                    "genbinom_chain",
                    &[("k", k as i64)],
                    sums::genbinom_chain_sides(k),
                )
            })
            .collect()
    }));

    // Alternating rows and block sums mod 3.
    tasks.push(Box::new(|| {
        (1..=ROW_A_MAX)
            .map(|a| {
                let n = 3u64.pow(a);
                // min_k nu_3(binomial(3^a - 1, k) - (-1)^k) must be >= 1
                let mut row = BinomialRow::new(n as i64 - 1);
                let mut worst = Valuation::Infinity;
                let mut bad_k = None;
                for k in 0..n {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let v = nu_int(3, &(row.next_value() - BigInt::from(sign)));
                    if v < worst {
                        worst = v;
                        if v < Valuation::Finite(1) {
                            bad_k = Some(k);
                        }
                    }
                }
                let claim = ClaimResult::new(
                    ClaimId::Aux,
                    &[("a", a as i64)],
                    Measured::Valuation(worst),
                    Required::ValuationAtLeast(1),
                    false,
                    Mode::Exact,
                )
                .with_fact("row_signs");
                RecordBundle::from_claim(&claim)
                    .with_detail(bad_k.map(|k| format!("first sign mismatch at k = {k}")))
            })
            .collect()
    }));
    tasks.push(Box::new(|| {
        (1..=ROW_A_MAX)
            .map(|a| {
                let n = 3u64.pow(a);
                let mut row = BinomialRow::new(2 * n as i64 - 3);
                let mut acc = BigInt::from(0);
                for _ in 0..n {
                    acc += row.next_value();
                }
                let residue = triadic_core::arith::residue_mod_power(3, 1, &Rational::from(acc))
                    .expect("integer");
                RecordBundle::from_claim(
                    &ClaimResult::new(
                        ClaimId::Aux,
                        &[("a", a as i64)],
                        Measured::Residue { value: residue, modulus: 3u32.into() },
                        Required::Residue { value: 1u32.into(), modulus: 3u32.into() },
                        false,
                        Mode::Exact,
                    )
                    .with_fact("row_sum"),
                )
            })
            .collect()
    }));
    tasks.push(Box::new(|| {
        (1..=TRIPLE_K_MAX)
            .map(|k| {
                let v = if sums::check_triple_block(k) {
                    Valuation::Finite(1)
                } else {
                    Valuation::Finite(0)
                };
                RecordBundle::from_claim(
                    &ClaimResult::new(
                        ClaimId::Aux,
                        &[("k", k as i64)],
                        Measured::Valuation(v),
                        Required::ValuationAtLeast(1),
                        false,
                        Mode::Exact,
                    )
                    .with_fact("triple_block"),
                )
            })
            .collect()
    }));

    // f(a) residues for every admissible m in the list.
    {
        let f_ms: Vec<i64> = {
            let filtered: Vec<i64> = cfg
                .m_values
                .iter()
                .copied()
                .filter(|&m| m.rem_euclid(3) == 1 && m != 4)
                .collect();
            if filtered.is_empty() { vec![7, 10, 13] } else { filtered }
        };
        for m in f_ms {
            tasks.push(Box::new(move || {
                (F_A_RANGE.0..=F_A_RANGE.1)
                    .map(|a| {
                        let (_, residue) = sums::f_of_a(a, m).expect("3 does not divide m");
                        RecordBundle::from_claim(
                            &ClaimResult::new(
                                ClaimId::Aux,
                                &[("a", a as i64), ("m", m)],
                                Measured::Residue {
                                    value: (residue as u32).into(),
                                    modulus: 3u32.into(),
                                },
                                Required::Residue { value: 2u32.into(), modulus: 3u32.into() },
                                false,
                                Mode::Exact,
                            )
                            .with_fact("f_of_a"),
                        )
                    })
                    .collect()
            }));
        }
    }

    let mut records: Vec<RecordBundle> = tasks
        .par_iter()
        .flat_map_iter(|task| {
            let rows = task();
            if cfg.progress {
                eprintln!("[identities] batch of {} records done", rows.len());
            }
            rows
        })
        .collect();
    records.extend(run_convolution(&cfg.x_values, CONVOLUTION_N_MAX.min(cfg.n_max)));
    Ok(records)
}

/// Convolution records carry the rational x as a fraction string alongside
/// the integer params.
fn run_convolution(x_values: &[Rational], conv_n_max: u64) -> Vec<RecordBundle> {
    let instances: Vec<(usize, u64)> = x_values
        .iter()
        .enumerate()
        .flat_map(|(i, _)| (0..=conv_n_max).map(move |n| (i, n)))
        .collect();
    instances
        .into_par_iter()
        .map(|(i, n)| {
            let x = &x_values[i];
            let mut bundle = rational_equality(
                ClaimId::Lemma41,
                "convolution",
                &[("n", n as i64)],
                sums::convolution_sides(n, x),
            );
            bundle.record = bundle.record.with_x(x.to_string());
            bundle
        })
        .collect()
}

/// Parses a rational like `-3/4` or `2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse()?;
        let d: i64 = den.trim().parse()?;
        anyhow::ensure!(d != 0, "zero denominator in {s}");
        Ok(ratio(n, d))
    } else {
        let n: i64 = s.parse()?;
        Ok(ratio(n, 1))
    }
}

/// The default x list exercising the convolution identity.
pub fn default_x_values() -> Vec<Rational> {
    [
        ratio(0, 1),
        ratio(1, 1),
        ratio(-1, 1),
        ratio(1, 2),
        ratio(2, 1),
        ratio(-3, 4),
        ratio(5, 1),
        ratio(1, 4),
    ]
    .to_vec()
}
