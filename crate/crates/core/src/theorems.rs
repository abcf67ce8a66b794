//! One checkable predicate per theorem-level congruence, each producing a
//! [`ClaimResult`], plus incremental sweep drivers that share prefix state
//! across a parameter range.
//!
//! Every check can run on the exact rational path, the truncated p-adic
//! path, or both; in `Both` mode the two measured values must be identical
//! or the result is a hard failure.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{self, nu, nu_binomial, nu_int, pow_u, ratio, CentralBinomials, Rational, Valuation};
use crate::claim::{ClaimId, ClaimResult, DomainError, Measured, Mode, Required};
use crate::lucas::require_m_one_mod_three;
use crate::padic::{self, Padic};
use crate::sums::{
    alt_sum, alt_sum_numerator, alt_sum_padic, central_sum_padic, scaled_sum, scaled_sum_padic,
};

/// Guard digits added to every truncated working precision.
pub const GUARD_DIGITS: u32 = 8;

/// Auto mode policy: exact arithmetic up to this n (= 3^5), truncated above.
pub const EXACT_N_THRESHOLD: u64 = 243;

/// Auto mode policy: exact arithmetic up to this a, truncated above.
pub const EXACT_A_THRESHOLD: i64 = 5;

/// The mode the auto policy picks for a claim indexed by n.
pub fn auto_mode_for_n(n: u64) -> Mode {
    if n <= EXACT_N_THRESHOLD {
        Mode::Exact
    } else {
        Mode::Truncated
    }
}

/// The mode the auto policy picks for a claim indexed by the exponent a.
pub fn auto_mode_for_a(a: i64) -> Mode {
    if a <= EXACT_A_THRESHOLD {
        Mode::Exact
    } else {
        Mode::Truncated
    }
}

fn nu3_u64(mut n: u64) -> i64 {
    debug_assert!(n > 0);
    let mut v = 0;
    while n % 3 == 0 {
        n /= 3;
        v += 1;
    }
    v
}

fn nu_p_u64(p: u64, mut n: u64) -> i64 {
    debug_assert!(n > 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn nu3_of(m: i64) -> Valuation {
    if m == 0 {
        return Valuation::Infinity;
    }
    let mut v = 0;
    let mut m = m.abs();
    while m % 3 == 0 {
        m /= 3;
        v += 1;
    }
    Valuation::Finite(v)
}

/// Largest odd prime divisor, by trial division; the inputs here are the
/// small integers m - 4.
pub fn largest_odd_prime_divisor(x: i64) -> Option<u64> {
    let mut v = x.unsigned_abs();
    if v == 0 {
        return None;
    }
    while v % 2 == 0 {
        v /= 2;
    }
    let mut best = None;
    let mut d = 3u64;
    while d * d <= v {
        if v % d == 0 {
            best = Some(d);
            while v % d == 0 {
                v /= d;
            }
        }
        d += 2;
    }
    if v > 1 {
        best = Some(v);
    }
    best
}

/// Measured valuation from a truncated evaluation, escalating the working
/// precision when the value is indistinguishable from zero, and finally
/// falling back to the exact path.
fn truncated_valuation(
    mut prec: u32,
    eval: &dyn Fn(u32) -> Padic,
    exact: &dyn Fn() -> Valuation,
) -> Valuation {
    for _ in 0..3 {
        if let Some(v) = eval(prec).valuation() {
            return Valuation::Finite(v);
        }
        prec = prec * 2 + GUARD_DIGITS;
    }
    exact()
}

/// Measured residue from a truncated evaluation, with the same escalation.
fn truncated_residue(
    mut prec: u32,
    t: u32,
    eval: &dyn Fn(u32) -> Padic,
    exact: &dyn Fn() -> Option<BigUint>,
) -> Option<BigUint> {
    for _ in 0..3 {
        if let Some(r) = eval(prec).residue(t) {
            return Some(r);
        }
        prec = prec * 2 + GUARD_DIGITS;
    }
    exact()
}

/// Runs the requested mode over the two measurement closures and finishes
/// the record; `Both` compares the two measured values and degrades to a
/// hard failure when they disagree.
fn finish_with_mode(
    claim: ClaimId,
    params: &[(&'static str, i64)],
    mode: Mode,
    required: Required,
    vacuous: bool,
    measure_exact: &dyn Fn() -> Measured,
    measure_truncated: &dyn Fn() -> Measured,
) -> ClaimResult {
    match mode {
        Mode::Exact => {
            ClaimResult::new(claim, params, measure_exact(), required, vacuous, Mode::Exact)
        }
        Mode::Truncated => ClaimResult::new(
            claim,
            params,
            measure_truncated(),
            required,
            vacuous,
            Mode::Truncated,
        ),
        Mode::Both => {
            let e = measure_exact();
            let t = measure_truncated();
            if e == t {
                ClaimResult::new(claim, params, e, required, vacuous, Mode::Both)
            } else {
                ClaimResult::mode_disagreement(claim, params, e, t, required, vacuous)
            }
        }
    }
}

fn residue_measured(p: u64, t: u32, value: &Rational) -> Measured {
    match arith::residue_mod_power(p, t, value) {
        Some(r) => Measured::Residue { value: r, modulus: pow_u(p, t) },
        // No residue exists; surface the valuation so the mismatch fails
        // the residue requirement honestly.
        None => Measured::Valuation(nu(p, value)),
    }
}

/// The valuation formula for the central sums: nu_3 of the partial sum up
/// to n equals `2 nu_3(n) + nu_3(binomial(2n, n))`, exactly.
pub fn check_ssz(n: u64, mode: Mode) -> ClaimResult {
    assert!(n >= 1);
    let target = 2 * nu3_u64(n) + nu_binomial(3, 2 * n, n as i64).expect_finite();
    let required = Required::ValuationEquals(Valuation::Finite(target));
    let prec = target as u32 + GUARD_DIGITS;
    finish_with_mode(
        ClaimId::Ssz11,
        &[("n", n as i64)],
        mode,
        required,
        false,
        &|| Measured::Valuation(nu_int(3, &crate::sums::central_sum(n))),
        &|| {
            Measured::Valuation(truncated_valuation(
                prec,
                &|pr| central_sum_padic(n, pr),
                &|| nu_int(3, &crate::sums::central_sum(n)),
            ))
        },
    )
}

/// The two valuation bounds at an odd prime p dividing m - 4:
/// `nu_p(scaled(m, n)) >= nu_p(n)` and `nu_p(alt(m, n)) >= nu_p(n)`.
/// Reported as two records. With `p = None` the largest odd prime divisor
/// of m - 4 is used.
pub fn check_sun12(
    m: i64,
    p: Option<u64>,
    n: u64,
    mode: Mode,
) -> Result<Vec<ClaimResult>, DomainError> {
    let p = resolve_sun12_prime(m, p)?;
    assert!(n >= 1);
    let bound = nu_p_u64(p, n);
    let required = Required::ValuationAtLeast(bound);
    // Both sums are p-integral (p does not divide m), so a zero bound holds
    // automatically.
    let vacuous = bound <= 0;
    let prec = (3 * bound) as u32 + GUARD_DIGITS;
    let params = [("m", m), ("n", n as i64), ("p", p as i64)];
    let a = finish_with_mode(
        ClaimId::Sun12A,
        &params,
        mode,
        required.clone(),
        vacuous,
        &|| Measured::Valuation(nu(p, &scaled_sum(m, n))),
        &|| {
            Measured::Valuation(truncated_valuation(
                prec,
                &|pr| scaled_sum_padic(p, m, n, pr),
                &|| nu(p, &scaled_sum(m, n)),
            ))
        },
    );
    let b = finish_with_mode(
        ClaimId::Sun12B,
        &params,
        mode,
        required,
        vacuous,
        &|| Measured::Valuation(nu(p, &alt_sum(m, n))),
        &|| {
            Measured::Valuation(truncated_valuation(
                prec,
                &|pr| alt_sum_padic(p, m, n, pr),
                &|| nu(p, &alt_sum(m, n)),
            ))
        },
    );
    Ok(vec![a, b])
}

fn resolve_sun12_prime(m: i64, p: Option<u64>) -> Result<u64, DomainError> {
    let p = match p {
        Some(p) => p,
        None => largest_odd_prime_divisor(m - 4)
            .ok_or(DomainError::NoOddPrimeDivisor { m })?,
    };
    if !arith::is_odd_prime(p) {
        return Err(DomainError::NotOddPrime { p });
    }
    if (m - 4) % p as i64 != 0 {
        return Err(DomainError::PrimeDoesNotDivide { p, m });
    }
    Ok(p)
}

/// Computes the min-type bound `min(nu_3(n), cap)` where `cap` may be
/// infinite (m = 1).
fn min_bound(n_val: i64, cap: Valuation) -> i64 {
    match cap {
        Valuation::Finite(c) => n_val.min(c),
        Valuation::Infinity => n_val,
    }
}

/// `nu_3((1/n) scaled(m, n)) >= min(nu_3(n), nu_3(m-1) - 1)` for
/// m = 1 (mod 3).
pub fn check_scc1(m: i64, n: u64, mode: Mode) -> Result<ClaimResult, DomainError> {
    require_m_one_mod_three(m)?;
    assert!(n >= 1);
    let n_val = nu3_u64(n);
    let cap = match nu3_of(m - 1) {
        Valuation::Finite(t) => Valuation::Finite(t - 1),
        Valuation::Infinity => Valuation::Infinity,
    };
    let bound = min_bound(n_val, cap);
    // The sum itself is 3-integral, so the measured value is >= -nu_3(n)
    // unconditionally.
    let vacuous = bound <= -n_val;
    let prec = (bound.max(0) + 2 * n_val) as u32 + GUARD_DIGITS;
    Ok(finish_with_mode(
        ClaimId::Scc1,
        &[("m", m), ("n", n as i64)],
        mode,
        Required::ValuationAtLeast(bound),
        vacuous,
        &|| Measured::Valuation(nu(3, &scaled_sum(m, n)) + Valuation::Finite(-n_val)),
        &|| {
            Measured::Valuation(
                truncated_valuation(
                    prec,
                    &|pr| scaled_sum_padic(3, m, n, pr),
                    &|| nu(3, &scaled_sum(m, n)),
                ) + Valuation::Finite(-n_val),
            )
        },
    ))
}

/// `(1/3^a) scaled(m, 3^a) = (m-1)/3 (mod 3^(nu_3(m-1)))` for
/// m = 1 (mod 3) and a >= max(nu_3(m-1), 1).
pub fn check_scc2(m: i64, a: i64, mode: Mode) -> Result<ClaimResult, DomainError> {
    require_m_one_mod_three(m)?;
    let t = match nu3_of(m - 1) {
        Valuation::Finite(t) => t,
        Valuation::Infinity => return Err(DomainError::InfiniteModulus { m }),
    };
    let min_a = t.max(1);
    if a < min_a {
        return Err(DomainError::ExponentTooSmall { a, min: min_a });
    }
    let n = 3u64.pow(a as u32);
    let target = ratio((m - 1) / 3, 1);
    scc_residue_claim(ClaimId::Scc2, m, a, n, t as u32, &target, mode)
}

/// `nu_3((1/n) alt(m, n)) >= min(nu_3(n), nu_3(m-1)) - 1` for m = 1 (mod 3).
pub fn check_scc3(m: i64, n: u64, mode: Mode) -> Result<ClaimResult, DomainError> {
    require_m_one_mod_three(m)?;
    assert!(n >= 1);
    let n_val = nu3_u64(n);
    let bound = min_bound(n_val, nu3_of(m - 1)) - 1;
    let vacuous = bound <= -n_val;
    let prec = (bound.max(0) + 2 * n_val) as u32 + GUARD_DIGITS;
    Ok(finish_with_mode(
        ClaimId::Scc3,
        &[("m", m), ("n", n as i64)],
        mode,
        Required::ValuationAtLeast(bound),
        vacuous,
        &|| Measured::Valuation(nu(3, &alt_sum(m, n)) + Valuation::Finite(-n_val)),
        &|| {
            Measured::Valuation(
                truncated_valuation(
                    prec,
                    &|pr| alt_sum_padic(3, m, n, pr),
                    &|| nu(3, &alt_sum(m, n)),
                ) + Valuation::Finite(-n_val),
            )
        },
    ))
}

/// `(1/3^a) alt(m, 3^a) = -(m-1)/3 (mod 3^(nu_3(m-1)))` for m = 1 (mod 3)
/// and a > nu_3(m-1).
pub fn check_scc4(m: i64, a: i64, mode: Mode) -> Result<ClaimResult, DomainError> {
    require_m_one_mod_three(m)?;
    let t = match nu3_of(m - 1) {
        Valuation::Finite(t) => t,
        Valuation::Infinity => return Err(DomainError::InfiniteModulus { m }),
    };
    if a <= t {
        return Err(DomainError::ExponentTooSmall { a, min: t + 1 });
    }
    let n = 3u64.pow(a as u32);
    let target = ratio(-(m - 1) / 3, 1);
    scc_residue_claim(ClaimId::Scc4, m, a, n, t as u32, &target, mode)
}

/// `(1/3^a) alt(1, 3^a) = -3^(a-1) (mod 3^a)` for a >= 2.
pub fn check_scc5(a: i64, mode: Mode) -> Result<ClaimResult, DomainError> {
    if a < 2 {
        return Err(DomainError::ExponentTooSmall { a, min: 2 });
    }
    let n = 3u64.pow(a as u32);
    let target = -Rational::from(BigInt::from(3).pow(a as u32 - 1));
    scc_residue_claim(ClaimId::Scc5, 1, a, n, a as u32, &target, mode)
}

/// Shared residue-claim template: `(1/3^a) * family(m, 3^a)` must be
/// congruent to `target` modulo `3^t`, where the family is the scaled sum
/// for SCC2 and the alternating sum for SCC4/SCC5.
fn scc_residue_claim(
    claim: ClaimId,
    m: i64,
    a: i64,
    n: u64,
    t: u32,
    target: &Rational,
    mode: Mode,
) -> Result<ClaimResult, DomainError> {
    let three_a = Rational::from(BigInt::from(3).pow(a as u32));
    let required = Required::Residue {
        value: arith::residue_mod_power(3, t, target).expect("target is an integer"),
        modulus: pow_u(3, t),
    };
    let prec = t + 2 * a as u32 + GUARD_DIGITS;
    let use_scaled = claim == ClaimId::Scc2;
    let params: &[(&'static str, i64)] = if claim == ClaimId::Scc5 {
        &[("a", a)]
    } else {
        &[("a", a), ("m", m)]
    };

    let exact_value = move || {
        let sum = if use_scaled { scaled_sum(m, n) } else { alt_sum(m, n) };
        sum / three_a.clone()
    };
    let truncated_eval = move |pr: u32| {
        let sum = if use_scaled {
            scaled_sum_padic(3, m, n, pr)
        } else {
            alt_sum_padic(3, m, n, pr)
        };
        sum.mul_pow_p(-a)
    };

    Ok(finish_with_mode(
        claim,
        params,
        mode,
        required,
        false,
        &|| residue_measured(3, t, &exact_value()),
        &|| match truncated_residue(prec, t, &truncated_eval, &|| {
            arith::residue_mod_power(3, t, &exact_value())
        }) {
            Some(r) => Measured::Residue { value: r, modulus: pow_u(3, t) },
            None => Measured::Valuation(nu(3, &(exact_value() - target))),
        },
    ))
}

/// `nu_3(alt(1, n)) >= 2 nu_3(n) - 1`: the alternating row sum of central
/// binomials is almost as divisible as n squared.
pub fn check_nk2kk(n: u64, mode: Mode) -> ClaimResult {
    assert!(n >= 1);
    let n_val = nu3_u64(n);
    let bound = 2 * n_val - 1;
    // An integer sum always has valuation >= 0.
    let vacuous = bound <= 0;
    let prec = (bound.max(0) + 2 * n_val) as u32 + GUARD_DIGITS;
    finish_with_mode(
        ClaimId::Nk2kk,
        &[("n", n as i64)],
        mode,
        Required::ValuationAtLeast(bound),
        vacuous,
        &|| Measured::Valuation(nu_int(3, &alt_sum_numerator(1, n))),
        &|| {
            Measured::Valuation(truncated_valuation(
                prec,
                &|pr| alt_sum_padic(3, 1, n, pr),
                &|| nu_int(3, &alt_sum_numerator(1, n)),
            ))
        },
    )
}

/// Ceiling of log base 3, as the smallest j with 3^j >= x.
fn ceil_log3(x: u64) -> i64 {
    let mut j = 0;
    let mut p = 1u64;
    while p < x {
        p *= 3;
        j += 1;
    }
    j
}

/// The extension-field machinery packaged as claims: the cube root of
/// unity, the vanishing logarithm, the unbounded valuations of the partial
/// sums of `sum (-3)^k / (2k+1)`, and the agreement of the two closed-form
/// evaluation routes.
pub fn check_lemma42_cube_root(digits: u32) -> ClaimResult {
    let w = padic::omega(digits + 6);
    let diff = w.mul(&w).mul(&w).sub(&padic::QuadExt::one(digits + 6));
    ClaimResult::new(
        ClaimId::Lemma42,
        &[("n", digits as i64)],
        Measured::Valuation(Valuation::Finite(diff.valuation_floor_half())),
        Required::ValuationAtLeast(2 * digits as i64),
        false,
        Mode::Truncated,
    )
    .with_fact("cube_root")
}

pub fn check_lemma42_log_omega(digits: u32) -> Result<ClaimResult, DomainError> {
    let w = padic::omega(digits + GUARD_DIGITS);
    let lw = padic::quad_log(&w, 4 * digits + 64).map_err(|e| {
        DomainError::InsufficientPrecision { detail: alloc::format!("{e}") }
    })?;
    Ok(ClaimResult::new(
        ClaimId::Lemma42,
        &[("n", digits as i64)],
        Measured::Valuation(Valuation::Finite(lw.valuation_floor_half())),
        Required::ValuationAtLeast(2 * digits as i64),
        false,
        Mode::Truncated,
    )
    .with_fact("log_omega"))
}

/// `nu_3` of the K-term partial sum is at least `K - ceil(log_3(2K + 1))`;
/// the tail bound that justifies this is confirmed term by term in the
/// test suite.
pub fn check_lemma42_partial(k: u32) -> ClaimResult {
    assert!(k >= 1);
    let bound = k as i64 - ceil_log3(2 * k as u64 + 1);
    let measured = nu(3, &padic::lemma42_partial(k));
    ClaimResult::new(
        ClaimId::Lemma42,
        &[("k", k as i64)],
        Measured::Valuation(measured),
        Required::ValuationAtLeast(bound),
        false,
        Mode::Exact,
    )
    .with_fact("partial_valuation")
}

pub fn check_lemma42_closed_form(digits: u32, terms: u32) -> Result<ClaimResult, DomainError> {
    let floors = padic::lemma42_closed_form_floors(digits, terms).map_err(|e| {
        DomainError::InsufficientPrecision { detail: alloc::format!("{e}") }
    })?;
    let h = 2 * digits as i64;
    let part = |label, floor| {
        crate::claim::SubCheck::new(
            label,
            Measured::Valuation(Valuation::Finite(floor)),
            Required::ValuationAtLeast(h),
            false,
        )
    };
    Ok(ClaimResult::from_parts(
        ClaimId::Lemma42,
        &[("n", digits as i64)],
        vec![
            part("series_vanishes", floors.series),
            part("log_route_vanishes", floors.log_route),
            part("routes_agree", floors.agreement),
        ],
        Mode::Truncated,
    )
    .with_fact("closed_form"))
}

// ---------------------------------------------------------------------------
// Sweep drivers: incremental prefix state shared across a parameter range.
// ---------------------------------------------------------------------------

/// Sweep the central-sum valuation formula over `n_from..=n_to`, keeping
/// the running sum and central binomial incremental on whichever paths the
/// mode assignment needs.
pub fn sweep_ssz(n_from: u64, n_to: u64, mode_for: &dyn Fn(u64) -> Mode) -> Vec<ClaimResult> {
    assert!(n_from >= 1 && n_from <= n_to);
    let modes: Vec<Mode> = (n_from..=n_to).map(mode_for).collect();
    let need_exact = modes.iter().any(|m| matches!(m, Mode::Exact | Mode::Both));
    let need_trunc = modes.iter().any(|m| matches!(m, Mode::Truncated | Mode::Both));

    // Global working precision covering the largest possible target.
    let prec = (2 * ceil_log3(n_to) + ceil_log3(2 * n_to + 1)) as u32 + GUARD_DIGITS;

    let mut exact_central = CentralBinomials::new();
    let mut exact_sum = BigInt::zero();
    let mut trunc_term = Padic::one(3, prec);
    let mut trunc_sum = Padic::zero(3, prec as i64);
    let mut out = Vec::with_capacity((n_to - n_from + 1) as usize);
    for k in 0..n_to {
        if need_exact {
            exact_sum += exact_central.next_value();
        }
        if need_trunc {
            if k == 0 {
                trunc_sum = trunc_term.clone();
            } else {
                trunc_term = trunc_term
                    .mul_i64(2 * (2 * (k as i64 - 1) + 1))
                    .div_i64(k as i64);
                trunc_sum = trunc_sum.add(&trunc_term);
            }
        }
        let n = k + 1;
        if n < n_from {
            continue;
        }
        let mode = modes[(n - n_from) as usize];
        let target = 2 * nu3_u64(n) + nu_binomial(3, 2 * n, n as i64).expect_finite();
        let required = Required::ValuationEquals(Valuation::Finite(target));
        let measure_exact = || Measured::Valuation(nu_int(3, &exact_sum));
        let measure_trunc = || {
            Measured::Valuation(match trunc_sum.valuation() {
                Some(v) => Valuation::Finite(v),
                // The running sum lost the valuation to cancellation at
                // this precision; re-measure this single n from scratch.
                None => truncated_valuation(
                    target as u32 + GUARD_DIGITS,
                    &|pr| central_sum_padic(n, pr),
                    &|| nu_int(3, &crate::sums::central_sum(n)),
                ),
            })
        };
        let params = [("n", n as i64)];
        let result = match mode {
            Mode::Exact => {
                ClaimResult::new(ClaimId::Ssz11, &params, measure_exact(), required, false, mode)
            }
            Mode::Truncated => {
                ClaimResult::new(ClaimId::Ssz11, &params, measure_trunc(), required, false, mode)
            }
            Mode::Both => {
                let e = measure_exact();
                let t = measure_trunc();
                if e == t {
                    ClaimResult::new(ClaimId::Ssz11, &params, e, required, false, mode)
                } else {
                    ClaimResult::mode_disagreement(ClaimId::Ssz11, &params, e, t, required, false)
                }
            }
        };
        out.push(result);
    }
    out
}

/// Sweep SCC1 over `1..=n_max` for fixed m, sharing the scaled-sum prefix.
pub fn sweep_scc1(
    m: i64,
    n_max: u64,
    mode_for: &dyn Fn(u64) -> Mode,
) -> Result<Vec<ClaimResult>, DomainError> {
    require_m_one_mod_three(m)?;
    let modes: Vec<Mode> = (1..=n_max).map(mode_for).collect();
    let need_exact = modes.iter().any(|md| matches!(md, Mode::Exact | Mode::Both));
    let need_trunc = modes.iter().any(|md| matches!(md, Mode::Truncated | Mode::Both));
    let cap = match nu3_of(m - 1) {
        Valuation::Finite(t) => Valuation::Finite(t - 1),
        Valuation::Infinity => Valuation::Infinity,
    };
    let max_nval = ceil_log3(n_max);
    let prec = (max_nval.max(cap.finite().unwrap_or(0)) + 2 * max_nval) as u32 + GUARD_DIGITS;

    // Exact prefix: numerator of the scaled sum over denominator m^k, kept
    // as S_{n+1} = m S_n + binomial(2n, n); nu_3 is unaffected by the
    // denominator since 3 does not divide m.
    let mut exact_central = CentralBinomials::new();
    let mut exact_numer = BigInt::zero();
    let m_big = BigInt::from(m);
    let mut trunc_term = Padic::one(3, prec);
    let mut trunc_sum = Padic::zero(3, prec as i64);

    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let k = n - 1;
        if need_exact {
            exact_numer = &exact_numer * &m_big + exact_central.next_value();
        }
        if need_trunc {
            if k == 0 {
                trunc_sum = trunc_term.clone();
            } else {
                trunc_term = trunc_term
                    .mul_i64(2 * (2 * (k as i64 - 1) + 1))
                    .div_i64(k as i64 * m);
                trunc_sum = trunc_sum.add(&trunc_term);
            }
        }
        let n_val = nu3_u64(n);
        let bound = min_bound(n_val, cap);
        let vacuous = bound <= -n_val;
        let required = Required::ValuationAtLeast(bound);
        let shift = Valuation::Finite(-n_val);
        let measure_exact = || Measured::Valuation(nu_int(3, &exact_numer) + shift);
        let measure_trunc = || {
            Measured::Valuation(
                match trunc_sum.valuation() {
                    Some(v) => Valuation::Finite(v),
                    None => truncated_valuation(
                        prec * 2 + GUARD_DIGITS,
                        &|pr| scaled_sum_padic(3, m, n, pr),
                        &|| nu(3, &scaled_sum(m, n)),
                    ),
                } + shift,
            )
        };
        let params = [("m", m), ("n", n as i64)];
        let mode = modes[(n - 1) as usize];
        let result = match mode {
            Mode::Exact => {
                ClaimResult::new(ClaimId::Scc1, &params, measure_exact(), required, vacuous, mode)
            }
            Mode::Truncated => {
                ClaimResult::new(ClaimId::Scc1, &params, measure_trunc(), required, vacuous, mode)
            }
            Mode::Both => {
                let e = measure_exact();
                let t = measure_trunc();
                if e == t {
                    ClaimResult::new(ClaimId::Scc1, &params, e, required, vacuous, mode)
                } else {
                    ClaimResult::mode_disagreement(ClaimId::Scc1, &params, e, t, required, vacuous)
                }
            }
        };
        out.push(result);
    }
    Ok(out)
}

/// Sweep SCC3 over `1..=n_max` for fixed m. The alternating sum depends on
/// n in every term, so each n is evaluated from scratch on the mode's path.
pub fn sweep_scc3(
    m: i64,
    n_max: u64,
    mode_for: &dyn Fn(u64) -> Mode,
) -> Result<Vec<ClaimResult>, DomainError> {
    (1..=n_max).map(|n| check_scc3(m, n, mode_for(n))).collect()
}

/// Sweep the integer alternating-sum bound over `n_from..=n_to`.
pub fn sweep_nk2kk(n_from: u64, n_to: u64, mode_for: &dyn Fn(u64) -> Mode) -> Vec<ClaimResult> {
    (n_from..=n_to).map(|n| check_nk2kk(n, mode_for(n))).collect()
}

/// Sweep both parts of the Sun bounds over `1..=n_max`.
pub fn sweep_sun12(
    m: i64,
    p: Option<u64>,
    n_max: u64,
    mode_for: &dyn Fn(u64) -> Mode,
) -> Result<Vec<ClaimResult>, DomainError> {
    let p = resolve_sun12_prime(m, p)?;
    let mut out = Vec::with_capacity(2 * n_max as usize);
    for n in 1..=n_max {
        out.extend(check_sun12(m, Some(p), n, mode_for(n))?);
    }
    Ok(out)
}
