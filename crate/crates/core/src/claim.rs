//! Claim bookkeeping: identifiers, measured-versus-required verdicts, and
//! the result record every theorem check produces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::arith::Valuation;

/// Which congruence or identity a result certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    Ssz11,
    Sun12A,
    Sun12B,
    Scc1,
    Scc2,
    Scc3,
    Scc4,
    Scc5,
    Nk2kk,
    Lemma21,
    Lemma41,
    Lemma42,
    Aux,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Ssz11 => "SSZ_11",
            ClaimId::Sun12A => "SUN_12A",
            ClaimId::Sun12B => "SUN_12B",
            ClaimId::Scc1 => "SCC1",
            ClaimId::Scc2 => "SCC2",
            ClaimId::Scc3 => "SCC3",
            ClaimId::Scc4 => "SCC4",
            ClaimId::Scc5 => "SCC5",
            ClaimId::Nk2kk => "NK2KK",
            ClaimId::Lemma21 => "LEMMA21",
            ClaimId::Lemma41 => "LEMMA41",
            ClaimId::Lemma42 => "LEMMA42",
            ClaimId::Aux => "AUX",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Arithmetic path that produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Truncated,
    /// Both paths ran and their measured values were compared.
    Both,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "EXACT",
            Mode::Truncated => "TRUNCATED",
            Mode::Both => "BOTH",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a check measured: a valuation, or a residue with its modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Measured {
    Valuation(Valuation),
    Residue { value: BigUint, modulus: BigUint },
}

/// What the claim demands of the measured quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Required {
    /// Valuation at least this bound.
    ValuationAtLeast(i64),
    /// Valuation exactly this value; `Infinity` encodes exact equality of
    /// the two sides whose difference was measured.
    ValuationEquals(Valuation),
    /// Residue equal to `value` modulo `modulus`.
    Residue { value: BigUint, modulus: BigUint },
}

/// Pass/fail as a pure function of measured and required.
pub fn satisfies(measured: &Measured, required: &Required) -> bool {
    match (measured, required) {
        (Measured::Valuation(v), Required::ValuationAtLeast(t)) => *v >= *t,
        (Measured::Valuation(v), Required::ValuationEquals(t)) => v == t,
        (
            Measured::Residue { value, modulus },
            Required::Residue { value: want, modulus: want_mod },
        ) => modulus == want_mod && value == want,
        // A residue claim whose left side had no residue (negative
        // valuation) surfaces as a Valuation measurement and fails here.
        _ => false,
    }
}

/// A named sub-check within a composite claim, kept so a failure pinpoints
/// which congruence broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub label: &'static str,
    pub measured: Measured,
    pub required: Required,
    pub vacuous: bool,
    pub pass: bool,
}

impl SubCheck {
    pub fn new(label: &'static str, measured: Measured, required: Required, vacuous: bool) -> Self {
        let pass = satisfies(&measured, &required);
        SubCheck { label, measured, required, vacuous, pass }
    }
}

/// One verification record: claim, parameters, measured vs required,
/// arithmetic mode, verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: ClaimId,
    /// Named integer parameters, sorted by name.
    pub params: Vec<(&'static str, i64)>,
    pub measured: Measured,
    pub required: Required,
    /// The required bound is satisfied by every possible value of the
    /// measured quantity, so the check cannot fail; it is still evaluated
    /// and counted so sweep totals stay total.
    pub vacuous: bool,
    pub mode: Mode,
    pub pass: bool,
    /// Sub-checks for composite claims; empty for single-condition claims.
    pub parts: Vec<SubCheck>,
    /// Discriminator for claim families that bundle several named facts
    /// (the extension-field machinery, the identity suite).
    pub fact: Option<&'static str>,
}

impl ClaimResult {
    pub fn new(
        claim: ClaimId,
        params: &[(&'static str, i64)],
        measured: Measured,
        required: Required,
        vacuous: bool,
        mode: Mode,
    ) -> Self {
        let mut params: Vec<_> = params.to_vec();
        params.sort_unstable_by_key(|&(name, _)| name);
        let pass = satisfies(&measured, &required);
        ClaimResult {
            claim,
            params,
            measured,
            required,
            vacuous,
            mode,
            pass,
            parts: Vec::new(),
            fact: None,
        }
    }

    pub fn with_fact(mut self, fact: &'static str) -> Self {
        self.fact = Some(fact);
        self
    }

    /// Composite result: overall verdict is the conjunction, and the
    /// headline measured/required pair comes from the weakest passing
    /// margin (or the first failing part).
    pub fn from_parts(
        claim: ClaimId,
        params: &[(&'static str, i64)],
        parts: Vec<SubCheck>,
        mode: Mode,
    ) -> Self {
        assert!(!parts.is_empty());
        let mut params: Vec<_> = params.to_vec();
        params.sort_unstable_by_key(|&(name, _)| name);
        let pass = parts.iter().all(|p| p.pass);
        let vacuous = parts.iter().all(|p| p.vacuous);
        let binding = parts
            .iter()
            .find(|p| !p.pass)
            .unwrap_or_else(|| parts.iter().min_by_key(|p| margin(p)).unwrap());
        ClaimResult {
            claim,
            params,
            measured: binding.measured.clone(),
            required: binding.required.clone(),
            vacuous,
            mode,
            pass,
            parts,
            fact: None,
        }
    }

    /// A result recording that the exact and truncated paths disagreed on
    /// the measured value; this is a hard failure regardless of whether
    /// each path individually satisfies the requirement.
    pub fn mode_disagreement(
        claim: ClaimId,
        params: &[(&'static str, i64)],
        exact: Measured,
        truncated: Measured,
        required: Required,
        vacuous: bool,
    ) -> Self {
        let mut params: Vec<_> = params.to_vec();
        params.sort_unstable_by_key(|&(name, _)| name);
        let parts = alloc::vec![
            SubCheck::new("exact", exact.clone(), required.clone(), vacuous),
            SubCheck::new("truncated", truncated, required.clone(), vacuous),
        ];
        ClaimResult {
            claim,
            params,
            measured: exact,
            required,
            vacuous,
            mode: Mode::Both,
            pass: false,
            parts,
            fact: None,
        }
    }

    /// Sort key giving the deterministic report order.
    pub fn sort_key(&self) -> (ClaimId, Vec<(&'static str, i64)>) {
        (self.claim, self.params.clone())
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

/// Margin of a valuation sub-check; residue checks and infinite margins sort
/// last so a finite near-miss becomes the headline.
fn margin(part: &SubCheck) -> i64 {
    match (&part.measured, &part.required) {
        (Measured::Valuation(Valuation::Finite(v)), Required::ValuationAtLeast(t)) => v - t,
        (Measured::Valuation(Valuation::Finite(v)), Required::ValuationEquals(t)) => match t {
            Valuation::Finite(t) => v - t,
            Valuation::Infinity => i64::MAX,
        },
        _ => i64::MAX,
    }
}

/// Parameter-domain violation: the claim does not cover these inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainError {
    /// The claim requires m = 1 (mod 3).
    MNotOneModThree { m: i64 },
    /// The claim requires 3 not dividing m.
    ThreeDividesM { m: i64 },
    /// Exponent parameter below its admissible minimum.
    ExponentTooSmall { a: i64, min: i64 },
    /// p must be an odd prime.
    NotOddPrime { p: u64 },
    /// p must divide m - 4.
    PrimeDoesNotDivide { p: u64, m: i64 },
    /// m - 4 has no odd prime divisor to default to.
    NoOddPrimeDivisor { m: i64 },
    /// n must be positive.
    NNotPositive { n: i64 },
    /// nu_3(m - 1) is infinite (m = 1), so no finite modulus exists.
    InfiniteModulus { m: i64 },
    /// Free-form violation used by the closed-form precision checks.
    InsufficientPrecision { detail: String },
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::MNotOneModThree { m } => {
                write!(f, "m = {m} is not congruent to 1 mod 3")
            }
            DomainError::ThreeDividesM { m } => write!(f, "3 divides m = {m}"),
            DomainError::ExponentTooSmall { a, min } => {
                write!(f, "a = {a} is below the admissible minimum {min}")
            }
            DomainError::NotOddPrime { p } => write!(f, "p = {p} is not an odd prime"),
            DomainError::PrimeDoesNotDivide { p, m } => {
                write!(f, "p = {p} does not divide m - 4 = {}", m - 4)
            }
            DomainError::NoOddPrimeDivisor { m } => {
                write!(f, "m - 4 = {} has no odd prime divisor", m - 4)
            }
            DomainError::NNotPositive { n } => write!(f, "n = {n} must be positive"),
            DomainError::InfiniteModulus { m } => {
                write!(f, "m = {m} makes nu_3(m - 1) infinite; no finite modulus to check")
            }
            DomainError::InsufficientPrecision { detail } => f.write_str(detail),
        }
    }
}
