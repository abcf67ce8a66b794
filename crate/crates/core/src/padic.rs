//! Truncated p-adic arithmetic with explicit precision certificates, the
//! p-adic logarithm, and the ramified quadratic extension Q_3(sqrt(-3)).
//!
//! A [`Padic`] stores a value as `unit * p^exponent`, with the unit known
//! modulo `p^precision` (capped relative precision). Multiplying or dividing
//! by exactly-known integers preserves relative precision, which is what
//! makes incremental binomial ratios lossless on this representation;
//! addition works at the minimum of the two absolute precisions and may
//! discover that the sum is indistinguishable from zero, which is reported
//! honestly as a zero-to-order marker rather than a fabricated valuation.
//!
//! Elements of Q_3(sqrt(-3)) are pairs `a + b*sqrt(-3)`; their valuations
//! are measured in half-integer units, represented as integer counts of
//! powers of sqrt(-3) so that nu(3) = 2 and nu(sqrt(-3)) = 1.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};

/// Error from the series evaluations in this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicError {
    /// log(1 + y) requires nu(y) > 0; the series diverges otherwise.
    DivergentLog { valuation_floor: i64 },
    /// The requested term count cannot certify the representation's
    /// precision: the truncation error would dominate.
    InsufficientTerms { terms: u32, certified: i64, needed: i64 },
}

impl fmt::Display for PadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicError::DivergentLog { valuation_floor } => write!(
                f,
                "logarithm series diverges: argument is 1 + y with nu(y) floor {valuation_floor} <= 0"
            ),
            PadicError::InsufficientTerms { terms, certified, needed } => write!(
                f,
                "{terms} series terms certify precision {certified}, below the required {needed}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// `unit * p^exp + O(p^(exp+prec))`, with `p` not dividing `unit` and
    /// `0 < unit < p^prec`.
    Unit { unit: BigUint, exp: i64, prec: u32 },
    /// A value only known to be `O(p^order)`.
    Zero { order: i64 },
}

/// A truncated p-adic number: unit times prime power with explicit
/// precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Padic {
    p: u64,
    repr: Repr,
}

fn p_pow(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

impl Padic {
    /// A value known to vanish modulo `p^order` and nothing more.
    pub fn zero(p: u64, order: i64) -> Self {
        assert!(arith::is_odd_prime(p));
        Padic { p, repr: Repr::Zero { order } }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Padic::from_bigint(p, &BigInt::one(), prec)
    }

    /// Exact embedding of an integer at relative precision `prec`. Zero
    /// embeds as a zero-to-order marker at `prec`.
    pub fn from_bigint(p: u64, n: &BigInt, prec: u32) -> Self {
        assert!(arith::is_odd_prime(p));
        assert!(prec >= 1);
        if n.is_zero() {
            return Padic::zero(p, prec as i64);
        }
        let big_p = BigInt::from(p);
        let mut exp = 0i64;
        let mut core = n.clone();
        loop {
            let (q, r) = core.div_rem(&big_p);
            if !r.is_zero() {
                break;
            }
            core = q;
            exp += 1;
        }
        let unit = core.mod_floor(&BigInt::from(p_pow(p, prec))).to_biguint().unwrap();
        Padic { p, repr: Repr::Unit { unit, exp, prec } }
    }

    pub fn from_i64(p: u64, n: i64, prec: u32) -> Self {
        Padic::from_bigint(p, &BigInt::from(n), prec)
    }

    /// Exact embedding of a rational at relative precision `prec`. The
    /// prime may divide the denominator; the exponent simply goes negative.
    pub fn from_rational(p: u64, x: &Rational, prec: u32) -> Self {
        assert!(arith::is_odd_prime(p));
        assert!(prec >= 1);
        if x.is_zero() {
            return Padic::zero(p, prec as i64);
        }
        let num = Padic::from_bigint(p, x.numer(), prec);
        let den = Padic::from_bigint(p, x.denom(), prec);
        num.div(&den)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Exact valuation when determined; `None` when the value is only known
    /// to vanish to some order.
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Unit { exp, .. } => Some(*exp),
            Repr::Zero { .. } => None,
        }
    }

    /// Lower bound on the valuation; exact for unit representations.
    pub fn valuation_floor(&self) -> i64 {
        match &self.repr {
            Repr::Unit { exp, .. } => *exp,
            Repr::Zero { order } => *order,
        }
    }

    /// The value is known modulo `p^abs_precision()`.
    pub fn abs_precision(&self) -> i64 {
        match &self.repr {
            Repr::Unit { exp, prec, .. } => exp + *prec as i64,
            Repr::Zero { order } => *order,
        }
    }

    pub fn is_zero_marker(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    /// Unit residue and exponent, for unit representations.
    pub fn unit_parts(&self) -> Option<(&BigUint, i64, u32)> {
        match &self.repr {
            Repr::Unit { unit, exp, prec } => Some((unit, *exp, *prec)),
            Repr::Zero { .. } => None,
        }
    }

    fn assert_same_prime(&self, other: &Padic) {
        assert_eq!(self.p, other.p, "mixed primes in p-adic arithmetic");
    }

    pub fn add(&self, other: &Padic) -> Padic {
        self.assert_same_prime(other);
        let abs = self.abs_precision().min(other.abs_precision());
        let floor = self.valuation_floor().min(other.valuation_floor());
        if abs <= floor {
            // Nothing survives at this precision.
            return Padic::zero(self.p, abs);
        }
        let width = (abs - floor) as u32;
        let modulus = p_pow(self.p, width);
        let mut acc = BigUint::zero();
        for term in [self, other] {
            if let Repr::Unit { unit, exp, .. } = &term.repr {
                let shift = (exp - floor) as u32;
                if shift < width {
                    acc += (unit * p_pow(self.p, shift)) % &modulus;
                }
            }
        }
        acc %= &modulus;
        if acc.is_zero() {
            return Padic::zero(self.p, abs);
        }
        let big_p = BigUint::from(self.p);
        let mut exp_shift = 0i64;
        loop {
            let (q, r) = acc.div_rem(&big_p);
            if !r.is_zero() {
                break;
            }
            acc = q;
            exp_shift += 1;
        }
        let exp = floor + exp_shift;
        let prec = (abs - exp) as u32;
        debug_assert!(prec >= 1);
        Padic { p: self.p, repr: Repr::Unit { unit: acc % p_pow(self.p, prec), exp, prec } }
    }

    pub fn neg(&self) -> Padic {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit { unit, exp, prec } => {
                let modulus = p_pow(self.p, *prec);
                let unit = (&modulus - unit) % &modulus;
                Padic { p: self.p, repr: Repr::Unit { unit, exp: *exp, prec: *prec } }
            }
        }
    }

    pub fn sub(&self, other: &Padic) -> Padic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Padic) -> Padic {
        self.assert_same_prime(other);
        match (&self.repr, &other.repr) {
            (Repr::Zero { order: a }, Repr::Zero { order: b }) => Padic::zero(self.p, a + b),
            (Repr::Zero { order }, Repr::Unit { exp, .. })
            | (Repr::Unit { exp, .. }, Repr::Zero { order }) => Padic::zero(self.p, order + exp),
            (
                Repr::Unit { unit: ua, exp: ea, prec: pa },
                Repr::Unit { unit: ub, exp: eb, prec: pb },
            ) => {
                let prec = (*pa).min(*pb);
                let unit = (ua * ub) % p_pow(self.p, prec);
                Padic { p: self.p, repr: Repr::Unit { unit, exp: ea + eb, prec } }
            }
        }
    }

    /// Multiplicative inverse. Panics on a zero marker, which is a logic
    /// error in the callers here (divisors are exactly-known nonzero values).
    pub fn inverse(&self) -> Padic {
        match &self.repr {
            Repr::Zero { .. } => panic!("inverse of a p-adic zero marker"),
            Repr::Unit { unit, exp, prec } => {
                let modulus = BigInt::from(p_pow(self.p, *prec));
                let inv = arith::mod_inverse(&BigInt::from(unit.clone()), &modulus)
                    .expect("unit is invertible")
                    .to_biguint()
                    .unwrap();
                Padic { p: self.p, repr: Repr::Unit { unit: inv, exp: -exp, prec: *prec } }
            }
        }
    }

    pub fn div(&self, other: &Padic) -> Padic {
        self.mul(&other.inverse())
    }

    /// Multiply by an exactly-known integer; relative precision is
    /// preserved.
    pub fn mul_i64(&self, c: i64) -> Padic {
        if c == 0 {
            // Exact zero annihilates everything we know.
            return Padic::zero(self.p, self.abs_precision().saturating_add(64));
        }
        let prec = match &self.repr {
            Repr::Unit { prec, .. } => *prec,
            Repr::Zero { .. } => 1,
        };
        self.mul(&Padic::from_i64(self.p, c, prec))
    }

    /// Divide by an exactly-known nonzero integer.
    pub fn div_i64(&self, c: i64) -> Padic {
        assert!(c != 0);
        let prec = match &self.repr {
            Repr::Unit { prec, .. } => *prec,
            Repr::Zero { .. } => 1,
        };
        self.div(&Padic::from_i64(self.p, c, prec))
    }

    /// Shift by a power of p (exact).
    pub fn mul_pow_p(&self, k: i64) -> Padic {
        match &self.repr {
            Repr::Zero { order } => Padic::zero(self.p, order + k),
            Repr::Unit { unit, exp, prec } => Padic {
                p: self.p,
                repr: Repr::Unit { unit: unit.clone(), exp: exp + k, prec: *prec },
            },
        }
    }

    pub fn pow(&self, mut e: u32) -> Padic {
        let mut base = self.clone();
        let mut acc = Padic::one(
            self.p,
            match &self.repr {
                Repr::Unit { prec, .. } => *prec,
                Repr::Zero { .. } => 1,
            },
        );
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduce the claimed absolute precision to at most `abs`.
    pub fn cap_abs_precision(&self, abs: i64) -> Padic {
        match &self.repr {
            Repr::Zero { order } => Padic::zero(self.p, (*order).min(abs)),
            Repr::Unit { unit, exp, prec } => {
                if abs <= *exp {
                    return Padic::zero(self.p, abs);
                }
                let new_prec = ((abs - exp) as u32).min(*prec);
                Padic {
                    p: self.p,
                    repr: Repr::Unit {
                        unit: unit % p_pow(self.p, new_prec),
                        exp: *exp,
                        prec: new_prec,
                    },
                }
            }
        }
    }

    /// Residue of the value modulo `p^t`, when the value is p-integral and
    /// known to at least that absolute precision.
    pub fn residue(&self, t: u32) -> Option<BigUint> {
        if self.abs_precision() < t as i64 {
            return None;
        }
        match &self.repr {
            Repr::Zero { .. } => Some(BigUint::zero()),
            Repr::Unit { unit, exp, .. } => {
                if *exp < 0 {
                    return None;
                }
                if *exp >= t as i64 {
                    return Some(BigUint::zero());
                }
                let shift = *exp as u32;
                Some((unit * p_pow(self.p, shift)) % p_pow(self.p, t))
            }
        }
    }

    /// Whether the value is congruent to `other` modulo `p^abs`, which
    /// requires both to be known at least that precisely.
    pub fn congruent_to(&self, other: &Padic, abs: i64) -> bool {
        let d = self.sub(other);
        d.abs_precision() >= abs && d.valuation_floor() >= abs
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero { order } => write!(f, "O({}^{})", self.p, order),
            Repr::Unit { unit, exp, prec } => {
                write!(f, "{}*{}^{} + O({}^{})", unit, self.p, exp, self.p, exp + *prec as i64)
            }
        }
    }
}

/// An element `a + b*sqrt(-3)` of the ramified quadratic extension of the
/// 3-adics. Valuations are in half-integer units: nu(sqrt(-3)) = 1,
/// nu(3) = 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub re: Padic,
    pub im: Padic,
}

impl QuadExt {
    pub fn new(re: Padic, im: Padic) -> Self {
        assert_eq!(re.prime(), 3);
        assert_eq!(im.prime(), 3);
        QuadExt { re, im }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, prec: u32) -> Self {
        QuadExt::new(Padic::from_rational(3, re, prec), Padic::from_rational(3, im, prec))
    }

    pub fn one(prec: u32) -> Self {
        QuadExt::new(Padic::one(3, prec), Padic::zero(3, prec as i64))
    }

    /// The basis element sqrt(-3).
    pub fn sqrt_m3(prec: u32) -> Self {
        QuadExt::new(Padic::zero(3, prec as i64 + 1), Padic::one(3, prec))
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        QuadExt { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        QuadExt { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt { re: self.re.neg(), im: self.im.neg() }
    }

    /// `(a + b s)(c + d s) = (ac - 3bd) + (ad + bc) s` for `s = sqrt(-3)`.
    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        let ac = self.re.mul(&other.re);
        let bd = self.im.mul(&other.im);
        let ad = self.re.mul(&other.im);
        let bc = self.im.mul(&other.re);
        QuadExt { re: ac.sub(&bd.mul_i64(3)), im: ad.add(&bc) }
    }

    /// Multiply by sqrt(-3): `(a, b) -> (-3b, a)`.
    pub fn mul_sqrt_m3(&self) -> QuadExt {
        QuadExt { re: self.im.mul_i64(-3), im: self.re.clone() }
    }

    /// Divide by sqrt(-3): `x / s = -x s / 3`.
    pub fn div_sqrt_m3(&self) -> QuadExt {
        let shifted = self.mul_sqrt_m3();
        QuadExt { re: shifted.re.div_i64(-3), im: shifted.im.div_i64(-3) }
    }

    pub fn mul_i64(&self, c: i64) -> QuadExt {
        QuadExt { re: self.re.mul_i64(c), im: self.im.mul_i64(c) }
    }

    pub fn div_i64(&self, c: i64) -> QuadExt {
        QuadExt { re: self.re.div_i64(c), im: self.im.div_i64(c) }
    }

    /// Lower bound on the valuation in half-integer units. The two
    /// components sit at distinct parities, so when both are unit
    /// representations the bound is exact.
    pub fn valuation_floor_half(&self) -> i64 {
        (2 * self.re.valuation_floor()).min(2 * self.im.valuation_floor() + 1)
    }

    /// Exact valuation in half-units, when determined.
    pub fn valuation_half(&self) -> Option<i64> {
        let re_v = self.re.valuation().map(|v| 2 * v);
        let im_v = self.im.valuation().map(|v| 2 * v + 1);
        match (re_v, im_v) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) if a < 2 * self.im.valuation_floor() + 1 => Some(a),
            (None, Some(b)) if b < 2 * self.re.valuation_floor() => Some(b),
            _ => None,
        }
    }

    /// The element is known modulo `sqrt(-3)^abs_precision_half()`.
    pub fn abs_precision_half(&self) -> i64 {
        (2 * self.re.abs_precision()).min(2 * self.im.abs_precision() + 1)
    }

    /// Reduce the claimed absolute precision to at most `h` half-units.
    pub fn cap_abs_half(&self, h: i64) -> QuadExt {
        QuadExt {
            re: self.re.cap_abs_precision(h.div_euclid(2) + (h.rem_euclid(2))),
            im: self.im.cap_abs_precision((h - 1).div_euclid(2) + ((h - 1).rem_euclid(2))),
        }
    }

    /// Whether the element vanishes modulo `sqrt(-3)^h`, requiring the
    /// representation to certify at least that precision.
    pub fn is_zero_to_half(&self, h: i64) -> bool {
        self.abs_precision_half() >= h && self.valuation_floor_half() >= h
    }

    pub fn congruent_to_half(&self, other: &QuadExt, h: i64) -> bool {
        self.sub(other).is_zero_to_half(h)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*sqrt(-3)", self.re, self.im)
    }
}

/// The primitive cube root of unity `(-1 + sqrt(-3)) / 2`, embedded at
/// relative precision `prec`.
pub fn omega(prec: u32) -> QuadExt {
    QuadExt::from_rationals(&arith::ratio(-1, 2), &arith::ratio(1, 2), prec)
}

/// Smallest possible valuation of any series tail term `n*v - loss*nu_p(n)`
/// over `n >= from`, computed exactly: if `nu_p(n) = j` then `n >= p^j`, so
/// the minimum over each j is attained at `max(from, p^j)`.
fn tail_floor(p: u64, from: u64, v: i64, loss: i64) -> i64 {
    debug_assert!(v >= 1);
    let mut best = i64::MAX;
    let mut pj = 1u64;
    let mut j = 0i64;
    loop {
        let n = from.max(pj);
        best = best.min(n as i64 * v - loss * j);
        if pj >= from && pj as i64 * v - loss * j > best {
            return best;
        }
        pj = pj.saturating_mul(p);
        j += 1;
    }
}

/// p-adic logarithm `log(1 + y) = sum (-1)^(n+1) y^n / n` of a principal
/// unit, truncated after `terms` terms.
///
/// The returned value's precision certificate accounts both for the
/// series truncation (via an exact tail bound) and for the valuation lost
/// to the divisions by n inside the series. Fails if `nu(y) <= 0` (the
/// series diverges) or if `terms` is too small for the truncation error to
/// sit below the input's representation precision.
pub fn padic_log(x: &Padic, terms: u32) -> Result<Padic, PadicError> {
    let p = x.prime();
    let one = Padic::one(p, x.abs_precision().max(2) as u32);
    let y = x.sub(&one);
    if y.is_zero_marker() {
        // 1 + O(p^a): the log is O(p^a) too.
        return Ok(Padic::zero(p, y.abs_precision()));
    }
    let v = y.valuation_floor();
    if v <= 0 {
        return Err(PadicError::DivergentLog { valuation_floor: v });
    }
    let target = x.abs_precision();
    let certified = tail_floor(p, terms as u64 + 1, v, 1);
    if certified < target {
        return Err(PadicError::InsufficientTerms { terms, certified, needed: target });
    }
    let mut power = y.clone();
    let mut acc = y.clone();
    for n in 2..=terms as i64 {
        // Guard: stop once every remaining term sits four digits above the
        // target; the tail floor is exact, so no later spike of nu(n) can
        // reach back below it.
        if tail_floor(p, n as u64, v, 1) > target + 4 {
            break;
        }
        power = power.mul(&y);
        let term = power.div_i64(n);
        acc = if n % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
    }
    Ok(acc.cap_abs_precision(certified.min(target)))
}

/// Logarithm on the quadratic extension; same contract as [`padic_log`],
/// with valuations in half-units and a loss of two half-units per factor
/// of 3 divided out.
pub fn quad_log(x: &QuadExt, terms: u32) -> Result<QuadExt, PadicError> {
    let one = QuadExt::one(((x.abs_precision_half().max(2) / 2) + 2) as u32);
    let y = x.sub(&one);
    let v = y.valuation_floor_half();
    if y.valuation_half().is_none() && v >= x.abs_precision_half() {
        return Ok(QuadExt {
            re: Padic::zero(3, x.abs_precision_half() / 2),
            im: Padic::zero(3, x.abs_precision_half() / 2),
        });
    }
    if v <= 0 {
        return Err(PadicError::DivergentLog { valuation_floor: v });
    }
    let target = x.abs_precision_half();
    let certified = tail_floor(3, terms as u64 + 1, v, 2);
    if certified < target {
        return Err(PadicError::InsufficientTerms { terms, certified, needed: target });
    }
    let mut power = y.clone();
    let mut acc = y.clone();
    for n in 2..=terms as i64 {
        if tail_floor(3, n as u64, v, 2) > target + 8 {
            break;
        }
        power = power.mul(&y);
        let term = power.div_i64(n);
        acc = if n % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
    }
    Ok(acc.cap_abs_half(certified.min(target)))
}

/// Verifies `omega^3 = 1` in the truncated extension to `digits` 3-adic
/// digits of absolute precision.
pub fn cube_root_check(digits: u32) -> bool {
    let w = omega(digits + 6);
    let cube = w.mul(&w).mul(&w);
    cube.sub(&QuadExt::one(digits + 6)).is_zero_to_half(2 * digits as i64)
}

/// Exact partial sum `sum_{k=0}^{K-1} (-3)^k / (2k+1)`.
pub fn lemma42_partial(k_terms: u32) -> Rational {
    let mut acc = Rational::zero();
    let mut sign_pow = BigInt::one();
    for k in 0..k_terms as i64 {
        acc += Rational::new(sign_pow.clone(), BigInt::from(2 * k + 1));
        sign_pow *= BigInt::from(-3);
    }
    acc
}

/// Truncated extension-field evaluation of
/// `sum_{k=0}^{terms-1} sqrt(-3)^(2k+1) / (2k+1)`, divided by sqrt(-3),
/// with its certified absolute precision capped by the exact tail bound.
pub fn arctan_series_quad(terms: u32, prec: u32) -> QuadExt {
    let mut power = QuadExt::sqrt_m3(prec);
    let mut acc = power.clone();
    for k in 1..terms as i64 {
        power = power.mul_i64(-3);
        acc = acc.add(&power.div_i64(2 * k + 1));
    }
    // After dividing by sqrt(-3) the k-th term is (-3)^k/(2k+1) with
    // valuation 2k - 2*nu_3(2k+1) half-units; nu_3(2k+1) = j forces
    // 2k >= 3^j - 1 and k >= terms.
    let mut tail = i64::MAX;
    let mut pj = 1i64;
    let mut j = 0i64;
    loop {
        let two_k = (2 * terms as i64).max(pj - 1);
        tail = tail.min(two_k - 2 * j);
        if pj - 1 >= 2 * terms as i64 && pj - 1 - 2 * j > tail {
            break;
        }
        pj *= 3;
        j += 1;
    }
    acc.div_sqrt_m3().cap_abs_half(tail)
}

/// Certified vanishing orders (in half-units) for the two evaluation
/// routes of `sum (-3)^k / (2k+1)` and for their difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedFormFloors {
    pub series: i64,
    pub log_route: i64,
    pub agreement: i64,
}

/// Evaluates both routes for `sum (-3)^k / (2k+1)` — the direct series in
/// the extension divided by sqrt(-3), and
/// `(log(1 + sqrt(-3)) - log(1 - sqrt(-3))) / (2 sqrt(-3))` — and returns
/// the certified order to which each vanishes and to which they agree.
pub fn lemma42_closed_form_floors(
    digits: u32,
    terms: u32,
) -> Result<ClosedFormFloors, PadicError> {
    let prec = digits + 10;
    let h = 2 * digits as i64;

    let series = arctan_series_quad(terms, prec);
    if series.abs_precision_half() < h {
        return Err(PadicError::InsufficientTerms {
            terms,
            certified: series.abs_precision_half(),
            needed: h,
        });
    }

    let one = QuadExt::one(prec);
    let s = QuadExt::sqrt_m3(prec);
    let log_plus = quad_log(&one.add(&s), terms.max(2 * prec + 16))?;
    let log_minus = quad_log(&one.sub(&s), terms.max(2 * prec + 16))?;
    let log_route = log_plus.sub(&log_minus).div_sqrt_m3().div_i64(2);
    if log_route.abs_precision_half() < h {
        return Err(PadicError::InsufficientTerms {
            terms,
            certified: log_route.abs_precision_half(),
            needed: h,
        });
    }

    Ok(ClosedFormFloors {
        series: series.valuation_floor_half().min(series.abs_precision_half()),
        log_route: log_route.valuation_floor_half().min(log_route.abs_precision_half()),
        agreement: {
            let d = series.sub(&log_route);
            d.valuation_floor_half().min(d.abs_precision_half())
        },
    })
}

/// Checks the closed form for `sum (-3)^k / (2k+1)`: the series route and
/// the logarithm route must agree to `digits` 3-adic digits, and both must
/// vanish to that precision.
pub fn lemma42_closed_form_check(digits: u32, terms: u32) -> Result<bool, PadicError> {
    let floors = lemma42_closed_form_floors(digits, terms)?;
    let h = 2 * digits as i64;
    Ok(floors.series >= h && floors.log_route >= h && floors.agreement >= h)
}

/// Human-readable description of a quad element's certified precision, for
/// diagnostics.
pub fn describe_precision(x: &QuadExt) -> String {
    format!(
        "valuation floor {} half-units, certified to {} half-units",
        x.valuation_floor_half(),
        x.abs_precision_half()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, rational};

    fn q3(x: &Rational, prec: u32) -> Padic {
        Padic::from_rational(3, x, prec)
    }

    #[test]
    fn embedding_roundtrip_residues() {
        let x = q3(&ratio(22, 7), 8);
        // 22/7 mod 3^8: 22 * inv(7)
        let m = BigInt::from(3u64.pow(8));
        let expected = (BigInt::from(22) * arith::mod_inverse(&BigInt::from(7), &m).unwrap())
            .mod_floor(&m)
            .to_biguint()
            .unwrap();
        assert_eq!(x.residue(8), Some(expected));
        assert_eq!(x.valuation(), Some(0));
    }

    #[test]
    fn negative_exponent_for_three_in_denominator() {
        let x = q3(&ratio(2, 27), 6);
        assert_eq!(x.valuation(), Some(-3));
        assert_eq!(x.residue(3), None);
    }

    #[test]
    fn addition_tracks_cancellation() {
        let a = q3(&rational(10), 6);
        let b = q3(&rational(-1), 6);
        let sum = a.add(&b);
        assert_eq!(sum.valuation(), Some(2));
        assert_eq!(sum.residue(4), Some(BigUint::from(9u32)));
        // Total cancellation within precision is reported as a zero marker.
        let zero = a.sub(&a);
        assert!(zero.is_zero_marker());
        assert_eq!(zero.abs_precision(), 6);
    }

    #[test]
    fn multiplication_adds_valuations() {
        let a = q3(&ratio(6, 5), 10);
        let b = q3(&ratio(15, 2), 10);
        let prod = a.mul(&b);
        assert_eq!(prod.valuation(), Some(2));
        let exact = q3(&rational(9), 10);
        assert!(prod.congruent_to(&exact, 10));
    }

    #[test]
    fn division_by_small_integers_is_lossless_in_relative_precision() {
        let a = q3(&rational(7), 12);
        let b = a.div_i64(9).mul_i64(9);
        assert!(b.congruent_to(&a, 12));
        let (_, exp, prec) = b.unit_parts().unwrap();
        assert_eq!(exp, 0);
        assert_eq!(prec, 12);
    }

    #[test]
    fn log_of_one_plus_three_matches_exact_partial_sum() {
        // Independent oracle: the exact rational partial sum of the series,
        // reduced at the certified precision.
        let terms = 40u32;
        let x = q3(&rational(4), 24);
        let log = padic_log(&x, terms).unwrap();
        let mut oracle = Rational::zero();
        for n in 1..=terms as i64 {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            oracle += ratio(sign, n) * Rational::from(BigInt::from(3).pow(n as u32));
        }
        let cert = log.abs_precision();
        assert!(cert >= 20, "certificate too weak: {cert}");
        let embedded = q3(&oracle, 40);
        assert!(log.congruent_to(&embedded.cap_abs_precision(cert), cert));
    }

    #[test]
    fn log_of_exact_one_is_zero() {
        let one = Padic::one(3, 16);
        let log = padic_log(&one, 40).unwrap();
        assert!(log.is_zero_marker());
        assert!(log.abs_precision() >= 16);
        let one_q = QuadExt::one(16);
        let log_q = quad_log(&one_q, 40).unwrap();
        assert!(log_q.is_zero_to_half(16));
    }

    #[test]
    fn log_rejects_divergent_input() {
        let x = q3(&rational(2), 10);
        assert!(matches!(padic_log(&x, 50), Err(PadicError::DivergentLog { .. })));
    }

    #[test]
    fn log_rejects_insufficient_terms() {
        let x = q3(&rational(4), 30);
        assert!(matches!(padic_log(&x, 5), Err(PadicError::InsufficientTerms { .. })));
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        assert!(cube_root_check(1));
        assert!(cube_root_check(20));
        assert!(cube_root_check(40));
    }

    #[test]
    fn log_of_omega_vanishes() {
        for digits in [10u32, 25, 40] {
            let w = omega(digits + 8);
            let lw = quad_log(&w, 4 * digits + 64).unwrap();
            assert!(
                lw.is_zero_to_half(2 * digits as i64),
                "log(omega) != 0 at {digits} digits: {}",
                describe_precision(&lw)
            );
        }
    }

    #[test]
    fn log_multiplicativity_on_principal_units() {
        // 20 deterministic pseudo-random principal units at precision 30.
        let prec = 30u32;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..20 {
            let a = 1 + 3 * (next() % 1_000_000) as i64;
            let b = 1 + 3 * (next() % 1_000_000) as i64;
            let x = q3(&rational(a), prec);
            let y = q3(&rational(b), prec);
            let terms = 2 * prec + 16;
            let lx = padic_log(&x, terms).unwrap();
            let ly = padic_log(&y, terms).unwrap();
            let lxy = padic_log(&x.mul(&y), terms).unwrap();
            let cert = lx
                .abs_precision()
                .min(ly.abs_precision())
                .min(lxy.abs_precision());
            assert!(cert >= prec as i64 - 2);
            assert!(lxy.congruent_to(&lx.add(&ly), cert), "a={a} b={b}");
        }
    }

    #[test]
    fn partial_sums_of_the_vanishing_series() {
        assert_eq!(lemma42_partial(1), rational(1));
        assert_eq!(lemma42_partial(2), rational(0));
        // nu_3 grows without bound along the partial sums.
        let v20 = arith::nu(3, &lemma42_partial(20)).expect_finite();
        assert!(v20 >= 17, "nu_3(partial(20)) = {v20}");
    }

    #[test]
    fn closed_form_routes_agree_and_vanish() {
        assert_eq!(lemma42_closed_form_check(5, 40), Ok(true));
        assert_eq!(lemma42_closed_form_check(20, 80), Ok(true));
    }

    #[test]
    fn closed_form_reports_precision_infeasibility() {
        assert!(matches!(
            lemma42_closed_form_check(20, 6),
            Err(PadicError::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn series_route_matches_embedded_rational_partials() {
        for k in [5u32, 12, 30] {
            let series = arctan_series_quad(k, 40);
            let exact = lemma42_partial(k);
            let embedded = QuadExt::new(q3(&exact, 60), Padic::zero(3, 60));
            let h = series.abs_precision_half().min(embedded.abs_precision_half());
            assert!(h >= 2 * k as i64 - 8);
            assert!(series.congruent_to_half(&embedded, h), "k={k}");
        }
    }
}
