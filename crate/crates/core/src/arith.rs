//! Arbitrary-precision integers and rationals, p-adic valuations, binomial
//! coefficients, and the rational congruence predicate everything else
//! builds on.
//!
//! All arithmetic in this module is exact; there is no floating point and
//! no rounding anywhere. Valuations are taken at odd primes only.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The ground-truth number type: an arbitrary-precision reduced fraction.
///
/// `num_rational::BigRational` already maintains the invariants we need
/// (stored reduced, denominator positive, exact field operations), so it is
/// used directly rather than wrapped.
pub type Rational = num_rational::BigRational;

/// A p-adic order: an integer for nonzero inputs, infinity for zero.
///
/// `Infinity` is maximal in comparisons and absorbing in addition, so
/// `nu(p, x * y) == nu(p, x) + nu(p, y)` holds with zeros included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinity)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }

    /// Finite value, panicking on infinity.
    pub fn expect_finite(self) -> i64 {
        self.finite().expect("valuation is infinite")
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, Valuation::Finite(v) if v == other)
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        match self {
            Valuation::Finite(v) => v.partial_cmp(other),
            Valuation::Infinity => Some(Ordering::Greater),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "infinity"),
        }
    }
}

/// Deterministic primality by trial division; the primes in play here are
/// tiny (odd primes dividing m - 4), so nothing fancier is warranted.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn assert_odd_prime(p: u64) {
    assert!(is_odd_prime(p), "p = {p} is not an odd prime");
}

/// p-adic order of a nonzero integer.
fn nu_bigint(p: u64, n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut cur = n.abs();
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

/// p-adic order of a rational, extended by `nu(p, a/b) = nu(p, a) - nu(p, b)`
/// and `nu(p, 0) = Infinity`.
///
/// Panics if `p` is not an odd prime; the claims in scope are all at odd
/// primes and p = 2 is deliberately unsupported.
pub fn nu(p: u64, x: &Rational) -> Valuation {
    assert_odd_prime(p);
    if x.is_zero() {
        return Valuation::Infinity;
    }
    Valuation::Finite(nu_bigint(p, x.numer()) - nu_bigint(p, x.denom()))
}

/// `nu` for integers, avoiding a rational wrapper in hot paths.
pub fn nu_int(p: u64, n: &BigInt) -> Valuation {
    assert_odd_prime(p);
    if n.is_zero() {
        return Valuation::Infinity;
    }
    Valuation::Finite(nu_bigint(p, n))
}

/// Base-p digit sum.
fn digit_sum(p: u64, mut n: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// `nu(p, n!)` by Legendre's formula `(n - s_p(n)) / (p - 1)`, never
/// materializing the factorial.
pub fn nu_factorial(p: u64, n: u64) -> i64 {
    assert_odd_prime(p);
    ((n - digit_sum(p, n)) / (p - 1)) as i64
}

/// `nu(p, binomial(n, k))` by Kummer's theorem: the number of carries when
/// adding `k` and `n - k` in base p. Returns `Infinity` for `k` outside
/// `[0, n]`, where the binomial coefficient vanishes.
pub fn nu_binomial(p: u64, n: u64, k: i64) -> Valuation {
    assert_odd_prime(p);
    if k < 0 || k as u64 > n {
        return Valuation::Infinity;
    }
    let mut a = k as u64;
    let mut b = n - k as u64;
    let mut carry = 0u64;
    let mut carries = 0i64;
    while a > 0 || b > 0 || carry > 0 {
        let d = a % p + b % p + carry;
        carry = d / p;
        carries += carry as i64;
        a /= p;
        b /= p;
    }
    Valuation::Finite(carries)
}

/// Exact binomial coefficient with integer upper index, by the falling
/// factorial: `binomial(n, k) = n (n-1) ... (n-k+1) / k!`. Negative upper
/// indices are allowed and no reflection identity is applied, so there is
/// exactly one convention in play.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i as i64);
        // a product of i+1 consecutive integers is divisible by (i+1)!
        let (q, r) = acc.div_rem(&BigInt::from(i + 1));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// Generalized binomial coefficient `alpha (alpha-1) ... (alpha-k+1) / k!`
/// for rational `alpha`.
pub fn generalized_binomial(alpha: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        let factor = alpha - Rational::from(BigInt::from(i));
        acc = acc * factor / Rational::from(BigInt::from(i + 1));
    }
    acc
}

/// Rational congruence `a = b (mod p^t)`, defined as `nu(p, a - b) >= t`.
///
/// This is meaningful for rationals whose denominators are divisible by p,
/// and for negative `t`, where it degenerates into a plain valuation bound.
pub fn congruent_mod_power(p: u64, t: i64, a: &Rational, b: &Rational) -> bool {
    nu(p, &(a - b)) >= t
}

/// Residue of a p-integral rational modulo `p^t`, as an integer in
/// `[0, p^t)`. Returns `None` when `nu(p, x) < 0`, where no residue exists.
pub fn residue_mod_power(p: u64, t: u32, x: &Rational) -> Option<BigUint> {
    assert_odd_prime(p);
    let modulus = BigInt::from(p).pow(t);
    if x.denom().mod_floor(&BigInt::from(p)).is_zero() {
        return None;
    }
    let num = x.numer().mod_floor(&modulus);
    let den = x.denom().mod_floor(&modulus);
    let inv = mod_inverse(&den, &modulus).expect("denominator is a unit mod p^t");
    Some((num * inv).mod_floor(&modulus).to_biguint().unwrap())
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    if g.gcd.is_one() {
        Some(g.x.mod_floor(m))
    } else {
        None
    }
}

/// `p^e` as a positive big integer.
pub fn pow_u(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

/// Rational from an integer pair, `d != 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rational(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Incremental central binomial coefficients `binomial(2k, k)` for
/// `k = 0, 1, 2, ...`, via the exact ratio
/// `binomial(2(k+1), k+1) = binomial(2k, k) * 2(2k+1) / (k+1)`.
pub struct CentralBinomials {
    k: u64,
    value: BigInt,
}

impl CentralBinomials {
    pub fn new() -> Self {
        CentralBinomials { k: 0, value: BigInt::one() }
    }

    /// Central binomials `binomial(2k, k)` for `k = 0..=k_max` as a table.
    pub fn table(k_max: u64) -> Vec<BigInt> {
        let mut it = CentralBinomials::new();
        let mut out = Vec::with_capacity(k_max as usize + 1);
        for _ in 0..=k_max {
            out.push(it.next_value());
        }
        out
    }

    /// Returns `binomial(2k, k)` for the current k, then advances.
    pub fn next_value(&mut self) -> BigInt {
        let current = self.value.clone();
        let k = self.k;
        self.value *= BigInt::from(2 * (2 * k + 1));
        let (q, r) = self.value.div_rem(&BigInt::from(k + 1));
        debug_assert!(r.is_zero(), "central binomial ratio must divide exactly");
        self.value = q;
        self.k += 1;
        current
    }
}

impl Default for CentralBinomials {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for CentralBinomials {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        Some(self.next_value())
    }
}

/// Incremental row of `binomial(n, l)` for `l = 0, 1, ...` at fixed integer
/// upper index `n`, via `binomial(n, l+1) = binomial(n, l) * (n - l) / (l + 1)`.
pub struct BinomialRow {
    n: i64,
    l: u64,
    value: BigInt,
}

impl BinomialRow {
    pub fn new(n: i64) -> Self {
        BinomialRow { n, l: 0, value: BigInt::one() }
    }

    /// Returns `binomial(n, l)` for the current l, then advances.
    pub fn next_value(&mut self) -> BigInt {
        let current = self.value.clone();
        self.value *= BigInt::from(self.n - self.l as i64);
        let (q, r) = self.value.div_rem(&BigInt::from(self.l + 1));
        debug_assert!(r.is_zero());
        self.value = q;
        self.l += 1;
        current
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_powers_of_p() {
        assert_eq!(nu(3, &rational(9)), Valuation::Finite(2));
        assert_eq!(nu(3, &rational(1)), Valuation::Finite(0));
        assert_eq!(nu(5, &rational(250)), Valuation::Finite(3));
    }

    #[test]
    fn nu_zero_is_infinite() {
        assert_eq!(nu(3, &rational(0)), Valuation::Infinity);
        assert!(nu(3, &rational(0)) > 1_000_000);
    }

    #[test]
    fn nu_of_rational_subtracts_denominator_order() {
        // 20/27 = 2^2 * 5 / 3^3
        assert_eq!(nu(3, &ratio(20, 27)), Valuation::Finite(-3));
    }

    #[test]
    #[should_panic(expected = "not an odd prime")]
    fn nu_rejects_even_p() {
        nu(2, &rational(4));
    }

    #[test]
    #[should_panic(expected = "not an odd prime")]
    fn nu_rejects_composite_p() {
        nu(9, &rational(4));
    }

    #[test]
    fn factorial_valuations() {
        assert_eq!(nu_factorial(3, 0), 0);
        // 9! = 362880 = 3^4 * 4480
        assert_eq!(nu_factorial(3, 9), 4);
        // digit sum of 27 in base 3 is 1
        assert_eq!(nu_factorial(3, 27), 13);
    }

    #[test]
    fn binomial_valuations_by_kummer() {
        // binomial(6, 3) = 20, coprime to 3
        assert_eq!(nu_binomial(3, 6, 3), Valuation::Finite(0));
        // adding 27 + 27 in base 3 carries zero times
        assert_eq!(nu_binomial(3, 54, 27), Valuation::Finite(0));
        assert_eq!(nu_binomial(3, 4, 7), Valuation::Infinity);
        assert_eq!(nu_binomial(3, 4, -1), Valuation::Infinity);
    }

    #[test]
    fn kummer_matches_legendre() {
        for p in [3u64, 5, 7] {
            for n in 0..=500u64 {
                for k in (0..=n).step_by(7) {
                    let kummer = nu_binomial(p, n, k as i64).expect_finite();
                    let legendre =
                        nu_factorial(p, n) - nu_factorial(p, k) - nu_factorial(p, n - k);
                    assert_eq!(kummer, legendre, "p={p} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(-7, 0), BigInt::one());
        // (-1)(-2)/2 = 1
        assert_eq!(binomial(-1, 2), BigInt::one());
        assert_eq!(binomial(-3, 3), BigInt::from(-10));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn binomial_pascal_recurrence() {
        for n in 1..=200i64 {
            for k in 1..=n as u64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn generalized_binomial_examples() {
        let neg_half = ratio(-1, 2);
        assert_eq!(generalized_binomial(&neg_half, 1), ratio(-1, 2));
        assert_eq!(generalized_binomial(&neg_half, 2), ratio(3, 8));
    }

    #[test]
    fn generalized_binomial_central_identity() {
        // binomial(-1/2, k) * (-4)^k = binomial(2k, k)
        let neg_half = ratio(-1, 2);
        let mut central = CentralBinomials::new();
        for k in 0..=100u64 {
            let lhs = generalized_binomial(&neg_half, k)
                * Rational::from(BigInt::from(-4).pow(k as u32));
            assert_eq!(lhs, Rational::from(central.next_value()), "k={k}");
        }
    }

    #[test]
    fn congruence_examples() {
        assert!(congruent_mod_power(3, 2, &rational(10), &rational(1)));
        // nu_3(1/3 - 4/3) = nu_3(-1) = 0
        assert!(!congruent_mod_power(3, 1, &ratio(1, 3), &ratio(4, 3)));
        assert!(congruent_mod_power(3, 0, &ratio(1, 3), &ratio(4, 3)));
        assert!(congruent_mod_power(3, 1_000_000, &ratio(7, 5), &ratio(7, 5)));
    }

    #[test]
    fn residues_of_rationals() {
        // 48620 / 131072 mod 3: 2 * inv(2) * ... = 1
        let x = ratio(48620, 131072);
        assert_eq!(residue_mod_power(3, 1, &x), Some(BigUint::from(1u32)));
        assert_eq!(residue_mod_power(3, 2, &ratio(1, 3)), None);
        assert_eq!(
            residue_mod_power(3, 3, &ratio(-1, 1)),
            Some(BigUint::from(26u32))
        );
    }

    #[test]
    fn central_binomials_match_direct_binomials() {
        let table = CentralBinomials::table(60);
        for (k, value) in table.iter().enumerate() {
            assert_eq!(*value, binomial(2 * k as i64, k as u64));
        }
    }

    #[test]
    fn binomial_row_matches_direct_binomials() {
        let mut row = BinomialRow::new(17);
        for l in 0..=20u64 {
            assert_eq!(row.next_value(), binomial(17, l));
        }
        let mut row = BinomialRow::new(-5);
        for l in 0..=10u64 {
            assert_eq!(row.next_value(), binomial(-5, l));
        }
    }

    #[test]
    fn valuation_ordering_and_addition() {
        assert!(Valuation::Infinity > Valuation::Finite(i64::MAX));
        assert!(Valuation::Finite(-3) < Valuation::Finite(0));
        assert_eq!(
            Valuation::Infinity + Valuation::Finite(5),
            Valuation::Infinity
        );
        assert_eq!(
            Valuation::Finite(2) + Valuation::Finite(-7),
            Valuation::Finite(-5)
        );
    }
}
