//! Exact and truncated p-adic arithmetic for certifying congruences of
//! central binomial sums.
//!
//! The crate has two arithmetic backends that check each other:
//!
//! * an exact path built on arbitrary-precision rationals ([`arith`]), and
//! * a fast truncated path built on unit-times-prime-power representations
//!   with explicit precision certificates ([`padic`]).
//!
//! On top of those sit evaluators for Lucas sequences ([`lucas`]), the
//! binomial-sum families and identities ([`sums`]), and one checkable
//! predicate per theorem-level congruence ([`theorems`]), each producing a
//! [`claim::ClaimResult`].
//!
//! The crate is `no_std` (with `alloc`); all IO, parallelism, and report
//! serialization live in the companion CLI crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod claim;
pub mod lucas;
pub mod padic;
pub mod sums;
pub mod theorems;

pub use arith::{Rational, Valuation};
pub use claim::{ClaimId, ClaimResult, DomainError, Measured, Mode, Required};
