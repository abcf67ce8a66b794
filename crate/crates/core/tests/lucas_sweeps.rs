//! Full-range agreement between the Lucas recurrence, the closed form, and
//! the periodic fast path, plus the Lemma-2.1-style congruence sweep.

use num_bigint::BigInt;
use triadic_core::lucas::{
    check_lemma21, lucas_u, lucas_u_closed, sweep_lemma21, u_neg11_fast, LucasParams,
};

#[test]
fn closed_form_equals_recurrence_everywhere() {
    for m in -20i64..=40 {
        let params = LucasParams::new(m - 2, 1);
        for n in 1..=120u64 {
            assert_eq!(lucas_u_closed(m, n), lucas_u(params, n), "m={m} n={n}");
        }
    }
}

#[test]
fn periodic_fast_path_matches_recurrence_to_ten_thousand() {
    let params = LucasParams::new(-1, 1);
    let mut prev = BigInt::from(0);
    let mut cur = BigInt::from(1);
    assert_eq!(u_neg11_fast(0), 0);
    for n in 1..=10_000u64 {
        assert_eq!(cur, BigInt::from(u_neg11_fast(n)), "n={n}");
        // period 3
        assert_eq!(u_neg11_fast(n + 3), u_neg11_fast(n));
        let next = -&cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    // spot check against the O(n) recurrence entry point as well
    assert_eq!(lucas_u(params, 9999), BigInt::from(u_neg11_fast(9999)));
}

#[test]
fn lemma21_congruences_hold_across_the_sweep_range() {
    let mut checked = 0usize;
    for m in (4..=100i64).step_by(3) {
        for r in sweep_lemma21(m, 300).unwrap() {
            assert!(
                r.pass,
                "m={m} n={:?}: {:?} vs {:?}",
                r.param("n"),
                r.measured,
                r.required
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 33 * 300);
}

#[test]
fn lemma21_single_matches_sweep() {
    let swept = sweep_lemma21(13, 50).unwrap();
    for r in &swept {
        let n = r.param("n").unwrap() as u64;
        assert_eq!(*r, check_lemma21(13, n).unwrap());
    }
}
