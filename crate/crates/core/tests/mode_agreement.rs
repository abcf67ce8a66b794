//! The exact path and the truncated path must measure identical values
//! wherever both run; `Both` mode enforces that per claim.

use proptest::prelude::*;
use triadic_core::claim::Mode;
use triadic_core::theorems::{
    check_nk2kk, check_scc1, check_scc2, check_scc3, check_scc4, check_scc5, check_ssz,
    check_sun12,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ssz_and_nk2kk_agree_across_modes(n in 1u64..800) {
        let r = check_ssz(n, Mode::Both);
        prop_assert!(r.pass, "ssz n={n}: {:?}", r);
        let r = check_nk2kk(n, Mode::Both);
        prop_assert!(r.pass, "nk2kk n={n}: {:?}", r);
    }

    #[test]
    fn scc_bounds_agree_across_modes(
        m_index in 0usize..8,
        n in 1u64..600,
    ) {
        let m = [4i64, 7, 10, 13, 28, 82, 91, 100][m_index];
        let r = check_scc1(m, n, Mode::Both).unwrap();
        prop_assert!(r.pass, "scc1 m={m} n={n}: {:?}", r);
        let r = check_scc3(m, n, Mode::Both).unwrap();
        prop_assert!(r.pass, "scc3 m={m} n={n}: {:?}", r);
    }

    #[test]
    fn sun12_agrees_across_modes(
        m in -40i64..40,
        n in 1u64..300,
    ) {
        prop_assume!(triadic_core::theorems::largest_odd_prime_divisor(m - 4).is_some());
        for r in check_sun12(m, None, n, Mode::Both).unwrap() {
            prop_assert!(r.pass, "m={m} n={n}: {:?}", r);
        }
    }
}

#[test]
fn residue_claims_agree_across_modes() {
    for (m, a_max) in [(4i64, 5), (7, 5), (10, 5), (28, 5), (82, 5)] {
        let t = {
            let mut v = 0;
            let mut x = m - 1;
            while x % 3 == 0 {
                x /= 3;
                v += 1;
            }
            v
        };
        for a in t.max(1)..=a_max {
            let r = check_scc2(m, a, Mode::Both).unwrap();
            assert!(r.pass, "scc2 m={m} a={a}: {r:?}");
        }
        for a in (t + 1)..=a_max {
            let r = check_scc4(m, a, Mode::Both).unwrap();
            assert!(r.pass, "scc4 m={m} a={a}: {r:?}");
        }
    }
    for a in 2..=5i64 {
        assert!(check_scc5(a, Mode::Both).unwrap().pass, "scc5 a={a}");
    }
}
