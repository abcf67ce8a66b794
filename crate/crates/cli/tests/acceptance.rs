//! Acceptance suite: one test per published criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance here is exact: valuations and residues either match or
//! they do not. Time budgets are asserted where stated, with wide margins.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use serde_json::Value;
use triadic_core::claim::Mode;
use triadic_core::padic;
use triadic_core::theorems;

fn triadic() -> Command {
    Command::new(env!("CARGO_BIN_EXE_triadic"))
}

fn run_verify(args: &[&str], out: &Path) -> Value {
    let status = triadic().args(["verify"]).args(args).arg("--out").arg(out).status().unwrap();
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(
        status.success(),
        report["summary"]["failed"] == 0,
        "exit status must mirror the failure count"
    );
    report
}

fn assert_all_pass(report: &Value, what: &str) {
    let failed = report["summary"]["failed"].as_u64().unwrap();
    assert_eq!(
        failed, 0,
        "{what}: {} failures, first: {}",
        failed, report["failures"][0]
    );
}

fn pass_line(number: u32, name: &str, started: Instant) {
    println!(
        "criterion {number:2} ({name}): PASS in {:.2}s",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_01_central_sum_valuation_formula() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let report = run_verify(
        &["--claim", "ssz", "--n-max", "5000", "--mode", "exact"],
        &dir.path().join("ssz.json"),
    );
    assert_all_pass(&report, "ssz");
    assert_eq!(report["summary"]["total"], 5000);
    assert!(started.elapsed().as_secs() < 30, "budget: 30 s");
    pass_line(1, "central-sum valuation formula, n <= 5000, exact", started);
}

#[test]
fn criterion_02_scaled_and_alternating_bounds_fast_mode() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    for claim in ["scc1", "scc3"] {
        let report = run_verify(
            &[
                "--claim", claim, "--n-max", "1000", "--m", "4..100:3", "--mode", "fast",
                "--seed", "0",
            ],
            &dir.path().join(format!("{claim}.json")),
        );
        assert_all_pass(&report, claim);
        assert_eq!(report["summary"]["total"], 33 * 1000);
        let both = report["summary"]["modes"]["BOTH"].as_u64().unwrap_or(0);
        assert!(
            both >= 150,
            "{claim}: expected a ~1% BOTH cross-check sample, got {both}"
        );
    }
    assert!(started.elapsed().as_secs() < 300, "budget: 5 min");
    pass_line(2, "valuation bounds for m = 1 (mod 3), n <= 1000, fast + 1% BOTH", started);
}

#[test]
fn criterion_03_scaled_residue_congruence() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let report = run_verify(
        &["--claim", "scc2", "--m", "4,7,10,28,82", "--a", "1..6", "--mode", "auto"],
        &dir.path().join("scc2.json"),
    );
    assert_all_pass(&report, "scc2");
    // all valid a <= 6 for the five m values: 6 + 6 + 5 + 4 + 3
    assert_eq!(report["summary"]["total"], 24);
    assert_eq!(report["skipped_domain"].as_array().unwrap().len(), 6);
    // the m = 4 anchor: residue 1 mod 3
    let anchor = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["params"]["m"] == 4 && r["params"]["a"] == 2)
        .unwrap();
    assert_eq!(anchor["measured"]["value"], "1");
    assert_eq!(anchor["measured"]["modulus"], "3");
    pass_line(3, "scaled-sum residue equals (m-1)/3, all valid a <= 6", started);
}

#[test]
fn criterion_04_alternating_residue_congruence() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let report = run_verify(
        &["--claim", "scc4", "--m", "4,7,10,28,82", "--a", "2..6", "--mode", "auto"],
        &dir.path().join("scc4.json"),
    );
    assert_all_pass(&report, "scc4");
    // valid a: 5 + 5 + 4 + 3 + 2
    assert_eq!(report["summary"]["total"], 19);
    // the m = 4 anchor: residue -1 = 2 mod 3
    let anchor = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["params"]["m"] == 4 && r["params"]["a"] == 2)
        .unwrap();
    assert_eq!(anchor["measured"]["value"], "2");
    assert_eq!(anchor["measured"]["modulus"], "3");
    pass_line(4, "alternating-sum residue equals -(m-1)/3, valid a <= 6", started);
}

#[test]
fn criterion_05_power_of_three_alternating_residue() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let report = run_verify(
        &["--claim", "scc5", "--a", "2..7", "--mode", "auto"],
        &dir.path().join("scc5.json"),
    );
    assert_all_pass(&report, "scc5");
    assert_eq!(report["summary"]["total"], 6);
    // a = 7 (2187 terms) runs on the truncated path under the auto policy
    let a7 = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["params"]["a"] == 7)
        .unwrap();
    assert_eq!(a7["mode"], "TRUNCATED");
    assert!(started.elapsed().as_secs() < 10, "budget: 10 s");
    pass_line(5, "residue -3^(a-1) mod 3^a for a in 2..=7", started);
}

#[test]
fn criterion_06_alternating_integer_sum_bound() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let report = run_verify(
        &["--claim", "nk2kk", "--n-max", "2000", "--mode", "auto", "--seed", "0"],
        &dir.path().join("nk2kk.json"),
    );
    assert_all_pass(&report, "nk2kk");
    assert_eq!(report["summary"]["total"], 2000);
    pass_line(6, "alternating central-sum valuation bound, n <= 2000", started);
}

#[test]
fn criterion_07_exact_identity_suite() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("identities.json");
    let status = triadic()
        .args(["identities", "--n-max", "150", "--m=-10..20", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_all_pass(&report, "identities");
    let records = report["records"].as_array().unwrap();
    let count = |fact: &str| records.iter().filter(|r| r["fact"] == fact).count();
    // 30 m values (0 excluded), n <= 150 for the three m x n identities
    assert_eq!(count("sun_tauraso"), 30 * 150);
    assert_eq!(count("st2"), 30 * 150);
    assert_eq!(count("sun32"), 30 * 150);
    assert_eq!(count("rewrite"), 150);
    // convolution: 8 default x values, n <= 60
    assert_eq!(count("convolution"), 8 * 61);
    assert_eq!(count("x1"), 300);
    assert_eq!(count("quarter_power"), 200);
    assert!(started.elapsed().as_secs() < 120, "budget: 2 min");
    pass_line(7, "identity suite exact on the full grids", started);
}

#[test]
fn criterion_08_auxiliary_mod3_facts() {
    let started = Instant::now();
    // f(a) = -1 mod 3 for a in 2..=5, with m-independence across choices
    for a in 2..=5u32 {
        for m in [7i64, 10, 13] {
            let (_, residue) = triadic_core::sums::f_of_a(a, m).unwrap();
            assert_eq!(residue, 2, "f({a}) with m={m}");
        }
    }
    // alternating rows and truncated row sums for a <= 6
    for a in 1..=6u32 {
        assert!(triadic_core::sums::check_row_facts(a), "row facts a={a}");
    }
    // block-sum congruence under the documented range convention
    for k in 1..=500u64 {
        assert!(triadic_core::sums::check_triple_block(k), "triple block k={k}");
    }
    pass_line(8, "f(a), alternating rows, and block sums mod 3", started);
}

#[test]
fn criterion_09_extension_field_machinery() {
    let started = Instant::now();
    assert!(padic::cube_root_check(40), "omega^3 = 1 at 40 digits");
    let omega = padic::omega(48);
    let log_omega = padic::quad_log(&omega, 224).unwrap();
    assert!(
        log_omega.is_zero_to_half(80),
        "log(omega) must vanish to 40 digits: {}",
        padic::describe_precision(&log_omega)
    );
    // Partial sums of sum (-3)^k/(2k+1): the tail bound (confirmed term by
    // term in the core test suite) forces nu_3 >= K - ceil(log_3(2K+1)).
    for k in 3..=80u32 {
        let r = theorems::check_lemma42_partial(k);
        assert!(r.pass, "partial valuation bound at K={k}: {r:?}");
    }
    assert_eq!(padic::lemma42_closed_form_check(20, 90), Ok(true));
    pass_line(9, "cube root, vanishing log, partial-sum valuations, route agreement", started);
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn sampled(seed: u64, key: &[i64]) -> bool {
    let mut h = splitmix64(seed);
    for &v in key {
        h = splitmix64(h ^ v as u64);
    }
    h % 100 == 0
}

#[test]
fn criterion_10_exact_and_truncated_paths_agree_on_seeded_sample() {
    let started = Instant::now();
    let seed = 2026u64;
    let mut compared = 0u64;

    // 1% of the scc1/scc3 grids
    for m in (4..=100i64).step_by(3) {
        for n in 1..=1000u64 {
            if sampled(seed ^ 1, &[m, n as i64]) {
                let r = theorems::check_scc1(m, n, Mode::Both).unwrap();
                assert!(r.pass, "scc1 m={m} n={n}: {r:?}");
                compared += 1;
            }
            if sampled(seed ^ 3, &[m, n as i64]) {
                let r = theorems::check_scc3(m, n, Mode::Both).unwrap();
                assert!(r.pass, "scc3 m={m} n={n}: {r:?}");
                compared += 1;
            }
        }
    }
    // every residue claim tuple (the grids are small)
    for (m, t) in [(4i64, 1i64), (7, 1), (10, 2), (28, 3), (82, 4)] {
        for a in t.max(1)..=6 {
            let r = theorems::check_scc2(m, a, Mode::Both).unwrap();
            assert!(r.pass, "scc2 m={m} a={a}: {r:?}");
            compared += 1;
        }
        for a in (t + 1)..=6 {
            let r = theorems::check_scc4(m, a, Mode::Both).unwrap();
            assert!(r.pass, "scc4 m={m} a={a}: {r:?}");
            compared += 1;
        }
    }
    for a in 2..=7i64 {
        let r = theorems::check_scc5(a, Mode::Both).unwrap();
        assert!(r.pass, "scc5 a={a}: {r:?}");
        compared += 1;
    }
    // 1% of the nk2kk range
    for n in 1..=2000u64 {
        if sampled(seed ^ 6, &[n as i64]) {
            let r = theorems::check_nk2kk(n, Mode::Both);
            assert!(r.pass, "nk2kk n={n}: {r:?}");
            compared += 1;
        }
    }
    assert!(compared >= 500, "sample unexpectedly small: {compared}");
    println!("criterion 10: compared {compared} tuples across both paths");
    pass_line(10, "exact and truncated paths agree on the seeded sample", started);
}

#[test]
fn consistency_central_sum_valuation_at_powers_of_three() {
    // The valuation formula forces nu_3(central_sum(3^a)) = 2a, since the
    // central binomial at 3^a has no base-3 carries.
    let started = Instant::now();
    for a in 1..=7u32 {
        let n = 3u64.pow(a);
        assert_eq!(
            triadic_core::arith::nu_binomial(3, 2 * n, n as i64),
            triadic_core::arith::Valuation::Finite(0)
        );
        let r = theorems::check_ssz(n, theorems::auto_mode_for_n(n));
        assert!(r.pass);
        assert_eq!(
            r.measured,
            triadic_core::claim::Measured::Valuation(triadic_core::arith::Valuation::Finite(
                2 * a as i64
            ))
        );
    }
    pass_line(0, "consistency: central-sum valuation 2a at n = 3^a", started);
}
