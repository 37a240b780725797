//! Cross-checks between the formula implementations and the independent
//! oracle, plus the structural properties the formulas rely on.

use primeformula_core::formulas::{self, Strategy};
use primeformula_core::oracle;
use primeformula_core::wheel;
use proptest::prelude::*;

fn all_strategies() -> Vec<Strategy> {
    let mut s = vec![
        Strategy::NaiveFloorSum,
        Strategy::SqrtDivisor,
        Strategy::RecursivePi,
    ];
    for m in wheel::PRIMORIAL_MODULI {
        s.push(Strategy::Wheel(m));
    }
    s
}

proptest! {
    #[test]
    fn divisor_counts_agree_with_oracle(n in 1u64..=50_000) {
        let expected = oracle::divisor_count_oracle(n).unwrap();
        prop_assert_eq!(formulas::divisor_count_naive(n).unwrap(), expected);
        prop_assert_eq!(formulas::divisor_count_sqrt(n).unwrap(), expected);
    }

    #[test]
    fn divisor_count_bounds(n in 2u64..=100_000) {
        let d = formulas::divisor_count_sqrt(n).unwrap();
        prop_assert!(2 <= d && d <= n);
    }

    #[test]
    fn prime_char_matches_sieve(n in 1u64..=50_000) {
        let table = oracle::build_sieve(n).unwrap();
        for s in [Strategy::NaiveFloorSum, Strategy::SqrtDivisor] {
            let f = formulas::prime_char(n, s).unwrap();
            prop_assert_eq!(f, u64::from(table.is_prime(n)));
            prop_assert_eq!(f == 1, formulas::divisor_count_sqrt(n).unwrap() == 2 || n == 1);
        }
    }

    #[test]
    fn pi_matches_oracle_at_random_points(x in 0u64..=5_000) {
        let expected = oracle::pi_oracle(x).unwrap();
        for s in all_strategies() {
            prop_assert_eq!(formulas::pi_formula(x, s).unwrap(), expected);
        }
    }

    #[test]
    fn totient_product_formula_matches_gcd_count(m in 1u64..=3_000) {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        let brute = (1..=m).filter(|&r| gcd(r, m) == 1).count() as u64;
        prop_assert_eq!(wheel::totient(m).unwrap(), brute);
    }
}

#[test]
fn pi_equivalence_sweep() {
    let table = oracle::build_sieve(2_000).unwrap();
    let strategies = all_strategies();
    for x in 0..=2_000u64 {
        let expected = table.pi(x).unwrap();
        for &s in &strategies {
            assert_eq!(
                formulas::pi_formula(x, s).unwrap(),
                expected,
                "pi({x}) with {s:?}"
            );
        }
    }
}

#[test]
fn pi_monotone_step() {
    let mut prev = 0;
    for x in 2..=2_000u64 {
        let cur = formulas::pi_formula(x, Strategy::SqrtDivisor).unwrap();
        let step = formulas::prime_char(x, Strategy::SqrtDivisor).unwrap();
        assert_eq!(cur - prev, step, "step at x = {x}");
        prev = cur;
    }
}

#[test]
fn quotient_partitions_at_the_nth_prime() {
    // floor(pi(k)/n) is 0 below p_n and 1 from p_n up to the limit.
    let bound = formulas::search_bound(200).unwrap().limit;
    let table = oracle::build_sieve(bound).unwrap();
    for n in 2..=200u64 {
        let limit = formulas::search_bound(n).unwrap().limit;
        let p_n = table.nth_prime(n).unwrap();
        for k in 2..=limit {
            let q = table.pi(k).unwrap() / n;
            let expected = u64::from(k >= p_n);
            assert_eq!(q, expected, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn nth_prime_matches_oracle_all_strategies() {
    let table = oracle::build_sieve(10_000).unwrap();
    for n in 1..=300u64 {
        let expected = table.nth_prime(n).unwrap();
        for s in all_strategies() {
            let report = formulas::nth_prime_report(n, s).unwrap();
            assert_eq!(report.value, expected, "n = {n}, {s:?}");
            assert!(report.max_quotient <= 1);
        }
    }
}

#[test]
fn pi_and_nth_prime_round_trip() {
    let table = oracle::build_sieve(10_000).unwrap();
    for &p in table.primes() {
        let n = formulas::pi_formula(p, Strategy::SqrtDivisor).unwrap();
        assert_eq!(table.pi(p).unwrap(), n);
        assert_eq!(
            formulas::nth_prime_formula(n, Strategy::RecursivePi).unwrap(),
            p
        );
    }
}

#[test]
fn search_bound_exceeds_the_nth_prime() {
    for n in 2..=2_000u64 {
        let b = formulas::search_bound(n).unwrap();
        let p_n = oracle::nth_prime_oracle(n).unwrap();
        assert!(b.limit >= p_n, "n = {n}: limit {} < p_n {p_n}", b.limit);
    }
}

#[test]
fn wheel_candidates_never_skip_a_prime() {
    let table = oracle::build_sieve(10_000).unwrap();
    for m in wheel::PRIMORIAL_MODULI {
        let w = wheel::build_wheel(m).unwrap();
        let candidates: std::collections::HashSet<u64> = w.candidates(10_000).collect();
        for &p in table.primes() {
            assert!(candidates.contains(&p), "m = {m} skipped prime {p}");
        }
    }
}

#[test]
fn wheel_candidate_density_tracks_totient_ratio() {
    for m in wheel::PRIMORIAL_MODULI {
        let w = wheel::build_wheel(m).unwrap();
        let count = w.candidates(10_000).count() as f64;
        let predicted = wheel::totient(m).unwrap() as f64 / m as f64;
        let observed = count / 10_000.0;
        let rel = (observed - predicted).abs() / predicted;
        assert!(rel < 0.10, "m = {m}: observed {observed}, predicted {predicted}");
    }
}

#[test]
fn inequality_sweeps_are_clean() {
    let (eq8, eq9) = oracle::check_lemma1(500).unwrap();
    assert!(eq8.is_clean(), "lemma8 violations: {:?}", eq8.violations);
    assert!(eq9.is_clean(), "lemma9 violations: {:?}", eq9.violations);

    let (lower, upper) = oracle::check_rosser(500).unwrap();
    assert!(lower.is_clean(), "rosser lower: {:?}", lower.violations);
    assert!(upper.is_clean(), "rosser upper: {:?}", upper.violations);
}
