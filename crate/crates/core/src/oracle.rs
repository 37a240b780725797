//! Independent ground truth: a classical sieve of Eratosthenes and direct
//! trial division, plus numeric checkers for the summation-bound
//! inequalities and the Rosser-Schoenfeld prime bounds.
//!
//! Nothing here may use [`crate::formulas`] or [`crate::wheel`]; the whole
//! point is that equivalence tests compare two code paths that share
//! nothing. The summation bound `2n ln n + 2` is recomputed locally.

use crate::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;

/// Largest sieve limit; 100 MB of odd/even flags at the cap.
pub const SIEVE_LIMIT_CAP: u64 = 100_000_000;

/// Largest prime index served by [`nth_prime_oracle`]; keeps `p_n` within
/// the sieve cap.
pub const NTH_ORACLE_CAP: u64 = 5_000_000;

const DIVISOR_SCAN_CAP: u64 = 1 << 32;

/// Sieve of Eratosthenes up to a limit, with the prime list and the
/// cumulative `pi` table filled in.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    is_prime: Vec<bool>,
    primes: Vec<u64>,
    cumulative_pi: Vec<u32>,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn is_prime(&self, k: u64) -> bool {
        k <= self.limit && self.is_prime[k as usize]
    }

    /// Ascending primes `<= limit`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `pi(x)` by table lookup; errors when `x` exceeds the sieved range.
    pub fn pi(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::Range {
                what: "pi lookup beyond sieve limit",
                value: x,
                cap: self.limit,
            });
        }
        Ok(self.cumulative_pi[x as usize] as u64)
    }

    /// The n-th prime (1-based) if the table holds at least `n` primes.
    pub fn nth_prime(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.primes.get(n as usize - 1).copied()
    }
}

/// Build a sieve table for `[0, limit]`.
pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    if limit > SIEVE_LIMIT_CAP {
        return Err(Error::Range {
            what: "sieve limit",
            value: limit,
            cap: SIEVE_LIMIT_CAP,
        });
    }
    let len = limit as usize + 1;
    let mut is_prime = vec![true; len];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2u64;
    while p * p <= limit {
        if is_prime[p as usize] {
            let mut multiple = p * p;
            while multiple <= limit {
                is_prime[multiple as usize] = false;
                multiple += p;
            }
        }
        p += 1;
    }

    let mut primes = Vec::new();
    let mut cumulative_pi = vec![0u32; len];
    let mut count = 0u32;
    for k in 0..len {
        if is_prime[k] {
            primes.push(k as u64);
            count += 1;
        }
        cumulative_pi[k] = count;
    }
    Ok(SieveTable {
        limit,
        is_prime,
        primes,
        cumulative_pi,
    })
}

/// `pi(x)` from a freshly built sieve.
pub fn pi_oracle(x: u64) -> Result<u64> {
    build_sieve(x)?.pi(x)
}

// First sieve size to try when looking for p_n; lands near p_n for n >= 6.
fn nth_prime_initial_limit(n: u64) -> u64 {
    if n < 6 {
        return 64;
    }
    let nf = n as f64;
    let guess = libm::ceil(nf * (libm::log(nf) + libm::log(libm::log(nf)))) as u64 + 16;
    guess.max(64)
}

/// The n-th prime (1-based), growing the sieve geometrically until it holds
/// at least `n` primes.
pub fn nth_prime_oracle(n: u64) -> Result<u64> {
    Ok(*sieve_with_at_least(n)?.primes().get(n as usize - 1).unwrap())
}

fn sieve_with_at_least(n: u64) -> Result<SieveTable> {
    if n == 0 {
        return Err(Error::Domain {
            what: "prime index must be >= 1",
            value: n,
        });
    }
    if n > NTH_ORACLE_CAP {
        return Err(Error::Range {
            what: "oracle prime index",
            value: n,
            cap: NTH_ORACLE_CAP,
        });
    }
    let mut limit = nth_prime_initial_limit(n);
    loop {
        let table = build_sieve(limit.min(SIEVE_LIMIT_CAP))?;
        if table.primes().len() as u64 >= n {
            return Ok(table);
        }
        limit *= 2;
    }
}

/// Divisor count by direct scan of every `i <= n`; deliberately naive and
/// independent of the sqrt pairing trick.
pub fn divisor_count_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain {
            what: "divisor count requires n >= 1",
            value: n,
        });
    }
    if n > DIVISOR_SCAN_CAP {
        return Err(Error::Range {
            what: "divisor scan input",
            value: n,
            cap: DIVISOR_SCAN_CAP,
        });
    }
    Ok((1..=n).filter(|i| n % i == 0).count() as u64)
}

/// Which inequality a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// `pi(2n ln n + 2) < 2n`.
    Lemma8,
    /// `p_n < 2n ln n + 2`.
    Lemma9,
    /// `p_n > n ln n` for all `n`.
    RosserLower,
    /// `p_n < n ln n + n (ln ln n - 1/2)` for `n > 20`.
    RosserUpper,
}

impl Inequality {
    pub fn label(&self) -> &'static str {
        match self {
            Inequality::Lemma8 => "lemma8",
            Inequality::Lemma9 => "lemma9",
            Inequality::RosserLower => "rosser_lower",
            Inequality::RosserUpper => "rosser_upper",
        }
    }
}

/// Result of sweeping one inequality over a range of prime indices.
///
/// `violations` is expected to stay empty. `near_boundary` lists indices
/// where a floating-point comparison came within 1e-9 of equality; double
/// rounding could mask a true boundary case there, so they are surfaced as
/// warnings without failing the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub name: Inequality,
    pub lo: u64,
    pub hi: u64,
    pub violations: Vec<u64>,
    pub near_boundary: Vec<u64>,
}

impl InequalityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

const BOUNDARY_EPS: f64 = 1e-9;

fn bound_raw(n: u64) -> f64 {
    2.0 * (n as f64) * libm::log(n as f64) + 2.0
}

/// Check `pi(2n ln n + 2) < 2n` and `p_n < 2n ln n + 2` for every
/// `n` in `[2, n_max]`.
pub fn check_lemma1(n_max: u64) -> Result<(InequalityReport, InequalityReport)> {
    if n_max < 2 {
        return Err(Error::Domain {
            what: "lemma sweep requires n_max >= 2",
            value: n_max,
        });
    }
    let sieve_to = libm::floor(bound_raw(n_max)) as u64;
    let table = build_sieve(sieve_to)?;

    let mut eq8 = InequalityReport {
        name: Inequality::Lemma8,
        lo: 2,
        hi: n_max,
        violations: Vec::new(),
        near_boundary: Vec::new(),
    };
    let mut eq9 = InequalityReport {
        name: Inequality::Lemma9,
        lo: 2,
        hi: n_max,
        violations: Vec::new(),
        near_boundary: Vec::new(),
    };

    for n in 2..=n_max {
        let raw = bound_raw(n);
        let limit = libm::floor(raw) as u64;
        if table.pi(limit)? >= 2 * n {
            eq8.violations.push(n);
        }
        let p_n = table.nth_prime(n).expect("sieve covers p_n") as f64;
        if !(p_n < raw) {
            eq9.violations.push(n);
        }
        if libm::fabs(raw - p_n) < BOUNDARY_EPS {
            eq9.near_boundary.push(n);
        }
    }
    Ok((eq8, eq9))
}

/// Check the Rosser-Schoenfeld bounds: `p_n > n ln n` over `[1, n_max]` and
/// `p_n < n ln n + n (ln ln n - 1/2)` over `[21, n_max]`.
pub fn check_rosser(n_max: u64) -> Result<(InequalityReport, InequalityReport)> {
    let table = sieve_with_at_least(n_max.max(1))?;

    let mut lower = InequalityReport {
        name: Inequality::RosserLower,
        lo: 1,
        hi: n_max,
        violations: Vec::new(),
        near_boundary: Vec::new(),
    };
    let upper_lo = 21;
    let mut upper = InequalityReport {
        name: Inequality::RosserUpper,
        lo: upper_lo,
        hi: n_max,
        violations: Vec::new(),
        near_boundary: Vec::new(),
    };

    for n in 1..=n_max {
        let nf = n as f64;
        let p_n = table.nth_prime(n).expect("sieve covers p_n") as f64;
        let lower_rhs = nf * libm::log(nf);
        if !(p_n > lower_rhs) {
            lower.violations.push(n);
        }
        if libm::fabs(p_n - lower_rhs) < BOUNDARY_EPS {
            lower.near_boundary.push(n);
        }
        if n >= upper_lo {
            let upper_rhs = nf * libm::log(nf) + nf * (libm::log(libm::log(nf)) - 0.5);
            if !(p_n < upper_rhs) {
                upper.violations.push(n);
            }
            if libm::fabs(upper_rhs - p_n) < BOUNDARY_EPS {
                upper.near_boundary.push(n);
            }
        }
    }
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_sieve_examples() {
        let t = build_sieve(10).unwrap();
        assert_eq!(t.primes(), &[2, 3, 5, 7]);

        let t = build_sieve(1).unwrap();
        assert!(t.primes().is_empty());

        let t = build_sieve(100).unwrap();
        assert_eq!(t.pi(100).unwrap(), 25);
    }

    #[test]
    fn sieve_internal_consistency() {
        let t = build_sieve(1000).unwrap();
        assert!(!t.is_prime(0) && !t.is_prime(1));
        assert!(t.primes().windows(2).all(|w| w[0] < w[1]));
        for k in 1..=1000u64 {
            let step = t.pi(k).unwrap() - t.pi(k - 1).unwrap();
            assert_eq!(step, u64::from(t.is_prime(k)));
        }
    }

    #[test]
    fn sieve_limit_cap_enforced() {
        assert!(matches!(
            build_sieve(SIEVE_LIMIT_CAP + 1),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn oracle_point_values() {
        assert_eq!(pi_oracle(2).unwrap(), 1);
        assert_eq!(nth_prime_oracle(20).unwrap(), 71);
        assert_eq!(divisor_count_oracle(36).unwrap(), 9);
        assert!(matches!(nth_prime_oracle(0), Err(Error::Domain { .. })));
        assert!(matches!(divisor_count_oracle(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn nth_prime_oracle_small_indices() {
        for (n, p) in [(1, 2), (2, 3), (3, 5), (4, 7), (5, 11), (6, 13), (100, 541)] {
            assert_eq!(nth_prime_oracle(n).unwrap(), p);
        }
    }

    #[test]
    fn pi_and_nth_prime_are_inverse() {
        let t = build_sieve(10_000).unwrap();
        for n in 1..=t.primes().len() as u64 {
            let p = t.nth_prime(n).unwrap();
            assert_eq!(t.pi(p).unwrap(), n);
        }
    }

    #[test]
    fn lemma1_small_sweeps() {
        let (eq8, eq9) = check_lemma1(20).unwrap();
        assert!(eq8.is_clean() && eq9.is_clean());
        assert!(eq9.near_boundary.is_empty());

        // n = 2: pi(4) = 2 < 4.
        let (eq8, _) = check_lemma1(2).unwrap();
        assert!(eq8.is_clean());

        assert!(matches!(check_lemma1(1), Err(Error::Domain { .. })));
    }

    #[test]
    fn rosser_point_checks() {
        // p_1 = 2 > 1 * ln 1 = 0.
        let (lower, _) = check_rosser(1).unwrap();
        assert!(lower.is_clean());

        // p_21 = 73 < 21 ln 21 + 21 (ln ln 21 - 1/2), right side near 76.9.
        let (lower, upper) = check_rosser(21).unwrap();
        assert!(lower.is_clean() && upper.is_clean());
        let rhs = 21.0 * (21f64).ln() + 21.0 * ((21f64).ln().ln() - 0.5);
        assert!((rhs - 76.9).abs() < 0.1);
    }
}
