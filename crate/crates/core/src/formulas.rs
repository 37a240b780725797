//! The closed-form floor-function expressions: divisor count `d(n)`, prime
//! characteristic function `F(n)`, `pi(x)` as a double sum, and the n-th
//! prime as `2 + sum_k (1 - floor(pi(k)/n))` with summation limit
//! `floor(2n ln n + 2)`.
//!
//! Every operation is a pure function over 64-bit unsigned inputs. The
//! refinements (sqrt divisor bound, recursive pi accumulator, wheel
//! candidate pruning) change only how much work is done, never the value.

use crate::{wheel, Error, Result};
use alloc::vec;

/// Hard input cap for the divisor-count routines.
pub const DIVISOR_INPUT_CAP: u64 = 1 << 32;

/// Largest prime index accepted by [`search_bound`]; keeps the limit well
/// inside 64 bits and within bench scale.
pub const SEARCH_BOUND_MAX_INDEX: u64 = 10_000_000;

/// Selects which formula variant computes a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// The formulas exactly as written: `d(n)` summed over all `i <= n`.
    NaiveFloorSum,
    /// Divisor candidates only up to `sqrt(n)`, counting divisor pairs.
    SqrtDivisor,
    /// Like [`Strategy::SqrtDivisor`], but `pi(k)` is accumulated as
    /// `pi(k) = pi(k-1) + F(k)` over a precomputed table of `F`.
    RecursivePi,
    /// Summation restricted to candidates coprime to the primorial modulus
    /// (plus its base primes); `d` evaluated with the sqrt bound.
    Wheel(u64),
}

impl Strategy {
    /// Wheel strategy with an eagerly validated modulus.
    pub fn wheel(modulus: u64) -> Result<Strategy> {
        if wheel::PRIMORIAL_MODULI.contains(&modulus) {
            Ok(Strategy::Wheel(modulus))
        } else {
            Err(Error::BadModulus { value: modulus })
        }
    }

    /// Short machine-readable name, used by the CLI and CSV output.
    pub fn label(&self) -> &'static str {
        match self {
            Strategy::NaiveFloorSum => "naive",
            Strategy::SqrtDivisor => "sqrt",
            Strategy::RecursivePi => "recursive",
            Strategy::Wheel(_) => "wheel",
        }
    }
}

/// Per-strategy input caps. The naive variant is quadratic in `x` and gets a
/// much lower default; callers may raise any cap explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub pi_naive: u64,
    pub pi: u64,
    pub nth_naive: u64,
    pub nth: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pi_naive: 1_000_000,
            pi: 100_000_000,
            nth_naive: 50_000,
            nth: 1_000_000,
        }
    }
}

impl Caps {
    pub fn pi_cap(&self, strategy: Strategy) -> u64 {
        match strategy {
            Strategy::NaiveFloorSum => self.pi_naive,
            _ => self.pi,
        }
    }

    pub fn nth_cap(&self, strategy: Strategy) -> u64 {
        match strategy {
            Strategy::NaiveFloorSum => self.nth_naive,
            _ => self.nth,
        }
    }
}

/// The summation limit `floor(2n ln n + 2)` together with the raw
/// double-precision value it was floored from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBound {
    pub n: u64,
    pub raw: f64,
    pub limit: u64,
}

/// Outcome of an n-th prime evaluation, including the largest quotient
/// `floor(pi(k)/n)` observed (always 0 or 1 when the bound's slack holds).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NthPrimeReport {
    pub value: u64,
    pub limit: u64,
    pub pi_at_limit: u64,
    pub max_quotient: u64,
}

fn check_divisor_input(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            what: "divisor count requires n >= 1",
            value: n,
        });
    }
    if n > DIVISOR_INPUT_CAP {
        return Err(Error::Range {
            what: "divisor count input",
            value: n,
            cap: DIVISOR_INPUT_CAP,
        });
    }
    Ok(())
}

// Unchecked kernels; callers guarantee n >= 1.
fn d_naive(n: u64) -> u64 {
    let mut count = 0;
    for i in 1..=n {
        count += n / i - (n - 1) / i;
    }
    count
}

fn d_sqrt(n: u64) -> u64 {
    let root = n.isqrt();
    let mut count = 0;
    for i in 1..=root {
        if n % i == 0 {
            count += 2;
        }
    }
    if root * root == n {
        count -= 1;
    }
    count
}

/// Number of divisors of `n` as the full floor sum
/// `sum_{i=1}^{n} (floor(n/i) - floor((n-1)/i))`; each term is 1 exactly
/// when `i` divides `n`.
pub fn divisor_count_naive(n: u64) -> Result<u64> {
    check_divisor_input(n)?;
    Ok(d_naive(n))
}

/// Number of divisors of `n`, counting the pair `{i, n/i}` for each divisor
/// `i <= sqrt(n)`. Uses the integer square root, never floating point, so
/// perfect squares are handled exactly.
pub fn divisor_count_sqrt(n: u64) -> Result<u64> {
    check_divisor_input(n)?;
    Ok(d_sqrt(n))
}

fn d_for(strategy: Strategy, n: u64) -> u64 {
    match strategy {
        Strategy::NaiveFloorSum => d_naive(n),
        _ => d_sqrt(n),
    }
}

/// `F(n) = 1 + floor((2 - d(n)) / n)` for `n > 1`, with mathematical floor
/// (round toward minus infinity; `2 - d(n) <= 0` so truncation would be
/// wrong). Returns 1 exactly when `n` is prime; `F(1) = 0` by definition.
pub fn prime_char(n: u64, strategy: Strategy) -> Result<u64> {
    check_divisor_input(n)?;
    if n == 1 {
        return Ok(0);
    }
    Ok(char_from_divisors(n, d_for(strategy, n)))
}

// d(n) <= n <= 2^32 so the i64 conversion never overflows.
fn char_from_divisors(n: u64, d: u64) -> u64 {
    debug_assert!(n > 1);
    let q = (2 - d as i64).div_euclid(n as i64);
    (1 + q) as u64
}

fn pi_range_error(strategy: Strategy, x: u64, cap: u64) -> Error {
    let what = match strategy {
        Strategy::NaiveFloorSum => "pi(x) with naive strategy",
        Strategy::SqrtDivisor => "pi(x) with sqrt strategy",
        Strategy::RecursivePi => "pi(x) with recursive strategy",
        Strategy::Wheel(_) => "pi(x) with wheel strategy",
    };
    Error::Range {
        what,
        value: x,
        cap,
    }
}

/// `pi(x) = sum_{j=2}^{x} F(j)`; the empty sum is 0 for `x < 2`.
pub fn pi_formula(x: u64, strategy: Strategy) -> Result<u64> {
    pi_formula_with_caps(x, strategy, &Caps::default())
}

/// [`pi_formula`] with explicit caps.
pub fn pi_formula_with_caps(x: u64, strategy: Strategy, caps: &Caps) -> Result<u64> {
    let cap = caps.pi_cap(strategy);
    if x > cap {
        return Err(pi_range_error(strategy, x, cap));
    }
    match strategy {
        Strategy::Wheel(m) => {
            let w = wheel::build_wheel(m)?;
            wheel::pi_wheel_capped(x, &w, cap)
        }
        Strategy::RecursivePi => {
            // The same sum, written as the recurrence pi(j) = pi(j-1) + F(j).
            let mut running_pi = 0;
            for j in 2..=x.max(1) {
                running_pi += char_from_divisors(j, d_sqrt(j));
            }
            Ok(running_pi)
        }
        _ => {
            let mut sum = 0;
            for j in 2..=x.max(1) {
                sum += char_from_divisors(j, d_for(strategy, j));
            }
            Ok(sum)
        }
    }
}

/// The Eq.-style summation bound for the n-th prime: `raw = 2n ln n + 2` in
/// double precision, `limit = floor(raw)`.
pub fn search_bound(n: u64) -> Result<SearchBound> {
    if n < 2 {
        return Err(Error::Domain {
            what: "search bound requires prime index n >= 2",
            value: n,
        });
    }
    if n > SEARCH_BOUND_MAX_INDEX {
        return Err(Error::Range {
            what: "search bound index",
            value: n,
            cap: SEARCH_BOUND_MAX_INDEX,
        });
    }
    let raw = 2.0 * (n as f64) * libm::log(n as f64) + 2.0;
    let limit = libm::floor(raw) as u64;
    debug_assert!(limit >= 4);
    Ok(SearchBound { n, raw, limit })
}

/// The n-th prime via `2 + sum_{k=2}^{limit} (1 - floor(pi(k)/n))`.
///
/// `n = 1` returns 2 directly; the closed form is stated for `n > 1`.
pub fn nth_prime_formula(n: u64, strategy: Strategy) -> Result<u64> {
    Ok(nth_prime_report_with_caps(n, strategy, &Caps::default())?.value)
}

/// [`nth_prime_formula`] with explicit caps.
pub fn nth_prime_formula_with_caps(n: u64, strategy: Strategy, caps: &Caps) -> Result<u64> {
    Ok(nth_prime_report_with_caps(n, strategy, caps)?.value)
}

/// Like [`nth_prime_formula`] but also reports the summation limit, the
/// value of `pi` there and the largest quotient `floor(pi(k)/n)` seen.
pub fn nth_prime_report(n: u64, strategy: Strategy) -> Result<NthPrimeReport> {
    nth_prime_report_with_caps(n, strategy, &Caps::default())
}

pub fn nth_prime_report_with_caps(
    n: u64,
    strategy: Strategy,
    caps: &Caps,
) -> Result<NthPrimeReport> {
    if n == 0 {
        return Err(Error::Domain {
            what: "prime index must be >= 1",
            value: n,
        });
    }
    if n == 1 {
        return Ok(NthPrimeReport {
            value: 2,
            limit: 0,
            pi_at_limit: 0,
            max_quotient: 0,
        });
    }
    let cap = caps.nth_cap(strategy);
    if n > cap {
        return Err(Error::Range {
            what: "nth prime index",
            value: n,
            cap,
        });
    }

    let limit = search_bound(n)?.limit;
    let mut running_pi = 0u64;
    let mut sum = 0u64;
    let mut max_quotient = 0u64;

    let mut add_term = |k: u64, f: u64| -> Result<()> {
        running_pi += f;
        let q = running_pi / n;
        if q > 1 {
            return Err(Error::SlackExhausted {
                n,
                k,
                pi_k: running_pi,
            });
        }
        max_quotient = max_quotient.max(q);
        sum += 1 - q;
        Ok(())
    };

    match strategy {
        Strategy::RecursivePi => {
            // Precompute F(j) for all j <= limit, then accumulate pi once.
            let mut f_table = vec![0u8; limit as usize + 1];
            for j in 2..=limit {
                f_table[j as usize] = char_from_divisors(j, d_sqrt(j)) as u8;
            }
            for k in 2..=limit {
                add_term(k, f_table[k as usize] as u64)?;
            }
        }
        Strategy::Wheel(m) => {
            let w = wheel::build_wheel(m)?;
            let mut candidates = w.candidates(limit).peekable();
            for k in 2..=limit {
                let f = if candidates.peek() == Some(&k) {
                    candidates.next();
                    char_from_divisors(k, d_sqrt(k))
                } else {
                    0
                };
                add_term(k, f)?;
            }
        }
        _ => {
            for k in 2..=limit {
                add_term(k, char_from_divisors(k, d_for(strategy, k)))?;
            }
        }
    }
    drop(add_term);

    // Eq.-(8)-style slack assertion: pi at the limit must stay below 2n.
    if running_pi >= 2 * n {
        return Err(Error::SlackExhausted {
            n,
            k: limit,
            pi_k: running_pi,
        });
    }

    Ok(NthPrimeReport {
        value: 2 + sum,
        limit,
        pi_at_limit: running_pi,
        max_quotient,
    })
}
