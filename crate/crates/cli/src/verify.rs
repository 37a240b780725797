//! Full oracle-equivalence and inequality sweep behind `primeformula verify`.

use primeformula_core::formulas::{self, Caps, Strategy};
use primeformula_core::oracle::{self, InequalityReport};
use primeformula_core::wheel;
use primeformula_core::Result;

/// Pass/fail tally for one verification suite.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub detail: Option<String>,
}

impl SuiteOutcome {
    fn clean(name: &'static str, passed: u64) -> Self {
        SuiteOutcome {
            name,
            passed,
            failed: 0,
            detail: None,
        }
    }
}

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

fn report_outcome(name: &'static str, report: &InequalityReport) -> SuiteOutcome {
    let range = if report.hi < report.lo {
        0
    } else {
        report.hi - report.lo + 1
    };
    let failed = report.violations.len() as u64;
    let detail = if report.violations.is_empty() {
        (!report.near_boundary.is_empty())
            .then(|| format!("near-boundary warnings at n = {:?}", report.near_boundary))
    } else {
        Some(format!("violations at n = {:?}", report.violations))
    };
    SuiteOutcome {
        name,
        passed: range - failed,
        failed,
        detail,
    }
}

/// Run every suite over `x <= max_x` and prime indices `n <= max_n`.
/// Degenerate bounds are allowed; empty ranges pass vacuously.
pub fn run(max_x: u64, max_n: u64, caps: &Caps) -> Result<Vec<SuiteOutcome>> {
    let mut outcomes = Vec::new();
    let strategies = all_strategies();
    let table = oracle::build_sieve(max_x.max(2))?;

    // Divisor-count triple agreement.
    {
        let mut passed = 0;
        let mut failed = 0;
        for n in 1..=max_x {
            let expected = oracle::divisor_count_oracle(n)?;
            let ok = formulas::divisor_count_naive(n)? == expected
                && formulas::divisor_count_sqrt(n)? == expected;
            if ok {
                passed += 1;
            } else {
                failed += 1;
            }
        }
        outcomes.push(SuiteOutcome {
            name: "divisor-agreement",
            passed,
            failed,
            detail: None,
        });
    }

    // pi equivalence across every strategy, including all wheel moduli.
    {
        let mut passed = 0;
        let mut failed = 0;
        for x in 0..=max_x {
            let expected = table.pi(x)?;
            let ok = strategies
                .iter()
                .all(|&s| formulas::pi_formula_with_caps(x, s, caps) == Ok(expected));
            if ok {
                passed += 1;
            } else {
                failed += 1;
            }
        }
        outcomes.push(SuiteOutcome {
            name: "pi-equivalence",
            passed,
            failed,
            detail: None,
        });
    }

    // pi(x) - pi(x-1) = F(x).
    {
        let mut passed = 0;
        let mut failed = 0;
        let mut prev = 0;
        for x in 2..=max_x {
            let cur = formulas::pi_formula_with_caps(x, Strategy::SqrtDivisor, caps)?;
            if cur - prev == formulas::prime_char(x, Strategy::SqrtDivisor)? {
                passed += 1;
            } else {
                failed += 1;
            }
            prev = cur;
        }
        outcomes.push(SuiteOutcome {
            name: "monotone-step",
            passed,
            failed,
            detail: None,
        });
    }

    // nth prime equivalence plus the summand-boundedness check.
    {
        let mut passed = 0;
        let mut failed = 0;
        for n in 1..=max_n {
            let expected = oracle::nth_prime_oracle(n)?;
            let ok = [Strategy::SqrtDivisor, Strategy::RecursivePi]
                .iter()
                .all(|&s| {
                    formulas::nth_prime_report_with_caps(n, s, caps)
                        .map(|r| r.value == expected && r.max_quotient <= 1)
                        .unwrap_or(false)
                });
            if ok {
                passed += 1;
            } else {
                failed += 1;
            }
        }
        outcomes.push(SuiteOutcome {
            name: "nth-prime-equivalence",
            passed,
            failed,
            detail: None,
        });
    }

    // Round trips on the primes <= max_x.
    {
        let mut passed = 0;
        let mut failed = 0;
        for &p in table.primes().iter().filter(|&&p| p <= max_x) {
            let n = formulas::pi_formula_with_caps(p, Strategy::SqrtDivisor, caps)?;
            if formulas::nth_prime_formula_with_caps(n, Strategy::RecursivePi, caps) == Ok(p) {
                passed += 1;
            } else {
                failed += 1;
            }
        }
        outcomes.push(SuiteOutcome {
            name: "round-trip",
            passed,
            failed,
            detail: None,
        });
    }

    // Wheel candidate soundness at max_x.
    {
        let mut passed = 0;
        let mut failed = 0;
        for m in wheel::PRIMORIAL_MODULI {
            let w = wheel::build_wheel(m)?;
            let candidates: std::collections::HashSet<u64> = w.candidates(max_x).collect();
            let ok = table
                .primes()
                .iter()
                .filter(|&&p| p <= max_x)
                .all(|p| candidates.contains(p));
            if ok {
                passed += 1;
            } else {
                failed += 1;
            }
        }
        outcomes.push(SuiteOutcome {
            name: "wheel-candidates",
            passed,
            failed,
            detail: None,
        });
    }

    // Inequality sweeps; lemma checks need n_max >= 2.
    if max_n >= 2 {
        let (eq8, eq9) = oracle::check_lemma1(max_n)?;
        outcomes.push(report_outcome("lemma8", &eq8));
        outcomes.push(report_outcome("lemma9", &eq9));
    } else {
        outcomes.push(SuiteOutcome::clean("lemma8", 0));
        outcomes.push(SuiteOutcome::clean("lemma9", 0));
    }
    if max_n >= 1 {
        let (lower, upper) = oracle::check_rosser(max_n)?;
        outcomes.push(report_outcome("rosser_lower", &lower));
        outcomes.push(report_outcome("rosser_upper", &upper));
    } else {
        outcomes.push(SuiteOutcome::clean("rosser_lower", 0));
        outcomes.push(SuiteOutcome::clean("rosser_upper", 0));
    }

    Ok(outcomes)
}
