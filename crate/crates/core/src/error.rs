use core::fmt;

/// Errors shared by the formula, wheel and oracle modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input is outside the mathematical domain of the operation
    /// (for example `n = 0` where the formulas start at 1).
    Domain {
        what: &'static str,
        value: u64,
    },
    /// The input is valid but exceeds the configured cap for the chosen
    /// strategy; the cap is reported so callers can raise it deliberately.
    Range {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    /// A wheel modulus that is not one of the supported primorials.
    BadModulus {
        value: u64,
    },
    /// A summand `floor(pi(k)/n)` left `{0, 1}` during an n-th prime
    /// evaluation, i.e. the slack `pi(limit) < 2n` behind the summation
    /// bound did not hold. This is never expected to fire; it exists so a
    /// bound violation fails loudly instead of returning a wrong prime.
    SlackExhausted {
        n: u64,
        k: u64,
        pi_k: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} (got {value})")
            }
            Error::Range { what, value, cap } => {
                write!(f, "range error: {what}: {value} exceeds cap {cap}")
            }
            Error::BadModulus { value } => {
                write!(
                    f,
                    "modulus {value} is not supported; accepted values: 2, 6, 30, 210, 2310"
                )
            }
            Error::SlackExhausted { n, k, pi_k } => {
                write!(
                    f,
                    "summation slack exhausted at k = {k} for n = {n}: pi(k) = {pi_k} >= 2n"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
