//! Floor-function arithmetic for the divisor count `d(n)`, the prime
//! characteristic function `F(n)`, the prime-counting function `pi(x)` and
//! the n-th prime `p_n`, in a literal variant plus the sqrt-divisor,
//! recursive-pi and wheel-sieving refinements.
//!
//! The [`oracle`] module is a deliberately independent ground truth (classical
//! sieve of Eratosthenes and trial division); it shares no code with
//! [`formulas`] or [`wheel`] so that equivalence tests actually test something.
//!
//! The crate is `no_std` (alloc required); all IO, the CLI and the benchmark
//! harness live in the companion `primeformula` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

mod error;
pub mod formulas;
pub mod oracle;
pub mod wheel;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
