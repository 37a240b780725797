//! Input caps, resolved from defaults, environment and explicit overrides.
//!
//! `PRIMEFORMULA_MAX_X` overrides the pi caps (all strategies) and
//! `PRIMEFORMULA_MAX_N` the nth-prime caps. Explicit values (CLI flags)
//! win over the environment.

use primeformula_core::formulas::Caps;

pub const ENV_MAX_X: &str = "PRIMEFORMULA_MAX_X";
pub const ENV_MAX_N: &str = "PRIMEFORMULA_MAX_N";

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

/// Resolve the effective caps. `max_x` / `max_n` come from CLI flags when
/// present; otherwise the environment; otherwise the per-strategy defaults.
pub fn resolve(max_x: Option<u64>, max_n: Option<u64>) -> Caps {
    let mut caps = Caps::default();
    if let Some(x) = max_x.or_else(|| env_u64(ENV_MAX_X)) {
        caps.pi = x;
        caps.pi_naive = x;
    }
    if let Some(n) = max_n.or_else(|| env_u64(ENV_MAX_N)) {
        caps.nth = n;
        caps.nth_naive = n;
    }
    caps
}
