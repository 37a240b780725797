//! Wheel sieving: restrict the `pi` summation to the base primes of a
//! primorial modulus plus the candidates coprime to it. Candidate density is
//! `phi(m)/m`, which is where the speedup comes from.

use crate::{formulas, Error, Result};
use alloc::vec::Vec;

/// The supported primorial moduli.
pub const PRIMORIAL_MODULI: [u64; 5] = [2, 6, 30, 210, 2310];

const BASE_PRIME_POOL: [u64; 5] = [2, 3, 5, 7, 11];

/// A primorial modulus, its base primes and its coprime residues in `[1, m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wheel {
    modulus: u64,
    base_primes: Vec<u64>,
    residues: Vec<u64>,
}

impl Wheel {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn base_primes(&self) -> &[u64] {
        &self.base_primes
    }

    /// Sorted residues `r` in `[1, m]` with `gcd(r, m) = 1`.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// All summation candidates in `[2, x]` in increasing order: the base
    /// primes, then block by block the values `q*m + r` over the residues.
    /// Contains every prime `<= x`; never contains 1.
    pub fn candidates(&self, x: u64) -> Candidates<'_> {
        Candidates {
            wheel: self,
            x,
            base_pos: 0,
            block_start: 0,
            residue_pos: 0,
            in_base: true,
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Build the wheel for a primorial modulus `m` in {2, 6, 30, 210, 2310}.
pub fn build_wheel(m: u64) -> Result<Wheel> {
    if !PRIMORIAL_MODULI.contains(&m) {
        return Err(Error::BadModulus { value: m });
    }
    let base_primes: Vec<u64> = BASE_PRIME_POOL
        .iter()
        .copied()
        .filter(|p| m % p == 0)
        .collect();
    debug_assert_eq!(base_primes.iter().product::<u64>(), m);
    let residues: Vec<u64> = (1..=m).filter(|&r| gcd(r, m) == 1).collect();
    Ok(Wheel {
        modulus: m,
        base_primes,
        residues,
    })
}

/// Euler's totient via trial-division factorization and the product formula
/// `m * prod_p (1 - 1/p)`.
pub fn totient(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain {
            what: "totient requires m >= 1",
            value: m,
        });
    }
    if m > formulas::DIVISOR_INPUT_CAP {
        return Err(Error::Range {
            what: "totient input",
            value: m,
            cap: formulas::DIVISOR_INPUT_CAP,
        });
    }
    let mut remaining = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            phi = phi / p * (p - 1);
            while remaining % p == 0 {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        phi = phi / remaining * (remaining - 1);
    }
    Ok(phi)
}

/// Iterator over wheel candidates, base primes first, then residue blocks.
pub struct Candidates<'a> {
    wheel: &'a Wheel,
    x: u64,
    base_pos: usize,
    block_start: u64,
    residue_pos: usize,
    in_base: bool,
}

impl Iterator for Candidates<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.in_base {
            if let Some(&p) = self.wheel.base_primes.get(self.base_pos) {
                if p <= self.x {
                    self.base_pos += 1;
                    return Some(p);
                }
            }
            self.in_base = false;
        }
        loop {
            match self.wheel.residues.get(self.residue_pos) {
                Some(&r) => {
                    self.residue_pos += 1;
                    let value = self.block_start + r;
                    if value > self.x {
                        return None;
                    }
                    // 1 is coprime to everything but is not a candidate.
                    if value == 1 {
                        continue;
                    }
                    return Some(value);
                }
                None => {
                    self.residue_pos = 0;
                    self.block_start += self.wheel.modulus;
                    if self.block_start >= self.x {
                        return None;
                    }
                }
            }
        }
    }
}

/// `pi(x)` with wheel pruning: base primes `<= x` are counted directly, all
/// other candidates go through the characteristic function with the sqrt
/// divisor count.
pub fn pi_wheel(x: u64, wheel: &Wheel) -> Result<u64> {
    pi_wheel_capped(x, wheel, formulas::Caps::default().pi)
}

pub fn pi_wheel_capped(x: u64, wheel: &Wheel, cap: u64) -> Result<u64> {
    if x > cap {
        return Err(Error::Range {
            what: "pi(x) with wheel strategy",
            value: x,
            cap,
        });
    }
    let base_count = wheel.base_primes.iter().filter(|&&p| p <= x).count();
    let mut count = base_count as u64;
    for j in wheel.candidates(x).skip(base_count) {
        count += formulas::prime_char(j, formulas::Strategy::SqrtDivisor)?;
    }
    Ok(count)
}
