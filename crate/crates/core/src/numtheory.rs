//! Integer arithmetic on `u64`: factorization, Euler's totient, divisors, gcd.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted modulus.
pub const MAX_N: u64 = i64::MAX as u64;

/// Prime-power decomposition of `n`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Primes that divide `n` exactly once.
    pub fn simple_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().filter(|f| f.1 == 1).map(|f| f.0)
    }

    /// Number of primes with exponent 1.
    pub fn simple_count(&self) -> usize {
        self.factors.iter().filter(|f| f.1 == 1).count()
    }

    /// Number of primes with exponent at least 2.
    pub fn square_count(&self) -> usize {
        self.factors.iter().filter(|f| f.1 >= 2).count()
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Exponent of `p` in `n` (0 when `p` does not divide `n`).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// φ(n) from the factorization.
    pub fn totient(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
    }

    /// Number of divisors τ(n).
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn check_range(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("n must be at least {min}, got {n}")));
    }
    if n > MAX_N {
        return Err(Error::InvalidArgument(format!("n must be at most {MAX_N}, got {n}")));
    }
    Ok(())
}

/// Factorizes `n ≥ 2` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    check_range(n, 2)?;
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Euler's totient, φ(1) = 1.
pub fn totient(n: u64) -> Result<u64> {
    check_range(n, 1)?;
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)?.totient())
}

/// All `d` with `1 < d < n` and `d | n`, ascending.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    check_range(n, 2)?;
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Greatest common divisor; `gcd(a, 0) = a`, `(0, 0)` is rejected.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
