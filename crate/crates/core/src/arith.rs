//! Small integer helpers shared across modules.

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Smallest `p^k` with `k >= 1` and `p^k >= r`.
pub fn power_at_least(p: i64, r: i64) -> i64 {
    let mut q = p;
    while q < r {
        q *= p;
    }
    q
}

/// Smallest `p^k` with `k >= 1` and `p^k > r`.
pub fn power_above(p: i64, r: i64) -> i64 {
    let mut q = p;
    while q <= r {
        q *= p;
    }
    q
}

pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Floor division for possibly negative numerators.
pub fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}
