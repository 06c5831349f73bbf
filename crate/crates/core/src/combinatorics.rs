//! Exact combinatorial primitives over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Falling factorial `x (x-1) ... (x-n+1)`. Zero when `n > x`, one when `n == 0`.
pub fn falling(x: u64, n: u64) -> BigInt {
    if n > x {
        return BigInt::zero();
    }
    ((x - n + 1)..=x).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Each prefix product C(n-k+i, i) is an integer, so the division is exact.
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Generalized binomial `a (a-1) ... (a-b+1) / b!` for any integer `a`.
pub fn gen_binom(a: i64, b: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..b {
        num *= BigInt::from(a) - i;
    }
    let den = factorial(b);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Generalized derangement number
/// `sum_{i=0}^{t} (-1)^i (lambda-i)!/(lambda-n)! C(t,i)`.
///
/// Counts injections of `n` positions into `lambda` colors where each of `t`
/// designated positions forbids its own (distinct) color. Requires
/// `t <= n <= lambda`.
pub fn gen_derangement(lambda: u64, n: u64, t: u64) -> Result<BigInt> {
    if t > n || n > lambda {
        return Err(Error::invalid(format!(
            "generalized derangement needs t <= n <= lambda, got lambda={lambda}, n={n}, t={t}"
        )));
    }
    let mut total = BigInt::zero();
    for i in 0..=t {
        // (lambda-i)!/(lambda-n)! is the falling factorial of length n-i.
        let term = falling(lambda - i, n - i) * binom(t, i as i64);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
